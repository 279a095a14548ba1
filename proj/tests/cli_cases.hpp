#pragma once

// One representative invocation per subcommand, shared by the CLI tests and
// the acceptance binary.

#include <sstream>
#include <string>
#include <vector>

#include "aqstar/cli.hpp"

namespace cli_cases {

struct Case {
  std::string command;
  std::vector<std::string> args;
};

inline const std::vector<Case>& all() {
  static const std::vector<Case> cases = {
      {"order-info", {"--disc", "-12"}},
      {"star-check", {"--disc", "-12", "--a", "1+1*s", "--b", "2"}},
      {"star-scan", {"--disc", "-12", "--norm-bound", "10"}},
      {"aq-report", {"--disc", "-20", "--a", "2", "--b", "1+1*s"}},
      {"syzygetic", {"--disc", "-12", "--a", "1+s", "--b", "2"}},
      {"stable-check", {"--disc", "-12", "--gens", "2;1+s"}},
      {"divisorial-check", {"--disc", "-20", "--gens", "2", "--gens", "1+s"}},
      {"four-term", {"--disc", "-20", "--a", "2", "--b", "1+s", "--c", "3", "--d", "1-s"}},
      {"two-root-scan", {"--disc", "-36", "--norm-bound", "10"}},
      {"zx-demo", {}},
      {"lemma1-check", {"--samples", "20", "--count", "10", "--seed", "3"}},
      {"cor16-report", {"--a", "x", "--b", "2"}},
      {"example14", {"--samples", "30", "--seed", "11"}},
  };
  return cases;
}

struct Outcome {
  int code;
  std::string out, err;
};

inline Outcome run(const std::vector<std::string>& args) {
  std::vector<std::string> argv{"aqstar"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = aqstar::cli::run(argv, out, err);
  return {code, out.str(), err.str()};
}

inline Outcome run(const Case& c, const std::string& format) {
  std::vector<std::string> args{c.command};
  args.insert(args.end(), c.args.begin(), c.args.end());
  args.push_back("--format");
  args.push_back(format);
  return run(args);
}

}  // namespace cli_cases
