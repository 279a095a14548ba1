#include "aqstar/quadorder.hpp"

#include <gtest/gtest.h>

#include <set>

#include "aqstar/errors.hpp"
#include "random_inputs.hpp"

using namespace aqstar;
using testing_support::Rng;

TEST(MakeOrder, Decomposition) {
  auto o = make_order(-12);
  EXPECT_EQ(o.fundamental_disc(), -3);
  EXPECT_EQ(o.conductor(), 2);
  EXPECT_FALSE(o.is_maximal());

  auto m = make_order(-3);
  EXPECT_EQ(m.fundamental_disc(), -3);
  EXPECT_TRUE(m.is_maximal());

  auto r = make_order(32);
  EXPECT_EQ(r.fundamental_disc(), 8);
  EXPECT_EQ(r.conductor(), 2);

  EXPECT_TRUE(make_order(-20).is_maximal());
  EXPECT_EQ(make_order(-20).fundamental_disc(), -20);
  EXPECT_EQ(make_order(-75).conductor(), 5);
}

TEST(MakeOrder, RejectsBadDiscriminants) {
  EXPECT_THROW(make_order(-10), InvalidDiscriminant);
  EXPECT_THROW(make_order(0), InvalidDiscriminant);
  EXPECT_THROW(make_order(1), InvalidDiscriminant);
  EXPECT_THROW(make_order(16), InvalidDiscriminant);
  EXPECT_THROW(make_order(7), InvalidDiscriminant);
}

TEST(ElementArith, Examples) {
  auto o4 = make_order(-4);
  // u^2 - 4uv + 5v^2 at (0, 1)
  EXPECT_EQ(o4.norm(OrderElement{0, 1}), 5);

  auto o12 = make_order(-12);
  // 1 + sqrt(-3) = 7 + w with w = -6 + sqrt(-3)
  EXPECT_EQ(parse_order_element(o12, "1+s"), (OrderElement{7, 1}));
  EXPECT_EQ(o12.norm(OrderElement{7, 1}), 4);
  EXPECT_EQ(o12.trace(OrderElement{7, 1}), 2);

  Rng rng(21);
  for (long d : {-3L, -4L, -12L, 5L, 12L}) {
    auto o = make_order(d);
    auto x = testing_support::random_nonzero_element(rng, 20);
    EXPECT_EQ(o.mul(x, OrderElement{1, 0}), x);
  }
}

TEST(ElementArith, NormAndConjugateIdentities) {
  Rng rng(22);
  for (long d : {-3L, -4L, -7L, -12L, -20L, -23L, 5L, 8L, 13L, 32L}) {
    auto o = make_order(d);
    for (int i = 0; i < 200; ++i) {
      auto x = testing_support::random_nonzero_element(rng, 30);
      auto y = testing_support::random_nonzero_element(rng, 30);
      EXPECT_EQ(o.norm(o.mul(x, y)), o.norm(x) * o.norm(y));
      EXPECT_EQ(o.mul(x, y), o.mul(y, x));
      EXPECT_EQ(o.mul(x, o.conj(x)), (OrderElement{o.norm(x), 0}));
      EXPECT_EQ(x + o.conj(x), (OrderElement{o.trace(x), 0}));
      auto xf = FracElement(x);
      EXPECT_EQ(o.mul(xf, o.inverse(xf)), FracElement(1, 0));
    }
  }
}

TEST(ElementParse, SqrtFormRoundTrip) {
  Rng rng(23);
  for (long d : {-3L, -12L, -20L, 32L, -27L}) {
    auto o = make_order(d);
    for (int i = 0; i < 100; ++i) {
      FracElement x(testing_support::uniform(rng, -20, 20), testing_support::uniform(rng, -20, 20),
                    testing_support::uniform(rng, 1, 6));
      auto [p, q] = o.to_sqrt_form(x);
      EXPECT_EQ(o.from_sqrt_form(p, q), x);
      EXPECT_EQ(parse_element(o, o.to_string(x)), x) << o.to_string(x);
    }
  }
}

TEST(ElementParse, Syntaxes) {
  auto o = make_order(-12);
  EXPECT_EQ(parse_element(o, "7,1"), FracElement(7, 1));
  EXPECT_EQ(parse_element(o, "2,4,4"), FracElement(1, 2, 2));
  EXPECT_EQ(parse_element(o, "w"), FracElement(0, 1));
  EXPECT_EQ(parse_element(o, "(1+s)*(1-s)"), FracElement(4, 0));
  EXPECT_EQ(o.to_string(parse_element(o, "(1+s)/2")), "1/2+1/2*s");
  EXPECT_THROW(parse_element(o, "1+t"), ParseError);
  EXPECT_THROW(parse_element(o, "1,2,3,4"), ParseError);
  EXPECT_THROW(parse_element(o, "1/0"), ParseError);
  EXPECT_THROW(parse_order_element(o, "(1+s)/2"), ParseError);
}

TEST(TwoRoot, ElementVerdicts) {
  auto o12 = make_order(-12);
  EXPECT_EQ(two_root_closed_element(o12, parse_element(o12, "(1+s)/2")), TwoRootVerdict::not_applicable);
  auto o32 = make_order(32);
  EXPECT_EQ(two_root_closed_element(o32, parse_element(o32, "s")), TwoRootVerdict::violation);
  for (long d : {-3L, -12L, 32L}) {
    EXPECT_EQ(two_root_closed_element(make_order(d), FracElement(1, 0, 1)), TwoRootVerdict::in_order);
  }
  EXPECT_THROW(two_root_closed_element(o12, FracElement(0, 0)), ZeroElement);
}

TEST(TwoRoot, Scans) {
  EXPECT_TRUE(two_root_scan(make_order(-12), 30).violations.empty());
  for (long d : {-3L, -4L, -7L, -8L, -11L, -20L}) {
    auto scan = two_root_scan(make_order(d), 30);
    EXPECT_GT(scan.fractions_checked, 0u);
    EXPECT_TRUE(scan.violations.empty()) << d;
  }
  // Z[3i] misses i, whose square is -1.
  auto scan = two_root_scan(make_order(-36), 10);
  EXPECT_FALSE(scan.violations.empty());
  EXPECT_THROW(two_root_scan(make_order(32), 10), Unsupported);
}

TEST(Enumerate, UnitGroups) {
  EXPECT_EQ(enumerate_by_norm(make_order(-4), 1).size(), 4u);
  EXPECT_EQ(enumerate_by_norm(make_order(-3), 1).size(), 6u);
  EXPECT_EQ(enumerate_by_norm(make_order(-12), 1).size(), 2u);
  auto units = make_order(-4).units();
  std::set<OrderElement> s(units.begin(), units.end());
  EXPECT_TRUE(s.count(OrderElement{2, 1}));  // i = 2 + w
  EXPECT_TRUE(enumerate_by_norm(make_order(-4), 0).empty());
  EXPECT_THROW(enumerate_by_norm(make_order(5), 3), Unsupported);
}

TEST(Enumerate, MatchesBoxSearch) {
  for (long d : {-3L, -4L, -12L, -20L, -23L}) {
    auto o = make_order(d);
    const long bound = 40;
    std::set<OrderElement> box;
    for (long u = -200; u <= 200; ++u)
      for (long v = -30; v <= 30; ++v) {
        OrderElement x{u, v};
        if (!x.is_zero() && o.norm(x) <= bound) box.insert(x);
      }
    auto listed = enumerate_by_norm(o, bound);
    std::set<OrderElement> got(listed.begin(), listed.end());
    EXPECT_EQ(got.size(), listed.size());  // no duplicates
    EXPECT_EQ(got, box);
    for (const auto& x : listed) EXPECT_TRUE(got.count(-x));
    for (std::size_t i = 1; i < listed.size(); ++i) {
      auto key = [&](const OrderElement& x) { return std::tuple(o.norm(x), x.u, x.v); };
      EXPECT_LT(key(listed[i - 1]), key(listed[i]));
    }
  }
}

TEST(Enumerate, CanonicalAssociates) {
  auto o = make_order(-3);
  auto canon = enumerate_canonical_by_norm(o, 30);
  auto all = enumerate_by_norm(o, 30);
  EXPECT_EQ(canon.size() * 6, all.size());
  for (const auto& x : all) {
    auto c = o.canonical_associate(x);
    EXPECT_LE(c, x);
    EXPECT_EQ(o.norm(c), o.norm(x));
  }
}
