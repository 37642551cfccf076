#include <gtest/gtest.h>

#include <grpkit/atlas.hpp>
#include <grpkit/corpus.hpp>
#include <grpkit/counterexample.hpp>
#include <grpkit/fitting.hpp>
#include <grpkit/structure.hpp>

#include "oracles.hpp"

using namespace grpkit;

namespace {

const PermGroup& g(const char* name) { return atlas_lookup(name).group; }

PermGroup sub(const PermGroup& parent, std::initializer_list<const char*> gens) {
  std::vector<Perm> v;
  for (const char* x : gens) v.push_back(parse_cycles(x, parent.degree()));
  return PermGroup(parent.degree(), v);
}

const CounterexampleObjects& cx() {
  static const CounterexampleObjects o = build_counterexample(0);
  return o;
}

}  // namespace

TEST(Structure, Centralizer) {
  PermGroup c3 = sub(g("S3"), {"(1 2 3)"});
  EXPECT_TRUE(centralizer(g("S3"), c3).group.same_elements(c3));
  for (const auto& e : atlas()) {
    if (e.group.order() > 120) continue;
    auto all = oracle::elements(e.group);
    PermGroup t = shemetkov_tilde_fitting(e.group).group;
    EXPECT_EQ(oracle::as_set(centralizer(e.group, t).group), oracle::centralizer(all, oracle::elements(t)))
        << e.name;
  }
}

TEST(Structure, NormalClosureAndCore) {
  EXPECT_EQ(normal_closure(g("A5"), parse_cycles("(1 2)(3 4)", 5)).order(), 60u);
  PermGroup s3 = sub(g("S4"), {"(1 2)", "(1 2 3)"});
  EXPECT_EQ(core(g("S4"), s3).order(), 1u);
  PermGroup d8 = sub(g("S4"), {"(1 2 3 4)", "(1 3)"});
  EXPECT_EQ(core(g("S4"), d8).order(), 4u);
}

TEST(Structure, Sylow) {
  EXPECT_EQ(sylow(g("S4"), 2).order(), 8u);
  EXPECT_EQ(sylow(g("A5"), 5).order(), 5u);
  EXPECT_EQ(sylow(g("C6"), 3).order(), 3u);
  EXPECT_EQ(sylow(g("A5"), 2).order(), 4u);
  EXPECT_EQ(sylow(g("SL(2,3)"), 2).order(), 8u);
  EXPECT_EQ(sylow(cx().g.group, 5).order(), 3125u);
}

TEST(Structure, NormalSubgroupsMatchOracle) {
  for (const auto& e : atlas()) {
    auto lib = normal_subgroups(e.group);
    auto ref = oracle::normal_subgroups(e.group);
    ASSERT_EQ(lib.size(), ref.size()) << e.name;
    for (const auto& n : lib)
      EXPECT_NE(std::find(ref.begin(), ref.end(), oracle::as_set(n)), ref.end()) << e.name;
  }
}

TEST(Structure, MinimalNormalAndSocle) {
  auto s4 = minimal_normal_subgroups(g("S4"));
  ASSERT_EQ(s4.size(), 1u);
  EXPECT_EQ(s4[0].order(), 4u);
  PermGroup a5 = g("A5");
  auto aa = direct_product(a5, a5);
  auto mins = minimal_normal_subgroups(aa.group);
  ASSERT_EQ(mins.size(), 2u);
  EXPECT_EQ(mins[0].order(), 60u);
  EXPECT_EQ(mins[1].order(), 60u);
  auto gm = minimal_normal_subgroups(cx().g.group);
  ASSERT_EQ(gm.size(), 1u);
  EXPECT_EQ(gm[0].order(), 125u);
  EXPECT_EQ(socle(g("A5")).order(), 60u);
  EXPECT_EQ(socle(g("S4")).order(), 4u);
  EXPECT_EQ(socle(g("C6")).order(), 6u);
}

TEST(Structure, Predicates) {
  EXPECT_TRUE(is_soluble(g("S4")));
  EXPECT_FALSE(is_soluble(g("A5")));
  EXPECT_FALSE(is_soluble(cx().g.group));
  EXPECT_TRUE(is_nilpotent(g("Q8")));
  EXPECT_FALSE(is_nilpotent(g("S3")));
  EXPECT_TRUE(is_supersoluble(g("S3")));
  EXPECT_FALSE(is_supersoluble(g("A4")));
  EXPECT_FALSE(is_supersoluble(cx().g.group));
  for (const auto& e : atlas()) {
    EXPECT_EQ(is_soluble(e.group), e.soluble) << e.name;
    EXPECT_EQ(is_supersoluble(e.group), e.supersoluble) << e.name;
    EXPECT_EQ(is_supersoluble(e.group), oracle::is_supersoluble(e.group)) << e.name;
  }
}

TEST(Structure, ChiefSeries) {
  EXPECT_EQ(chief_series(g("S4")).factor_orders, (std::vector<std::uint64_t>{4, 3, 2}));
  auto c12 = chief_series(g("C12")).factor_orders;
  std::sort(c12.begin(), c12.end());
  EXPECT_EQ(c12, (std::vector<std::uint64_t>{2, 2, 3}));
  EXPECT_EQ(chief_series(g("A5")).factor_orders, (std::vector<std::uint64_t>{60}));
  for (const auto& e : atlas()) {
    auto lib = chief_series(e.group).factor_orders;
    auto ref = oracle::chief_factor_orders(e.group);
    std::sort(lib.begin(), lib.end());
    std::sort(ref.begin(), ref.end());
    EXPECT_EQ(lib, ref) << e.name;
  }
}

TEST(Structure, FittingSubgroups) {
  EXPECT_EQ(fitting(g("S4")).order(), 4u);
  EXPECT_EQ(fitting(g("A5")).order(), 1u);
  EXPECT_EQ(fitting(cx().h.group).order(), 125u);
  EXPECT_EQ(generalized_fitting_star(g("A5")).order(), 60u);
  EXPECT_EQ(generalized_fitting_star(g("S4")).order(), 4u);
  EXPECT_EQ(generalized_fitting_star(g("D8")).order(), 8u);
  EXPECT_EQ(shemetkov_tilde_fitting(g("S4")).order(), 4u);
  EXPECT_EQ(shemetkov_tilde_fitting(g("Q8")).order(), 8u);
  EXPECT_EQ(shemetkov_tilde_fitting(cx().h.group).order(), 125u);
}

TEST(Structure, PCoresAreLargestNormalPSubgroups) {
  for (const auto& e : atlas()) {
    for (auto p : prime_divisors(e.group.order())) {
      std::size_t best = 1;
      for (const auto& n : oracle::normal_subgroups(e.group))
        if (p_part(n.size(), p) == n.size()) best = std::max(best, n.size());
      EXPECT_EQ(p_core(e.group, p).order(), best) << e.name << " p=" << p;
    }
  }
}

TEST(Structure, FittingIsLargestNormalNilpotent) {
  for (const auto& e : atlas()) {
    std::uint64_t best = 1;
    for (const auto& n : normal_subgroups(e.group))
      if (is_nilpotent(n)) best = std::max(best, n.order());
    EXPECT_EQ(fitting(e.group).order(), best) << e.name;
  }
}
