#include <gtest/gtest.h>

#include <map>

#include <grpkit/atlas.hpp>
#include <grpkit/counterexample.hpp>
#include <grpkit/homomorphism.hpp>
#include <grpkit/maximals.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace grpkit;

namespace {

const PermGroup& g(const char* name) { return atlas_lookup(name).group; }

const CounterexampleObjects& cx() {
  static const CounterexampleObjects o = build_counterexample(0);
  return o;
}

std::map<std::uint64_t, std::size_t> index_histogram(const std::vector<SubgroupHandle>& ms) {
  std::map<std::uint64_t, std::size_t> h;
  for (const auto& m : ms) ++h[m.index()];
  return h;
}

std::set<oracle::ElementSet> as_sets(const std::vector<PermGroup>& gs) {
  std::set<oracle::ElementSet> out;
  for (const auto& x : gs) out.insert(oracle::as_set(x));
  return out;
}

}  // namespace

TEST(Affine, Constructions) {
  AffineGroup gw = affine_semidirect_product(cx().w.module);
  EXPECT_EQ(gw.group.degree(), 625u);
  EXPECT_EQ(gw.group.order(), 37500u);
  EXPECT_EQ(gw.vectors.order(), 625u);
  EXPECT_EQ(gw.complement.order(), 60u);
  AffineGroup h = affine_semidirect_product(cx().r);
  EXPECT_EQ(h.group.degree(), 125u);
  EXPECT_EQ(h.group.order(), 7500u);
  FpModule triv(PermGroup::trivial(1), 7, 1, {});
  AffineGroup cp = affine_semidirect_product(triv);
  EXPECT_EQ(cp.group.order(), 7u);
  EXPECT_TRUE(is_abelian(cp.group));
}

TEST(Affine, RejectsUnfaithfulModules) {
  EXPECT_THROW(affine_semidirect_product(factor_module(cx().w.module, cx().rad_w).module), NotApplicable);
}

TEST(Maximals, AllSubgroupsMatchOracle) {
  EXPECT_EQ(all_subgroups(g("S3")).size(), 6u);
  EXPECT_EQ(all_subgroups(g("C4")).size(), 3u);
  EXPECT_EQ(all_subgroups(g("A4")).size(), 10u);
  for (const auto& e : atlas()) {
    if (e.group.order() > 60) continue;
    auto subs = all_subgroups(e.group);
    EXPECT_EQ(subs.size(), oracle::subgroups(e.group).size()) << e.name;
  }
}

TEST(Maximals, BruteMatchesOracle) {
  for (const auto& e : atlas()) {
    if (e.group.order() > 120) continue;
    auto ref = oracle::maximal_subgroups(e.group);
    EXPECT_EQ(as_sets(maximal_subgroups_brute(e.group)), std::set<oracle::ElementSet>(ref.begin(), ref.end()))
        << e.name;
  }
}

TEST(Maximals, KnownCounts) {
  auto a5 = maximal_subgroups(g("A5")).maximals;
  EXPECT_EQ(a5.size(), 21u);
  EXPECT_EQ(index_histogram(a5), (std::map<std::uint64_t, std::size_t>{{5, 5}, {6, 6}, {10, 10}}));
  auto c3 = maximal_subgroups(g("C3")).maximals;
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0].order(), 1u);
}

TEST(Maximals, CounterexampleGroup) {
  MaximalSet ms = maximal_subgroups(cx().g.group);
  EXPECT_EQ(ms.method, "split-extension");
  ASSERT_EQ(ms.maximals.size(), 22u);
  EXPECT_EQ(index_histogram(ms.maximals),
            (std::map<std::uint64_t, std::size_t>{{5, 6}, {6, 6}, {10, 10}}));
  std::size_t containing_w = 0, is_h = 0;
  for (const auto& m : ms.maximals) {
    if (cx().g.vectors.group.is_subgroup_of(m.group)) ++containing_w;
    if (m.group.same_elements(cx().h.group)) ++is_h;
  }
  EXPECT_EQ(containing_w, 21u);
  EXPECT_EQ(is_h, 1u);
}

TEST(Maximals, SplitPathAgreesWithBrute) {
  for (const auto& a : {fixtures::s3_split(), fixtures::a4_split(), fixtures::d10_split()}) {
    EXPECT_EQ(as_sets(maximal_subgroups_split(a.group)), as_sets(maximal_subgroups_brute(a.group)))
        << a.group.order();
  }
  EXPECT_EQ(fixtures::s3_split().group.order(), 6u);
  EXPECT_EQ(fixtures::a4_split().group.order(), 12u);
  EXPECT_EQ(fixtures::d10_split().group.order(), 10u);
}

TEST(Maximals, SplitPathIsSeedIndependent) {
  auto base = as_sets(maximal_subgroups_split(fixtures::a4_split().group, 0));
  for (std::uint64_t seed = 1; seed < 5; ++seed)
    EXPECT_EQ(as_sets(maximal_subgroups_split(fixtures::a4_split().group, seed)), base);
}

TEST(Complements, SmallCases) {
  const PermGroup& v4 = g("V4");
  PermGroup a(4, {parse_cycles("(1 2)(3 4)", 4)});
  PermGroup k0(4, {parse_cycles("(1 3)(2 4)", 4)});
  auto cs = complements_to_abelian_normal(v4, SubgroupHandle{v4, a}, SubgroupHandle{v4, k0});
  EXPECT_EQ(cs.size(), 2u);

  const PermGroup& s3 = g("S3");
  PermGroup c3(3, {parse_cycles("(1 2 3)", 3)});
  PermGroup c2(3, {parse_cycles("(1 2)", 3)});
  auto cs3 = complements_to_abelian_normal(s3, SubgroupHandle{s3, c3}, SubgroupHandle{s3, c2});
  EXPECT_EQ(cs3.size(), 3u);
  std::size_t oracle_count = 0;
  for (const auto& s : oracle::subgroups(s3))
    if (s.size() == 2) ++oracle_count;
  EXPECT_EQ(cs3.size(), oracle_count);

  EXPECT_THROW(complements_to_abelian_normal(s3, SubgroupHandle{s3, c2}, SubgroupHandle{s3, c3}),
               InvalidInput);
}

TEST(Complements, QuotientByRadical) {
  PermGroup r(cx().g.group.degree(), {});
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < cx().rad_w.dim(); ++i)
    gens.push_back(cx().g.group.split_info()->translation(cx().rad_w.basis.row(i)));
  r = PermGroup(cx().g.group.degree(), gens);
  CosetAction q = coset_action(cx().g.group, SubgroupHandle{cx().g.group, r});
  ASSERT_EQ(q.image.order(), 300u);
  PermGroup a = q.hom.image_of(cx().g.vectors.group);
  PermGroup k = q.hom.image_of(cx().g.complement.group);
  EXPECT_EQ(a.order(), 5u);
  EXPECT_EQ(k.order(), 60u);
  auto cs = complements_to_abelian_normal(q.image, SubgroupHandle{q.image, a}, SubgroupHandle{q.image, k});
  EXPECT_EQ(cs.size(), 1u);
}

TEST(Frattini, Examples) {
  EXPECT_EQ(frattini(g("S4")).order(), 1u);
  EXPECT_EQ(frattini(g("C4")).order(), 2u);
  EXPECT_EQ(frattini(g("Q8")).order(), 2u);
  SubgroupHandle phi = frattini(cx().g.group);
  EXPECT_EQ(phi.order(), 125u);
  EXPECT_EQ(frattini(cx().h.group).order(), 1u);
  for (const auto& e : atlas()) {
    if (e.group.order() > 120) continue;
    auto all = oracle::elements(e.group);
    EXPECT_EQ(oracle::as_set(frattini(e.group).group),
              oracle::intersect_all(oracle::maximal_subgroups(e.group), all))
        << e.name;
  }
}

TEST(Frattini, NormalAndWithoutComplementedMinimalNormals) {
  for (const auto& e : atlas()) {
    PermGroup phi = frattini(e.group).group;
    EXPECT_TRUE(is_normal(e.group, phi)) << e.name;
    for (const auto& n : minimal_normal_subgroups(e.group)) {
      if (!n.group.is_subgroup_of(phi)) continue;
      for (const auto& m : maximal_subgroups(e.group).maximals)
        EXPECT_TRUE(n.group.is_subgroup_of(m.group)) << e.name;
    }
  }
}
