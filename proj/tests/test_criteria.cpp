#include <gtest/gtest.h>

#include <grpkit/atlas.hpp>
#include <grpkit/corpus.hpp>
#include <grpkit/counterexample.hpp>
#include <grpkit/criteria.hpp>

#include "oracles.hpp"

using namespace grpkit;

namespace {

const PermGroup& g(const char* name) { return atlas_lookup(name).group; }

SubgroupHandle sub(const PermGroup& parent, std::initializer_list<const char*> gens) {
  std::vector<Perm> v;
  for (const char* x : gens) v.push_back(parse_cycles(x, parent.degree()));
  return SubgroupHandle{parent, PermGroup(parent.degree(), v)};
}

bool detail_bool(const CriterionResult& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return std::get<bool>(v);
  ADD_FAILURE() << "missing detail " << key;
  return false;
}

const CounterexampleObjects& cx() {
  static const CounterexampleObjects o = build_counterexample(0);
  return o;
}

}  // namespace

TEST(Formation, Predicates) {
  EXPECT_TRUE(supersoluble_formation().member(g("S3")));
  EXPECT_FALSE(supersoluble_formation().member(g("A4")));
  EXPECT_TRUE(soluble_formation().member(g("S4")));
  EXPECT_FALSE(nilpotent_formation().member(g("S3")));
  EXPECT_THROW(formation_by_name("abelian"), InvalidInput);
  // isomorphic copies of S3 evaluate alike
  PermGroup s3b = sub(g("D12"), {"(1 3 5)(2 4 6)", "(2 6)(3 5)"}).group;
  EXPECT_EQ(s3b.order(), 6u);
  EXPECT_EQ(supersoluble_formation().member(s3b), supersoluble_formation().member(g("S3")));
}

TEST(Formation, QuotientClosedOnCorpus) {
  for (const auto& e : atlas()) {
    if (!supersoluble_formation().member(e.group)) continue;
    for (const auto& n : normal_subgroups(e.group)) {
      PermGroup q = coset_action(e.group, SubgroupHandle{e.group, n}).image;
      EXPECT_TRUE(supersoluble_formation().member(q)) << e.name;
    }
  }
}

TEST(Criteria, IndexClassification) {
  EXPECT_EQ(classify(1), IndexClass::one);
  EXPECT_EQ(classify(7), IndexClass::prime);
  EXPECT_EQ(classify(4), IndexClass::composite);
}

TEST(Criteria, Huppert) {
  EXPECT_TRUE(huppert(g("S3")).holds);
  auto a4 = huppert(g("A4"));
  EXPECT_FALSE(a4.holds);
  bool index4 = false;
  for (const auto& w : a4.witnesses) index4 = index4 || (w.maximal_index == 4 && w.cls == IndexClass::composite);
  EXPECT_TRUE(index4);
  EXPECT_FALSE(a4.failing_maximal_gens.empty());
  EXPECT_FALSE(huppert(g("A5")).holds);
}

TEST(Criteria, Kramer) {
  EXPECT_FALSE(kramer(g("S4")).holds);
  EXPECT_TRUE(kramer(g("S3")).holds);
  EXPECT_TRUE(kramer(g("Q8")).holds);
  EXPECT_TRUE(kramer(g("D8")).holds);
  EXPECT_THROW(kramer(g("A5")), NotApplicable);
}

TEST(Criteria, LiLi) {
  auto s4 = li_li(g("S4"));
  EXPECT_FALSE(s4.holds);
  bool index4 = false;
  for (const auto& w : s4.witnesses) index4 = index4 || (w.value == 4 && w.maximal_order == 6);
  EXPECT_TRUE(index4);
  EXPECT_TRUE(li_li(g("S3")).holds);
  auto a5 = li_li(g("A5"));
  EXPECT_FALSE(a5.holds);
  bool six = false;
  for (const auto& w : a5.witnesses) six = six || w.value == 6;
  EXPECT_TRUE(six);
}

TEST(Criteria, EquivalencesAgainstOracle) {
  for (const auto& e : atlas()) {
    bool ss = oracle::is_supersoluble(e.group);
    EXPECT_EQ(huppert(e.group).holds, ss) << e.name;
    EXPECT_EQ(li_li(e.group).holds, ss) << e.name;
    if (e.soluble) EXPECT_EQ(kramer(e.group).holds, ss) << e.name;
  }
}

TEST(Criteria, IndexHypothesis) {
  auto r = conjecture1_hypothesis(cx().g.group, SubgroupHandle{cx().g.group, cx().h.group},
                                  supersoluble_formation());
  EXPECT_TRUE(r.holds);
  for (const auto& w : r.witnesses) EXPECT_EQ(w.value, 1u);
  EXPECT_EQ(r.witnesses.size(), 22u);

  for (const auto& e : atlas()) {
    auto whole = conjecture1_hypothesis(e.group, SubgroupHandle::whole(e.group), supersoluble_formation());
    EXPECT_EQ(whole.holds, li_li(e.group).holds) << e.name;
  }
  auto s4 = conjecture1_hypothesis(g("S4"), sub(g("S4"), {"(1 2)(3 4)", "(1 3)(2 4)"}),
                                   supersoluble_formation());
  EXPECT_FALSE(s4.holds);
  EXPECT_THROW(conjecture1_hypothesis(g("S4"), sub(g("S4"), {"(1 2)"}), supersoluble_formation()),
               NotApplicable);
  EXPECT_THROW(conjecture1_hypothesis(g("S4"), SubgroupHandle::whole(g("S4")), nilpotent_formation()),
               NotApplicable);
}

TEST(Criteria, FrattiniStrengthenedCheck) {
  auto r = theorem2_check(cx().g.group, SubgroupHandle{cx().g.group, cx().h.group},
                          supersoluble_formation());
  EXPECT_TRUE(detail_bool(r, "conjecture_hypothesis_holds"));
  EXPECT_FALSE(detail_bool(r, "frattini_condition"));
  EXPECT_FALSE(detail_bool(r, "hypothesis"));
  EXPECT_FALSE(r.violation);
  for (const char* name : {"S3", "D8", "C12", "S3xS3"}) {
    auto w = theorem2_check(g(name), SubgroupHandle::whole(g(name)), supersoluble_formation());
    EXPECT_TRUE(w.holds) << name;
    EXPECT_TRUE(detail_bool(w, "conclusion")) << name;
  }
}

TEST(Criteria, Wang) {
  auto s4 = wang(g("S4"), sub(g("S4"), {"(1 2 3)", "(1 2)(3 4)"}), supersoluble_formation());
  EXPECT_FALSE(s4.holds);
  EXPECT_TRUE(wang(g("S3"), sub(g("S3"), {"(1 2 3)"}), supersoluble_formation()).holds);
  EXPECT_TRUE(wang(g("Q8"), SubgroupHandle::whole(g("Q8")), supersoluble_formation()).holds);
  EXPECT_THROW(wang(g("A5"), SubgroupHandle::whole(g("A5")), supersoluble_formation()), NotApplicable);
}

TEST(Criteria, WangConverseOnCorpus) {
  for (const auto& e : atlas()) {
    if (!e.supersoluble) continue;
    for (const auto& n : normal_subgroups(e.group)) {
      SubgroupHandle h{e.group, n};
      EXPECT_TRUE(wang(e.group, h, supersoluble_formation()).holds) << e.name << " |H|=" << n.order();
    }
  }
}

TEST(Criteria, ProofStepProbes) {
  auto s3 = theorem2_proofstep_probes(g("S3"), sub(g("S3"), {"(1 2 3)"}), supersoluble_formation());
  ASSERT_EQ(s3.size(), 4u);
  for (const auto& p : s3) EXPECT_TRUE(p.holds) << p.step;
  auto d8 = theorem2_proofstep_probes(g("D8"), SubgroupHandle::whole(g("D8")), supersoluble_formation());
  for (const auto& p : d8) EXPECT_TRUE(p.holds) << p.step;
  EXPECT_THROW(theorem2_proofstep_probes(cx().g.group, SubgroupHandle{cx().g.group, cx().h.group},
                                         supersoluble_formation()),
               NotApplicable);
}

TEST(Atlas, Entries) {
  EXPECT_EQ(atlas().size(), 20u);
  for (const auto& e : atlas()) EXPECT_EQ(e.group.order(), e.order) << e.name;
  EXPECT_EQ(atlas_lookup("sl(2,3)").order, 24u);
  EXPECT_THROW(atlas_lookup("M11"), InvalidInput);
  EXPECT_FALSE(atlas_lookup("S4").supersoluble);
  EXPECT_TRUE(atlas_lookup("Q8").supersoluble);
  EXPECT_TRUE(atlas_lookup("C7:C3").supersoluble);
}
