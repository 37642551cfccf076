#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "fitting.hpp"
#include "homomorphism.hpp"
#include "maximals.hpp"
#include "perm_group.hpp"
#include "structure.hpp"

namespace grpkit {

/// Membership test standing in for a saturated formation. Saturation cannot
/// be checked from a predicate; it is a documented property of each instance.
struct FormationPredicate {
  std::string name;
  std::function<bool(const PermGroup&)> member;
  bool contains_supersoluble = true;
};

inline FormationPredicate supersoluble_formation() {
  return {"supersoluble", [](const PermGroup& g) { return is_supersoluble(g); }, true};
}
inline FormationPredicate soluble_formation() {
  return {"soluble", [](const PermGroup& g) { return is_soluble(g); }, true};
}
/// Saturated, but does not contain the supersoluble groups.
inline FormationPredicate nilpotent_formation() {
  return {"nilpotent", [](const PermGroup& g) { return is_nilpotent(g); }, false};
}

inline FormationPredicate formation_by_name(const std::string& name) {
  if (name == "supersoluble") return supersoluble_formation();
  if (name == "soluble") return soluble_formation();
  if (name == "nilpotent") return nilpotent_formation();
  throw InvalidInput("unknown formation '" + name + "' (supersoluble, soluble, nilpotent)");
}

enum class IndexClass { one, prime, composite };

inline const char* to_string(IndexClass c) {
  switch (c) {
    case IndexClass::one: return "one";
    case IndexClass::prime: return "prime";
    default: return "composite";
  }
}

inline IndexClass classify(std::uint64_t v) {
  if (v == 1) return IndexClass::one;
  return is_prime(v) ? IndexClass::prime : IndexClass::composite;
}

struct Witness {
  std::size_t maximal = 0;  // position in the sorted maximal list
  std::uint64_t maximal_order = 0;
  std::uint64_t maximal_index = 0;
  std::uint64_t value = 0;
  IndexClass cls = IndexClass::one;
};

using Detail = std::variant<bool, std::uint64_t, std::string, std::vector<std::uint64_t>>;

struct CriterionResult {
  std::string name;
  bool holds = false;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, Detail>> details;
  std::vector<Perm> failing_maximal_gens;  // generators of the first failing maximal
  bool violation = false;

  void note(std::string key, Detail value) { details.emplace_back(std::move(key), std::move(value)); }
  bool any_composite() const {
    for (const auto& w : witnesses)
      if (w.cls == IndexClass::composite) return true;
    return false;
  }
};

namespace detail {

/// Index |X : X n M| for each maximal M, classified.
inline void index_witnesses(CriterionResult& r, const MaximalSet& ms, const PermGroup& x) {
  for (std::size_t i = 0; i < ms.maximals.size(); ++i) {
    const auto& m = ms.maximals[i];
    std::uint64_t v = x.order() / intersection(x, m.group).order();
    r.witnesses.push_back({i, m.order(), m.index(), v, classify(v)});
  }
}

inline void record_failure(CriterionResult& r, const MaximalSet& ms) {
  for (const auto& w : r.witnesses)
    if (w.cls == IndexClass::composite) {
      r.failing_maximal_gens = ms.maximals[w.maximal].group.generators();
      return;
    }
}

inline void require_normal(const PermGroup& g, const SubgroupHandle& h) {
  if (!h.group.is_subgroup_of(g)) throw NotApplicable("H is not a subgroup of G");
  if (!is_normal(g, h.group)) throw NotApplicable("H is not normal in G");
}

inline void require_contains_supersoluble(const FormationPredicate& f) {
  if (!f.contains_supersoluble)
    throw NotApplicable("formation '" + f.name + "' does not contain the supersoluble groups");
}

inline PermGroup quotient(const PermGroup& g, const SubgroupHandle& h) {
  if (h.order() == g.order()) return PermGroup::trivial(1);
  return coset_action(g, h).image;
}

}  // namespace detail

/// Every maximal subgroup has prime index.
inline CriterionResult huppert(const PermGroup& g) {
  CriterionResult r{"huppert"};
  MaximalSet ms = maximal_subgroups(g);
  for (std::size_t i = 0; i < ms.maximals.size(); ++i) {
    const auto& m = ms.maximals[i];
    r.witnesses.push_back({i, m.order(), m.index(), m.index(), classify(m.index())});
  }
  r.holds = !r.any_composite();
  r.note("group_order", g.order());
  r.note("maximal_count", static_cast<std::uint64_t>(ms.maximals.size()));
  r.note("method", ms.method);
  detail::record_failure(r, ms);
  return r;
}

/// Soluble G: every maximal not containing F(G) has prime index. The
/// alternative form (F(G) <= M or M n F(G) maximal in F(G)) is evaluated too.
inline CriterionResult kramer(const PermGroup& g) {
  if (!is_soluble(g)) throw NotApplicable("kramer: the group is not soluble");
  CriterionResult r{"kramer"};
  MaximalSet ms = maximal_subgroups(g);
  PermGroup f = fitting(g).group;
  bool alt = true;
  for (std::size_t i = 0; i < ms.maximals.size(); ++i) {
    const auto& m = ms.maximals[i];
    bool contains = f.is_subgroup_of(m.group);
    std::uint64_t v = contains ? 1 : m.index();
    r.witnesses.push_back({i, m.order(), m.index(), v, classify(v)});
    if (!contains && !is_prime(f.order() / intersection(f, m.group).order())) alt = false;
  }
  r.holds = !r.any_composite();
  r.note("group_order", g.order());
  r.note("fitting_order", f.order());
  r.note("maximal_count", static_cast<std::uint64_t>(ms.maximals.size()));
  r.note("fitting_intersection_form_holds", alt);
  r.note("forms_agree", alt == r.holds);
  detail::record_failure(r, ms);
  return r;
}

/// |F~(G) : F~(G) n M| is 1 or a prime for every maximal M.
inline CriterionResult li_li(const PermGroup& g) {
  CriterionResult r{"lili"};
  MaximalSet ms = maximal_subgroups(g);
  PermGroup t = shemetkov_tilde_fitting(g).group;
  detail::index_witnesses(r, ms, t);
  r.holds = !r.any_composite();
  r.note("group_order", g.order());
  r.note("tilde_fitting_order", t.order());
  r.note("maximal_count", static_cast<std::uint64_t>(ms.maximals.size()));
  detail::record_failure(r, ms);
  return r;
}

/// G/H in the formation and |F~(H) : F~(H) n M| is 1 or a prime for every
/// maximal M of G.
inline CriterionResult conjecture1_hypothesis(const PermGroup& g, const SubgroupHandle& h,
                                              const FormationPredicate& f) {
  detail::require_normal(g, h);
  detail::require_contains_supersoluble(f);
  CriterionResult r{"conjecture1"};
  PermGroup q = detail::quotient(g, h);
  bool in_f = f.member(q);
  MaximalSet ms = maximal_subgroups(g);
  PermGroup t = shemetkov_tilde_fitting(h.group).group;
  detail::index_witnesses(r, ms, t);
  r.holds = in_f && !r.any_composite();
  r.note("formation", f.name);
  r.note("group_order", g.order());
  r.note("normal_subgroup_order", h.order());
  r.note("quotient_order", q.order());
  r.note("quotient_in_formation", in_f);
  r.note("tilde_fitting_order", t.order());
  r.note("maximal_count", static_cast<std::uint64_t>(ms.maximals.size()));
  detail::record_failure(r, ms);
  return r;
}

/// The hypothesis above plus Phi(G) n H <= Phi(H). When all of it holds, G
/// must lie in the formation; otherwise `violation` is set.
inline CriterionResult theorem2_check(const PermGroup& g, const SubgroupHandle& h,
                                      const FormationPredicate& f) {
  CriterionResult r = conjecture1_hypothesis(g, h, f);
  r.name = "theorem2";
  bool index_part = r.holds;
  PermGroup phi_g = frattini(g).group;
  PermGroup phi_h = frattini(h.group).group;
  PermGroup meet = intersection(phi_g, h.group);
  bool frattini_ok = meet.is_subgroup_of(phi_h);
  bool hypothesis = index_part && frattini_ok;
  r.note("conjecture_hypothesis_holds", index_part);
  r.note("frattini_G_order", phi_g.order());
  r.note("frattini_H_order", phi_h.order());
  r.note("frattini_G_meet_H_order", meet.order());
  r.note("frattini_condition", frattini_ok);
  r.note("hypothesis", hypothesis);
  if (hypothesis) {
    bool conclusion = f.member(g);
    r.note("conclusion", conclusion);
    r.violation = !conclusion;
    r.holds = conclusion;
  } else {
    r.holds = false;
  }
  r.note("violation", r.violation);
  return r;
}

/// Soluble normal H with G/H in the formation: for every maximal M of G,
/// F(H) <= M or F(H) n M is maximal in F(H).
inline CriterionResult wang(const PermGroup& g, const SubgroupHandle& h,
                            const FormationPredicate& f) {
  detail::require_normal(g, h);
  if (!is_soluble(h.group)) throw NotApplicable("wang: H is not soluble");
  detail::require_contains_supersoluble(f);
  CriterionResult r{"wang"};
  PermGroup q = detail::quotient(g, h);
  bool in_f = f.member(q);
  MaximalSet ms = maximal_subgroups(g);
  PermGroup fh = fitting(h.group).group;
  std::vector<PermGroup> fh_max;
  bool brute = fh.order() <= limits().brute_bound;
  if (brute) fh_max = maximal_subgroups_brute(fh);
  for (std::size_t i = 0; i < ms.maximals.size(); ++i) {
    const auto& m = ms.maximals[i];
    PermGroup meet = intersection(fh, m.group);
    std::uint64_t v = fh.order() / meet.order();
    IndexClass cls = IndexClass::one;
    if (v != 1) {
      bool maximal = false;
      if (brute) {
        for (const auto& x : fh_max)
          if (x.same_elements(meet)) maximal = true;
      } else {
        maximal = is_prime(v);
      }
      cls = maximal ? IndexClass::prime : IndexClass::composite;
    }
    r.witnesses.push_back({i, m.order(), m.index(), v, cls});
  }
  r.holds = in_f && !r.any_composite();
  r.note("formation", f.name);
  r.note("quotient_order", q.order());
  r.note("quotient_in_formation", in_f);
  r.note("fitting_H_order", fh.order());
  r.note("maximal_count", static_cast<std::uint64_t>(ms.maximals.size()));
  detail::record_failure(r, ms);
  return r;
}

struct ProbeResult {
  std::string step;
  bool holds = false;
  std::vector<std::pair<std::string, Detail>> evidence;
};

/// Intermediate facts behind theorem2_check, evaluated on the pair reduced
/// modulo Phi(H):
/// (a) Phi of the reduced H is trivial, (b) its F~ is abelian, (c) that F~ is
/// a direct product of prime-order minimal normal subgroups of the reduced G,
/// (d) the reduced G modulo F~ lies in the formation.
inline std::vector<ProbeResult> theorem2_proofstep_probes(const PermGroup& g,
                                                          const SubgroupHandle& h,
                                                          const FormationPredicate& f) {
  CriterionResult hyp = theorem2_check(g, h, f);
  bool hypothesis = false;
  for (const auto& [k, v] : hyp.details)
    if (k == "hypothesis") hypothesis = std::get<bool>(v);
  if (!hypothesis) throw NotApplicable("proof-step probes need the theorem hypothesis to hold");

  PermGroup phi_h = frattini(h.group).group;
  PermGroup gr = g, hr = h.group;
  if (!phi_h.is_trivial()) {
    CosetAction q = coset_action(g, SubgroupHandle{g, phi_h});
    gr = q.image;
    hr = q.hom.image_of(h.group);
  }
  std::vector<ProbeResult> out;

  PermGroup phi_r = frattini(hr).group;
  out.push_back({"a", phi_r.is_trivial(),
                 {{"frattini_H_order", phi_h.order()}, {"reduced_frattini_order", phi_r.order()}}});

  PermGroup t = shemetkov_tilde_fitting(hr).group;
  out.push_back({"b", is_abelian(t), {{"tilde_fitting_order", t.order()}}});

  std::vector<std::uint64_t> factors;
  bool prime_orders = true;
  PermGroup cur = PermGroup::trivial(gr.degree());
  for (const auto& n : minimal_normal_subgroups(gr)) {
    if (!n.group.is_subgroup_of(t) || n.group.is_subgroup_of(cur)) continue;
    std::vector<Perm> gens = cur.generators();
    for (const auto& x : n.group.generators()) gens.push_back(x);
    cur = PermGroup(gr.degree(), std::move(gens));
    factors.push_back(n.order());
    if (!is_prime(n.order())) prime_orders = false;
  }
  std::uint64_t product = 1;
  for (auto x : factors) product *= x;
  bool direct = cur.same_elements(t) && product == t.order();
  out.push_back({"c", prime_orders && direct,
                 {{"factor_orders", factors}, {"direct_product", direct}}});

  PermGroup q = detail::quotient(gr, SubgroupHandle{gr, t});
  out.push_back({"d", f.member(q), {{"quotient_order", q.order()}, {"formation", f.name}}});
  return out;
}

}  // namespace grpkit
