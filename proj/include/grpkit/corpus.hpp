#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "atlas.hpp"
#include "criteria.hpp"
#include "errors.hpp"
#include "fitting.hpp"
#include "structure.hpp"

namespace grpkit {

/// Every normal subgroup of g, trivial first and g last, sorted by order.
/// Built as joins of normal closures of conjugacy classes.
inline std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  std::vector<PermGroup> out{PermGroup::trivial(g.degree())};
  auto add = [&](PermGroup n) {
    for (const auto& x : out)
      if (x.same_elements(n)) return false;
    out.push_back(std::move(n));
    return true;
  };
  std::vector<PermGroup> atoms;
  for (const auto& x : conjugacy_class_reps(g))
    if (!x.is_identity()) atoms.push_back(normal_closure(g, x).group);
  for (const auto& a : atoms) add(a);
  for (std::size_t i = 1; i < out.size(); ++i) {
    for (const auto& a : atoms) {
      if (a.is_subgroup_of(out[i])) continue;
      std::vector<Perm> gens = out[i].generators();
      for (const auto& x : a.generators()) gens.push_back(x);
      add(PermGroup(g.degree(), std::move(gens)));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return out;
}

struct CorpusRow {
  std::string group;
  std::uint64_t order = 0;
  bool skipped = false;
  bool pass = true;
  std::vector<std::pair<std::string, Detail>> columns;
};

struct CorpusReport {
  std::string check;
  std::vector<CorpusRow> rows;
  bool pass = true;
};

inline const std::vector<std::string>& corpus_checks() {
  static const std::vector<std::string> names{"huppert-equiv",      "lili-equiv",
                                              "kramer-equiv",       "schmid-shemetkov",
                                              "theorem2-soundness", "fstar-chain"};
  return names;
}

namespace detail {

inline void equivalence_row(CorpusRow& row, const AtlasEntry& e, bool criterion) {
  bool ss = is_supersoluble(e.group);
  row.columns = {{"criterion", criterion}, {"supersoluble", ss}, {"atlas_flag", e.supersoluble}};
  row.pass = criterion == ss && ss == e.supersoluble;
}

inline CorpusRow corpus_row(const std::string& check, const AtlasEntry& e,
                            std::uint64_t max_order) {
  CorpusRow row{e.name, e.group.order()};
  const PermGroup& g = e.group;
  if (check == "huppert-equiv") {
    equivalence_row(row, e, huppert(g).holds);
  } else if (check == "lili-equiv") {
    equivalence_row(row, e, li_li(g).holds);
  } else if (check == "kramer-equiv") {
    if (!is_soluble(g)) {
      row.skipped = true;
      row.columns = {{"soluble", false}};
    } else {
      equivalence_row(row, e, kramer(g).holds);
    }
  } else if (check == "schmid-shemetkov") {
    PermGroup t = shemetkov_tilde_fitting(g).group;
    PermGroup c = centralizer(g, t).group;
    row.columns = {{"tilde_fitting_order", t.order()}, {"centralizer_order", c.order()}};
    row.pass = c.is_subgroup_of(t);
  } else if (check == "theorem2-soundness") {
    if (g.order() > max_order) {
      row.skipped = true;
      return row;
    }
    std::uint64_t pairs = 0, hyp = 0, violations = 0;
    for (const auto& h : normal_subgroups(g)) {
      CriterionResult r = theorem2_check(g, SubgroupHandle{g, h}, supersoluble_formation());
      ++pairs;
      for (const auto& [k, v] : r.details)
        if (k == "hypothesis" && std::get<bool>(v)) ++hyp;
      if (r.violation) ++violations;
    }
    row.columns = {{"normal_pairs", pairs}, {"hypothesis_holds", hyp}, {"violations", violations}};
    row.pass = violations == 0;
  } else if (check == "fstar-chain") {
    PermGroup f = fitting(g).group;
    PermGroup fs = generalized_fitting_star(g).group;
    PermGroup t = shemetkov_tilde_fitting(g).group;
    row.columns = {{"fitting_order", f.order()},
                   {"fstar_order", fs.order()},
                   {"tilde_fitting_order", t.order()}};
    row.pass = f.is_subgroup_of(fs) && fs.is_subgroup_of(t);
  } else {
    throw InvalidInput("unknown corpus check '" + check + "'");
  }
  return row;
}

}  // namespace detail

/// Runs a named invariant over the atlas. Rows follow atlas order.
inline CorpusReport run_corpus(const std::string& check, std::uint64_t max_order = 500) {
  bool known = false;
  for (const auto& c : corpus_checks()) known = known || c == check;
  if (!known) throw InvalidInput("unknown corpus check '" + check + "'");
  CorpusReport rep{check};
  for (const auto& e : atlas()) {
    rep.rows.push_back(detail::corpus_row(check, e, max_order));
    rep.pass = rep.pass && rep.rows.back().pass;
  }
  return rep;
}

}  // namespace grpkit
