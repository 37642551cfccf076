#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "affine.hpp"
#include "criteria.hpp"
#include "errors.hpp"
#include "fitting.hpp"
#include "maximals.hpp"
#include "meataxe.hpp"
#include "structure.hpp"

namespace grpkit {

struct ClaimRecord {
  std::string id;
  std::string statement;
  Detail expected;
  Detail computed;
  bool pass = false;
  double seconds = 0;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<ClaimRecord> claims;
  std::vector<std::pair<std::string, Detail>> info;  // findings beyond pass/fail
  bool overall = false;
  bool refuted = false;  // hypothesis holds while G is not supersoluble
};

/// A claim aborted on an operational error.
class ClaimFailed : public Error {
 public:
  ClaimFailed(std::string id, const std::string& what)
      : Error("claim " + id + ": " + what), id_(std::move(id)) {}
  const std::string& claim_id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// The objects of the construction, exposed for tests.
struct CounterexampleObjects {
  PermGroup k;
  FpModule v;
  SubmoduleBasis soc_v;
  FactorModule w;
  SubmoduleBasis rad_w;
  FpModule r;
  AffineGroup g;
  AffineGroup h;
};

inline CounterexampleObjects build_counterexample(std::uint64_t seed = 0) {
  CounterexampleObjects o;
  o.k = PermGroup(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
  o.v = permutation_module(o.k, 5);
  o.soc_v = socle_basis(o.v, seed);
  o.w = factor_module(o.v, o.soc_v);
  o.rad_w = radical_basis(o.w.module, seed);
  o.r = submodule_module(o.rad_w);
  o.g = affine_semidirect_product(o.w.module);
  o.h = affine_subextension(o.g.group, o.rad_w);
  return o;
}

namespace detail {

inline std::map<std::uint64_t, std::uint64_t> element_order_counts(const PermGroup& g) {
  std::map<std::uint64_t, std::uint64_t> counts;
  g.for_each_element([&](const Perm& x) { ++counts[x.order()]; });
  return counts;
}

inline std::string flags(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += (out.empty() ? "" : " ") + std::string(k) + "=" + v;
  return out;
}

inline std::string b(bool x) { return x ? "true" : "false"; }
inline std::string n(std::uint64_t x) { return std::to_string(x); }

}  // namespace detail

/// Builds the counterexample and checks each step of the argument. The seed
/// only affects internal search order, never the verdict.
inline VerificationReport run_verification(std::uint64_t seed = 0) {
  using detail::b;
  using detail::flags;
  using detail::n;
  VerificationReport rep;
  rep.seed = seed;
  CounterexampleObjects o;

  auto claim = [&](const std::string& id, const std::string& statement, Detail expected,
                   const std::function<Detail()>& compute) {
    auto t0 = std::chrono::steady_clock::now();
    Detail got;
    try {
      got = compute();
    } catch (const Error& e) {
      throw ClaimFailed(id, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = got == expected;
    rep.claims.push_back(ClaimRecord{id, statement, std::move(expected), std::move(got), pass, secs});
  };

  claim("1", "K is the alternating group on 5 points, of order 60", std::uint64_t{60}, [&]() -> Detail {
    o.k = PermGroup(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
    PermGroup s5(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)});
    bool even = derived_subgroup(s5).same_elements(o.k);
    return even ? o.k.order() : std::uint64_t{0};
  });

  claim("2", "V is the permutation module of K over GF(5), of dimension 5", std::uint64_t{5},
        [&]() -> Detail {
          o.v = permutation_module(o.k, 5);
          return static_cast<std::uint64_t>(o.v.dim());
        });

  claim("3", "Soc(V) has dimension 1", std::uint64_t{1}, [&]() -> Detail {
    o.soc_v = socle_basis(o.v, seed);
    return static_cast<std::uint64_t>(o.soc_v.dim());
  });

  claim("4", "W = V/Soc(V) has dimension 4", std::uint64_t{4}, [&]() -> Detail {
    o.w = factor_module(o.v, o.soc_v);
    return static_cast<std::uint64_t>(o.w.module.dim());
  });

  claim("5", "W is indecomposable", true,
        [&]() -> Detail { return is_indecomposable(o.w.module, seed); });

  claim("6", "Rad(W) is a faithful simple module of dimension 3",
        flags({{"dim", "3"}, {"simple", "true"}, {"faithful", "true"}}), [&]() -> Detail {
          o.rad_w = radical_basis(o.w.module, seed);
          o.r = submodule_module(o.rad_w);
          return flags({{"dim", n(o.r.dim())},
                        {"simple", b(is_irreducible(o.r, seed).irreducible)},
                        {"faithful", b(is_faithful(o.r))}});
        });

  claim("7", "W/Rad(W) is the trivial module of dimension 1",
        flags({{"dim", "1"}, {"trivial", "true"}}), [&]() -> Detail {
          FpModule top = factor_module(o.w.module, o.rad_w).module;
          return flags({{"dim", n(top.dim())}, {"trivial", b(top.is_trivial_action())}});
        });

  claim("8", "G = W:K has order 37500", std::uint64_t{37500}, [&]() -> Detail {
    o.g = affine_semidirect_product(o.w.module);
    return o.g.group.order();
  });

  PermGroup r_in_g;
  claim("9", "Rad(W) lies in the Frattini subgroup of G", true, [&]() -> Detail {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < o.rad_w.dim(); ++i)
      gens.push_back(o.g.group.split_info()->translation(o.rad_w.basis.row(i)));
    r_in_g = PermGroup(o.g.group.degree(), std::move(gens));
    PermGroup phi = frattini(o.g.group).group;
    rep.info.emplace_back("frattini_G_order", phi.order());
    rep.info.emplace_back("frattini_G_equals_rad_W", phi.same_elements(r_in_g));
    return r_in_g.is_subgroup_of(phi);
  });

  claim("10", "H = Rad(W)K is normal in G with G/H cyclic of order 5",
        flags({{"order", "7500"}, {"normal", "true"}, {"quotient_order", "5"}, {"quotient_cyclic", "true"}}),
        [&]() -> Detail {
          o.h = affine_subextension(o.g.group, o.rad_w);
          const PermGroup& h = o.h.group;
          bool normal = is_normal(o.g.group, h);
          PermGroup q = coset_action(o.g.group, SubgroupHandle{o.g.group, h}).image;
          bool cyclic = false;
          q.for_each_element([&](const Perm& x) { cyclic = cyclic || x.order() == q.order(); });
          return flags({{"order", n(h.order())}, {"normal", b(normal)},
                        {"quotient_order", n(q.order())}, {"quotient_cyclic", b(cyclic)}});
        });

  claim("11", "Rad(W) is the unique minimal normal subgroup of H and Phi(H) = 1",
        flags({{"minimal_normal_count", "1"}, {"minimal_normal_is_rad_W", "true"}, {"frattini_order", "1"}}),
        [&]() -> Detail {
          auto mins = minimal_normal_subgroups(o.h.group);
          bool is_r = mins.size() == 1 && mins.front().group.same_elements(r_in_g);
          return flags({{"minimal_normal_count", n(mins.size())},
                        {"minimal_normal_is_rad_W", b(is_r)},
                        {"frattini_order", n(frattini(o.h.group).order())}});
        });

  PermGroup tilde;
  claim("12", "F~(H) = Rad(W), which lies in Phi(G)",
        flags({{"equals_rad_W", "true"}, {"inside_frattini_G", "true"}}), [&]() -> Detail {
          tilde = shemetkov_tilde_fitting(o.h.group).group;
          return flags({{"equals_rad_W", b(tilde.same_elements(r_in_g))},
                        {"inside_frattini_G", b(tilde.is_subgroup_of(frattini(o.g.group).group))}});
        });

  claim("13", "|F~(H) : F~(H) n M| = 1 for every maximal subgroup M of G",
        flags({{"maximal_count", "22"}, {"all_indices_one", "true"}}), [&]() -> Detail {
          auto ms = maximal_subgroups(o.g.group).maximals;
          bool all_one = true;
          for (const auto& m : ms)
            if (intersection(tilde, m.group).order() != tilde.order()) all_one = false;
          return flags({{"maximal_count", n(ms.size())}, {"all_indices_one", b(all_one)}});
        });

  claim("14", "G and H satisfy the hypothesis of the conjecture for the supersoluble formation",
        true, [&]() -> Detail {
          return conjecture1_hypothesis(o.g.group, SubgroupHandle{o.g.group, o.h.group},
                                        supersoluble_formation())
              .holds;
        });

  claim("15", "G is not soluble, hence not supersoluble",
        flags({{"soluble", "false"}, {"supersoluble", "false"}}), [&]() -> Detail {
          return flags({{"soluble", b(is_soluble(o.g.group))},
                        {"supersoluble", b(is_supersoluble(o.g.group))}});
        });

  {
    AffineGroup standalone = affine_semidirect_product(o.r);
    bool same = standalone.group.order() == o.h.group.order() &&
                detail::element_order_counts(standalone.group) ==
                    detail::element_order_counts(o.h.group);
    rep.info.emplace_back("standalone_H_degree", static_cast<std::uint64_t>(standalone.group.degree()));
    rep.info.emplace_back("standalone_H_order", standalone.group.order());
    rep.info.emplace_back("standalone_H_matches_element_orders", same);
  }

  rep.overall = true;
  for (const auto& c : rep.claims) rep.overall = rep.overall && c.pass;
  rep.refuted = rep.claims[13].pass && rep.claims[14].pass;
  return rep;
}

}  // namespace grpkit
