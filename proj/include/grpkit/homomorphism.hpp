#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"
#include "perm_group.hpp"

namespace grpkit {

/// The generator assignment does not extend to a homomorphism.
class InconsistentHomomorphism : public InvalidInput {
 public:
  InconsistentHomomorphism(const std::string& msg, Perm witness)
      : InvalidInput(msg), witness_(std::move(witness)) {}
  /// A codomain element that some relator of the domain is sent to.
  const Perm& witness() const noexcept { return witness_; }

 private:
  Perm witness_;
};

/// A homomorphism between permutation groups, fixed by generator images.
///
/// Internally it keeps the diagonal group D = <(g, f(g))> on the disjoint union
/// of both point sets, twice: once with the domain base in front (to evaluate
/// f) and once with the image base in front (for preimages and the kernel).
class Homomorphism {
 public:
  const PermGroup& domain() const noexcept { return st_->domain; }
  const PermGroup& image() const noexcept { return st_->image; }
  std::size_t codomain_degree() const noexcept { return st_->m; }
  const std::vector<Perm>& generator_images() const noexcept { return st_->images; }

  Perm apply(const Perm& g) const {
    const auto& s = *st_;
    if (g.degree() != s.n) throw InvalidInput("degree mismatch applying homomorphism");
    Perm r = s.by_domain.sift(extend(g, 0)).first;
    for (std::size_t i = 0; i < s.n; ++i)
      if (r[static_cast<Point>(i)] != i) throw InvalidInput("element not in domain");
    return restrict(r, s.n, s.m).inverse();
  }

  /// Some x in the domain with f(x) = q.
  Perm preimage_of(const Perm& q) const {
    const auto& s = *st_;
    if (q.degree() != s.m) throw InvalidInput("degree mismatch in preimage");
    Perm r = s.by_image.sift(extend(q, s.n)).first;
    for (std::size_t i = 0; i < s.m; ++i)
      if (r[static_cast<Point>(s.n + i)] != s.n + i) throw InvalidInput("element not in image");
    return restrict(r, 0, s.n).inverse();
  }

  SubgroupHandle kernel() const {
    const auto& s = *st_;
    std::vector<Perm> gens;
    const auto& levels = s.by_image.levels();
    if (levels.size() > s.image_base_len)
      for (const auto& g : levels[s.image_base_len].gens) gens.push_back(restrict(g, 0, s.n));
    return SubgroupHandle{s.domain, PermGroup(s.n, std::move(gens))};
  }

  /// Full preimage of a subgroup of the image.
  SubgroupHandle preimage(const PermGroup& sub) const {
    std::vector<Perm> gens = kernel().group.generators();
    for (const auto& q : sub.generators()) gens.push_back(preimage_of(q));
    return SubgroupHandle{st_->domain, generated_by(st_->n, gens)};
  }

  /// f(S) for a subgroup S of the domain.
  PermGroup image_of(const PermGroup& sub) const {
    std::vector<Perm> gens;
    for (const auto& g : sub.generators()) gens.push_back(apply(g));
    return PermGroup(st_->m, std::move(gens));
  }

  static Homomorphism build(const PermGroup& domain, std::size_t codomain_degree,
                            std::vector<Perm> images, bool validate) {
    if (images.size() != domain.generators().size())
      throw InvalidInput("need exactly one image per domain generator");
    for (const auto& q : images)
      if (q.degree() != codomain_degree) throw InvalidInput("image degree mismatch");
    auto st = std::make_shared<State>();
    st->domain = domain;
    st->n = domain.degree();
    st->m = codomain_degree;
    st->image = PermGroup(codomain_degree, images);
    std::vector<Perm> diag;
    for (std::size_t i = 0; i < images.size(); ++i)
      diag.push_back(combine(domain.generators()[i], images[i]));

    std::vector<Point> dom_base = domain.base();
    st->by_domain = StabChain(st->n + st->m, dom_base);
    for (const auto& d : diag) st->by_domain.add_generator(d);
    if (validate && st->by_domain.order() != domain.order()) {
      // a level past the domain base acts only on the codomain block
      Perm witness(codomain_degree);
      const auto& lv = st->by_domain.levels();
      if (lv.size() > dom_base.size() && !lv[dom_base.size()].gens.empty())
        witness = restrict(lv[dom_base.size()].gens.front(), st->n, st->m);
      throw InconsistentHomomorphism(
          "generator images do not define a homomorphism: a relator maps to " +
              witness.to_cycle_string(),
          witness);
    }
    st->by_domain.freeze();

    std::vector<Point> img_base = st->image.base();
    for (auto& b : img_base) b += static_cast<Point>(st->n);
    st->image_base_len = img_base.size();
    st->by_image = StabChain(st->n + st->m, img_base);
    for (const auto& d : diag) st->by_image.add_generator(d);
    st->by_image.freeze();
    st->images = std::move(images);
    Homomorphism h;
    h.st_ = std::move(st);
    return h;
  }

 private:
  struct State {
    PermGroup domain;
    PermGroup image;
    std::size_t n = 0, m = 0;
    std::vector<Perm> images;
    StabChain by_domain;
    StabChain by_image;
    std::size_t image_base_len = 0;
  };

  static Perm combine(const Perm& a, const Perm& b) {
    std::vector<Point> img(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) img[i] = a[static_cast<Point>(i)];
    for (std::size_t i = 0; i < b.degree(); ++i)
      img[a.degree() + i] = static_cast<Point>(a.degree() + b[static_cast<Point>(i)]);
    return Perm(std::move(img));
  }

  Perm extend(const Perm& x, std::size_t offset) const {
    return shift_perm(x, offset, st_->n + st_->m);
  }

  static Perm restrict(const Perm& x, std::size_t offset, std::size_t len) {
    std::vector<Point> img(len);
    for (std::size_t i = 0; i < len; ++i)
      img[i] = static_cast<Point>(x[static_cast<Point>(offset + i)] - offset);
    return Perm(std::move(img));
  }

  std::shared_ptr<const State> st_;
};

/// Validates the assignment via the diagonal-subgroup order test:
/// it is a homomorphism iff |<(g_i, images_i)>| = |domain|.
inline Homomorphism hom_from_images(const PermGroup& domain, std::size_t codomain_degree,
                                    std::vector<Perm> images) {
  return Homomorphism::build(domain, codomain_degree, std::move(images), true);
}

inline SubgroupHandle kernel(const Homomorphism& f) { return f.kernel(); }
inline PermGroup image(const Homomorphism& f) { return f.image(); }

/// Smallest element of the right coset Hx under lexicographic base images
/// relative to H's base. Distinct cosets give distinct representatives.
inline Perm canonical_coset_rep(const StabChain& h_chain, Perm x) {
  const auto& levels = h_chain.levels();
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const auto& L = levels[l];
    Point best = L.orbit.front();
    Point best_img = x[best];
    for (Point gamma : L.orbit) {
      if (x[gamma] < best_img) {
        best_img = x[gamma];
        best = gamma;
      }
    }
    if (best != L.base) x = h_chain.transversal(l, best) * x;
  }
  return x;
}

struct CosetAction {
  PermGroup image;
  Homomorphism hom;
  std::vector<Perm> coset_reps;  // canonical representatives, in point order
};

/// Action of G on the right cosets of H (points numbered by discovery order).
/// When H is normal the image is G/H and the kernel is H.
inline CosetAction coset_action(const PermGroup& g, const SubgroupHandle& h) {
  if (!h.group.is_subgroup_of(g)) throw InvalidInput("coset_action: H is not a subgroup of G");
  std::uint64_t index = g.order() / h.group.order();
  check_bound("coset action index", index, limits().index_bound);

  const StabChain& hc = h.group.chain();
  std::vector<Perm> reps;
  std::unordered_map<Perm, Point, PermHash> where;
  reps.push_back(canonical_coset_rep(hc, Perm(g.degree())));
  where.emplace(reps.front(), 0);
  std::vector<std::vector<Point>> img(g.generators().size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Perm c = canonical_coset_rep(hc, reps[i] * g.generators()[s]);
      auto it = where.find(c);
      Point target;
      if (it == where.end()) {
        target = static_cast<Point>(reps.size());
        where.emplace(c, target);
        reps.push_back(std::move(c));
      } else {
        target = it->second;
      }
      img[s].push_back(target);
    }
  }
  if (reps.size() != index) throw Error("coset enumeration found inconsistent index");
  std::vector<Perm> images;
  for (auto& v : img) images.emplace_back(std::move(v));
  Homomorphism hom = Homomorphism::build(g, reps.size(), std::move(images), false);
  return CosetAction{hom.image(), hom, std::move(reps)};
}

}  // namespace grpkit
