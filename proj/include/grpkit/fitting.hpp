#pragma once

#include "homomorphism.hpp"
#include "maximals.hpp"
#include "perm_group.hpp"
#include "structure.hpp"

namespace grpkit {

/// F~(G): the preimage of Soc(G/Phi(G)) in G.
inline SubgroupHandle shemetkov_tilde_fitting(const PermGroup& g) {
  return SubgroupHandle{g, g.cached<PermGroup>("tilde_fitting", [&] {
                          SubgroupHandle phi = frattini(g);
                          if (phi.group.is_trivial()) return socle(g).group;
                          CosetAction q = coset_action(g, phi);
                          return q.hom.preimage(socle(q.image).group).group;
                        })};
}

}  // namespace grpkit
