#pragma once

#include <vector>

#include "moduli/divisor.hpp"

namespace moduli::maps {

// Pullback along the map Pointed(g, n) -> Pointed(g, n-1) forgetting the
// point that sits at position `which` (1-based) of the larger label set; the
// remaining labels correspond order-preservingly. Rules, extended linearly:
//   lambda -> lambda, d_irr -> d_irr, omega_j -> omega_j,
//   psi_j -> psi_j - d[0,{j,which}],
//   d[i,S] -> d[i,S] + d[i,S+{which}].
DivisorClass forgetful_pullback(const DivisorClass& cls, int which);

// Pullback along Pointed(g, n) -> Pointed(g, |kept|) remembering only the
// labels in `kept` (order-preservingly relabeled). Equals the composition of
// single-point pullbacks over the complement in any order.
DivisorClass multi_forgetful_pullback(const DivisorClass& cls,
                                      const std::vector<int>& kept, int n);

// Pullback along the gluing map Pointed(g, 2*pairs) -> Pointed(g+pairs, 0)
// which attaches label j to label pairs+j. Input must be spanned by lambda,
// d_irr and the unpointed boundary classes d[j,{}]; anything else throws.
// The result is reported on NodalQuotient(g, pairs) in orbit coordinates:
//   lambda -> lambda
//   d_irr  -> -psi + d_irr + sum of all orbits d[i;a,b] with b >= 1
//   d[j,{}] -> sum of the distinct orbits d[i;a,0] with i + a = j.
DivisorClass glue_pullback(const DivisorClass& cls, int g, int pairs);

// Label groups acting on a Pointed context. Partition blocks are contiguous
// runs of labels of the given sizes. NodalPair acts on 2n labels paired as
// (j, n+j): it permutes pairs and swaps within pairs.
enum class GroupKind { FullSymmetric, Partition, NodalPair };

struct GroupDescriptor {
  GroupKind kind = GroupKind::FullSymmetric;
  std::vector<int> partition;  // Partition only

  static GroupDescriptor full_symmetric() { return {GroupKind::FullSymmetric, {}}; }
  static GroupDescriptor blocks(std::vector<int> sizes) {
    return {GroupKind::Partition, std::move(sizes)};
  }
  static GroupDescriptor nodal_pairs() { return {GroupKind::NodalPair, {}}; }
};

// Applies the label permutation `perm` (1-based image table) to every symbol.
DivisorClass relabel(const DivisorClass& cls, const std::vector<int>& perm);

// Sum of the distinct images of `cls` under the group: one summand per coset
// of the stabilizer, so symmetrize(psi_1) = psi_1 + ... + psi_n. The group is
// enumerated explicitly, so label counts are limited to small n.
DivisorClass symmetrize(const DivisorClass& cls, const GroupDescriptor& group);

// Eliminates omega symbols via omega_j = psi_j - sum_{S ni j} d[0,S], and the
// inverse base change eliminating psi_j in favor of omega_j.
DivisorClass omega_to_psi(const DivisorClass& cls);
DivisorClass psi_to_omega(const DivisorClass& cls);

// Restriction Pointed(g,n) -> Hyperelliptic(g,n). Point and boundary classes
// restrict to themselves; d_irr decomposes as eta_0 + 2*sum eta[i,S]; lambda
// is eliminated through the relation
//   (8g+4) lambda = g eta_0 + 2 sum (i+1)(g-i) eta[i,S] + 4 sum i(g-i) d[i,S]
// (sums over canonical representatives), so results live in the free basis
// of psi, eta and delta classes only.
DivisorClass hyperelliptic_restrict(const DivisorClass& cls);

// Pullback along the isomorphism between Hyperelliptic(g, 0) and the quotient
// of the genus-0 space with 2g+2 points by its full symmetric group:
//   d[0,s=2i+2] -> eta_i,   d[0,s=2i+1] -> (1/2) d[i,{}].
// Input must live on Pointed(0, 2g+2) and be spanned by the orbits d[0,s].
DivisorClass rational_quotient_pullback(const DivisorClass& cls, int g);

}  // namespace moduli::maps
