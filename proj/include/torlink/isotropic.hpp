#pragma once

#include <vector>

#include "torlink/subspace.hpp"

namespace torlink {

struct LinkingForm;

/// Unordered dual pair of Lagrangians: first + second = ambient space,
/// trivial intersection, both isotropic. Canonical ordering puts the
/// enumeration-earlier subspace first.
struct DualPair {
    Subspace first;
    Subspace second;
};

/// All half-dimensional subspaces on which the form vanishes identically,
/// for a nondegenerate form on (Z/p)^{2n}. Output follows the subspace
/// enumeration order. Throws std::invalid_argument unless the group is
/// elementary abelian of even rank.
std::vector<Subspace> enumerate_lagrangians(const LinkingForm& form);

/// True iff the form restricted to the span of the subspace basis vanishes:
/// B * G * B^T = 0 mod p, with G the integer Gram matrix.
bool is_isotropic(const Subspace& s, const FpMatrix& gram_mod_p);

/// All unordered pairs {A, B} from the list with A intersect B = 0 and
/// dim A + dim B = ambient dimension.
std::vector<DualPair> enumerate_dual_pairs(const std::vector<Subspace>& lagrangians);

/// Index pairs (i < j) into the input list; same pairs as
/// enumerate_dual_pairs, sorted lexicographically.
std::vector<std::pair<size_t, size_t>> dual_pair_indices(
    const std::vector<Subspace>& lagrangians);

}  // namespace torlink
