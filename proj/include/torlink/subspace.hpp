#pragma once

#include <functional>
#include <vector>

#include "torlink/fp.hpp"
#include "torlink/qmodz.hpp"

namespace torlink {

/// A k-dimensional subspace of F_p^n, held as its unique reduced
/// row echelon basis. Two Subspace values compare equal iff they describe
/// the same subspace.
struct Subspace {
    int p = 0;
    int ambient_dim = 0;
    FpMatrix basis;  // k x n, canonical RREF

    int dim() const { return static_cast<int>(basis.rows()); }

    /// Canonicalizes an arbitrary spanning set (rows) into RREF form.
    static Subspace from_rows(int p, const FpMatrix& rows);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        if (a.p != b.p || a.ambient_dim != b.ambient_dim ||
            a.basis.rows() != b.basis.rows())
            return false;
        for (Eigen::Index i = 0; i < a.basis.rows(); ++i)
            for (Eigen::Index j = 0; j < a.basis.cols(); ++j)
                if (a.basis(i, j) != b.basis(i, j)) return false;
        return true;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
};

/// Visits every k-dimensional subspace of F_p^n exactly once, in a fixed
/// order (lexicographic pivot sets, then base-p odometer over free entries).
void enumerate_subspaces(int p, int n, int k,
                         const std::function<void(const Subspace&)>& visit);

std::vector<Subspace> all_subspaces(int p, int n, int k);

/// [n choose k]_p, the number of k-dimensional subspaces of F_p^n.
Int gaussian_binomial(int n, int k, int p);

int subspace_intersection_dim(const Subspace& a, const Subspace& b);

}  // namespace torlink
