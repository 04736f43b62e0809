#pragma once

#include <Eigen/Core>

namespace torlink {

/// Dense matrix over F_p with entries stored as reduced residues in [0, p).
using FpMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

inline int fp_reduce(long long x, int p) {
    int r = static_cast<int>(x % p);
    return r < 0 ? r + p : r;
}

int fp_inverse(int a, int p);

/// In-place reduced row echelon form; returns the rank.
int fp_rref(FpMatrix& m, int p);

int fp_rank(FpMatrix m, int p);

int fp_det(const FpMatrix& m, int p);

}  // namespace torlink
