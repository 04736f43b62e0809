#include "torlink/smith.hpp"

namespace torlink {

namespace {

// Truncating quotient; used to shrink entries toward the pivot.
Int quot(const Int& a, const Int& b) { return a / b; }

// Diagonalize the block starting at (t, t); elementary row ops are mirrored
// into u, column ops into v.
void diagonalize(IntMatrix& a, IntMatrix& u, IntMatrix& v) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Minimal nonzero |entry| in the trailing block.
            Eigen::Index pi = -1, pj = -1;
            Int best = 0;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    Int mag = abs(a(i, j));
                    if (pi < 0 || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) return;  // trailing block is zero
            if (pi != t) { a.row(pi).swap(a.row(t)); u.row(pi).swap(u.row(t)); }
            if (pj != t) { a.col(pj).swap(a.col(t)); v.col(pj).swap(v.col(t)); }

            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int q = quot(a(i, t), a(t, t));
                if (q != 0) {
                    a.row(i) -= (q * a.row(t)).eval();
                    u.row(i) -= (q * u.row(t)).eval();
                }
                if (a(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int q = quot(a(t, j), a(t, t));
                if (q != 0) {
                    a.col(j) -= (q * a.col(t)).eval();
                    v.col(j) -= (q * v.col(t)).eval();
                }
                if (a(t, j) != 0) clean = false;
            }
            if (clean) break;  // row and column t are zero off the pivot
        }
        if (a(t, t) < 0) {
            a.row(t) = (-a.row(t)).eval();
            u.row(t) = (-u.row(t)).eval();
        }
    }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::Identity(rows, rows);
    IntMatrix v = IntMatrix::Identity(cols, cols);

    diagonalize(a, u, v);

    // Repair the divisibility chain: if d_i does not divide d_j, folding
    // column j into column i puts gcd(d_i, d_j) within reach of another
    // diagonalization pass over the trailing block.
    const Eigen::Index rank = std::min(rows, cols);
    for (;;) {
        bool ok = true;
        for (Eigen::Index i = 0; ok && i + 1 < rank; ++i) {
            if (a(i, i) == 0) continue;
            for (Eigen::Index j = i + 1; j < rank; ++j) {
                if (a(j, j) != 0 && a(j, j) % a(i, i) != 0) {
                    a.col(i) += a.col(j);
                    v.col(i) += v.col(j);
                    diagonalize(a, u, v);
                    ok = false;
                    break;
                }
            }
        }
        if (ok) break;
    }
    return {std::move(u), std::move(a), std::move(v)};
}

}  // namespace torlink
