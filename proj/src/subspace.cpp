#include "torlink/subspace.hpp"

#include <stdexcept>

namespace torlink {

Subspace Subspace::from_rows(int p, const FpMatrix& rows) {
    FpMatrix m = rows;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = fp_reduce(m(i, j), p);
    int rank = fp_rref(m, p);
    Subspace s;
    s.p = p;
    s.ambient_dim = static_cast<int>(m.cols());
    s.basis = m.topRows(rank);
    return s;
}

void enumerate_subspaces(int p, int n, int k,
                         const std::function<void(const Subspace&)>& visit) {
    if (k < 0 || k > n) throw std::invalid_argument("enumerate_subspaces: bad k");
    if (k == 0) {
        Subspace zero;
        zero.p = p;
        zero.ambient_dim = n;
        zero.basis = FpMatrix(0, n);
        visit(zero);
        return;
    }

    // Pivot columns in lexicographic order.
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;

    auto emit_for_pivots = [&](const std::vector<int>& piv) {
        std::vector<bool> is_pivot(n, false);
        for (int c : piv) is_pivot[c] = true;
        // Free slots: (row i, col j) with j > piv[i] and j not a pivot column.
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_slots.emplace_back(i, j);

        Subspace s;
        s.p = p;
        s.ambient_dim = n;
        s.basis = FpMatrix::Zero(k, n);
        for (int i = 0; i < k; ++i) s.basis(i, piv[i]) = 1;

        std::vector<int> digits(free_slots.size(), 0);
        for (;;) {
            visit(s);
            size_t pos = 0;
            while (pos < digits.size() && digits[pos] == p - 1) {
                digits[pos] = 0;
                s.basis(free_slots[pos].first, free_slots[pos].second) = 0;
                ++pos;
            }
            if (pos == digits.size()) break;
            ++digits[pos];
            s.basis(free_slots[pos].first, free_slots[pos].second) = digits[pos];
        }
    };

    for (;;) {
        emit_for_pivots(pivots);
        // Next k-combination of {0..n-1}.
        int i = k - 1;
        while (i >= 0 && pivots[i] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

std::vector<Subspace> all_subspaces(int p, int n, int k) {
    std::vector<Subspace> out;
    enumerate_subspaces(p, n, k, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

Int gaussian_binomial(int n, int k, int p) {
    if (k < 0 || k > n) return 0;
    // Product of (p^(n-i) - 1) / (p^(k-i) - 1); exact in the end.
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= pow(Int(p), n - i) - 1;
        den *= pow(Int(p), k - i) - 1;
    }
    return num / den;
}

int subspace_intersection_dim(const Subspace& a, const Subspace& b) {
    if (a.p != b.p || a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("subspace_intersection_dim: ambient mismatch");
    FpMatrix stacked(a.basis.rows() + b.basis.rows(), a.ambient_dim);
    stacked.topRows(a.basis.rows()) = a.basis;
    stacked.bottomRows(b.basis.rows()) = b.basis;
    int rank = fp_rank(stacked, a.p);
    return a.dim() + b.dim() - rank;
}

}  // namespace torlink
