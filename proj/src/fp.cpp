#include "torlink/fp.hpp"

#include <stdexcept>

namespace torlink {

int fp_inverse(int a, int p) {
    a = fp_reduce(a, p);
    if (a == 0) throw std::invalid_argument("fp_inverse: zero");
    // extended Euclid
    int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return fp_reduce(t, p);
}

int fp_rref(FpMatrix& m, int p) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = rank; i < rows; ++i)
            if (m(i, col) % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank) m.row(piv).swap(m.row(rank));
        int inv = fp_inverse(m(rank, col), p);
        for (Eigen::Index j = col; j < cols; ++j)
            m(rank, j) = fp_reduce(static_cast<long long>(m(rank, j)) * inv, p);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == rank) continue;
            int f = fp_reduce(m(i, col), p);
            if (f == 0) continue;
            for (Eigen::Index j = col; j < cols; ++j)
                m(i, j) = fp_reduce(m(i, j) - static_cast<long long>(f) * m(rank, j), p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int fp_rank(FpMatrix m, int p) { return fp_rref(m, p); }

int fp_det(const FpMatrix& m, int p) {
    if (m.rows() != m.cols()) throw std::invalid_argument("fp_det: not square");
    FpMatrix a = m;
    const Eigen::Index n = a.rows();
    long long det = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = col; i < n; ++i)
            if (fp_reduce(a(i, col), p) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            a.row(piv).swap(a.row(col));
            det = -det;
        }
        det = det * a(col, col) % p;
        int inv = fp_inverse(a(col, col), p);
        for (Eigen::Index i = col + 1; i < n; ++i) {
            int f = fp_reduce(static_cast<long long>(a(i, col)) * inv, p);
            if (f == 0) continue;
            for (Eigen::Index j = col; j < n; ++j)
                a(i, j) = fp_reduce(a(i, j) - static_cast<long long>(f) * a(col, j), p);
        }
    }
    return fp_reduce(det, p);
}

}  // namespace torlink
