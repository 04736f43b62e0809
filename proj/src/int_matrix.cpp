#include "torlink/int_matrix.hpp"

#include <fstream>
#include <sstream>

namespace torlink {

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { swap = i; break; }
            if (swap < 0) return 0;
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

RatMatrix rational_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("rational_inverse: matrix not square");
    const Eigen::Index n = m.rows();
    RatMatrix a(n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = Rat(m(i, j));
            a(i, n + j) = Rat(i == j ? 1 : 0);
        }
    // Gauss-Jordan on the augmented system.
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = col; i < n; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0)
            throw std::invalid_argument("rational_inverse: singular matrix");
        if (piv != col) a.row(piv).swap(a.row(col));
        Rat inv = Rat(1) / a(col, col);
        for (Eigen::Index j = col; j < 2 * n; ++j) a(col, j) *= inv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (Eigen::Index j = col; j < 2 * n; ++j)
                a(i, j) -= f * a(col, j);
        }
    }
    return a.rightCols(n);
}

IntMatrix read_framing_matrix(std::istream& in) {
    long long n = 0;
    if (!(in >> n) || n <= 0)
        throw std::invalid_argument("framing matrix: bad dimension line");
    IntMatrix m(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("framing matrix: truncated input");
            try {
                m(i, j) = Int(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("framing matrix: bad entry '" + tok + "'");
            }
        }
    if (!is_symmetric(m))
        throw std::invalid_argument("framing matrix: not symmetric");
    return m;
}

IntMatrix read_framing_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    return read_framing_matrix(in);
}

}  // namespace torlink
