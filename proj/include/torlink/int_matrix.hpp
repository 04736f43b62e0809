#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <istream>
#include <stdexcept>
#include <string>

#include "torlink/qmodz.hpp"

namespace torlink {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_symmetric(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

/// Plain-loop matrix product. Eigen's expression templates collide with the
/// boost::multiprecision scalar constructors during overload resolution, so
/// multiprecision matrices must be multiplied through this helper instead of
/// operator*. The matrices involved are tiny, so the naive loop is fine.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> mat_mul(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows(), b.cols());
    out.setZero();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
    return out;
}

/// Plain-loop transpose, for the same reason as mat_mul.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> mat_transpose(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Exact inverse over Q. Throws std::invalid_argument on a singular input.
RatMatrix rational_inverse(const IntMatrix& m);

/// Reads the framing-matrix text format: first line n, then n rows of n
/// integers. Validates squareness and symmetry.
IntMatrix read_framing_matrix(std::istream& in);
IntMatrix read_framing_matrix_file(const std::string& path);

}  // namespace torlink
