#include <doctest.h>

#include <random>
#include <sstream>

#include "torlink/int_matrix.hpp"
#include "torlink/qmodz.hpp"
#include "torlink/smith.hpp"

using namespace torlink;

namespace {

bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int span = 9) {
    std::uniform_int_distribution<int> entry(-span, span);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

void check_snf(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    IntMatrix product = mat_mul(mat_mul(s.u, m), s.v);
    REQUIRE(same_matrix(product, s.d));
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);

    const Eigen::Index rank = std::min(m.rows(), m.cols());
    bool seen_zero = false;
    for (Eigen::Index i = 0; i < rank; ++i) {
        CHECK(s.d(i, i) >= 0);
        if (s.d(i, i) == 0) seen_zero = true;
        else CHECK(!seen_zero);  // zeros come last
        if (i + 1 < rank && s.d(i, i) != 0 && s.d(i + 1, i + 1) != 0)
            CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
    for (Eigen::Index i = 0; i < s.d.rows(); ++i)
        for (Eigen::Index j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);

    if (m.rows() == m.cols()) {
        Int det = determinant(m);
        if (det != 0) {
            Int prod = 1;
            for (Eigen::Index i = 0; i < rank; ++i) prod *= s.d(i, i);
            CHECK(prod == abs(det));
        }
    }
}

}  // namespace

TEST_CASE("QmodZ reduction and representation") {
    CHECK(QmodZ(1, 3) + QmodZ(2, 3) == QmodZ());
    CHECK(QmodZ(1, 3) + QmodZ(-1, 3) == QmodZ());
    // 1/6 + 1/4 = 5/12, checked against plain rational arithmetic
    CHECK(QmodZ(1, 6) + QmodZ(1, 4) == QmodZ::from_rational(Rat(1, 6) + Rat(1, 4)));
    CHECK((QmodZ(1, 6) + QmodZ(1, 4)).str() == "5/12");

    CHECK(QmodZ(7, 3) == QmodZ(1, 3));    // residue taken mod 1
    CHECK(QmodZ(-1, 3) == QmodZ(2, 3));   // nonnegative representative
    CHECK(QmodZ(2, -6) == QmodZ(2, 3));   // sign moved off the denominator
    CHECK(QmodZ(4, 2) == QmodZ());        // integers collapse to 0/1
    CHECK(QmodZ().den() == 1);
}

TEST_CASE("QmodZ integer scaling") {
    CHECK(qmodz_int_scale(3, QmodZ(1, 3)) == QmodZ());
    CHECK(qmodz_int_scale(0, QmodZ(5, 7)) == QmodZ());
    CHECK(qmodz_int_scale(2, QmodZ(5, 12)) == QmodZ(5, 6));
}

TEST_CASE("QmodZ addition is commutative with identity, denominator kills") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 30);
    for (int trial = 0; trial < 500; ++trial) {
        QmodZ a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK(a + QmodZ() == a);
        CHECK(qmodz_int_scale(a.den(), a) == QmodZ());
    }
}

TEST_CASE("Smith normal form of the identity") {
    SmithDecomposition s = smith_normal_form(IntMatrix::Identity(3, 3));
    CHECK(same_matrix(s.d, IntMatrix::Identity(3, 3)));
}

TEST_CASE("Smith normal form of diag(3, -3)") {
    IntMatrix m = IntMatrix::Zero(2, 2);
    m(0, 0) = 3;
    m(1, 1) = -3;
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.d(0, 0) == 3);
    CHECK(s.d(1, 1) == 3);
    check_snf(m);
}

TEST_CASE("Smith normal form properties on random matrices") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 200; ++trial)
        check_snf(random_matrix(rng, dim(rng), dim(rng)));
}

TEST_CASE("Smith normal form on rank-deficient and rectangular input") {
    IntMatrix m(2, 3);
    m << 2, 4, 6, 1, 2, 3;
    SmithDecomposition s = smith_normal_form(m);
    CHECK(same_matrix(mat_mul(mat_mul(s.u, m), s.v), s.d));
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 0);

    check_snf(IntMatrix::Zero(3, 2));
}

TEST_CASE("determinant matches cofactor expansion on small cases") {
    IntMatrix m(3, 3);
    m << 2, -1, 0, -1, 2, -1, 0, -1, 2;
    CHECK(determinant(m) == 4);
    CHECK(determinant(IntMatrix::Identity(4, 4)) == 1);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a = random_matrix(rng, 3, 3, 5);
        Int direct = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                     a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                     a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
        CHECK(determinant(a) == direct);
    }
}

TEST_CASE("rational inverse multiplies back to the identity") {
    std::mt19937 rng(13);
    int done = 0;
    while (done < 20) {
        IntMatrix m = random_matrix(rng, 4, 4, 6);
        if (determinant(m) == 0) continue;
        ++done;
        RatMatrix inv = rational_inverse(m);
        RatMatrix mq(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) mq(i, j) = Rat(m(i, j));
        RatMatrix prod = mat_mul(inv, mq);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(prod(i, j) == Rat(i == j ? 1 : 0));
    }
    CHECK_THROWS_AS(rational_inverse(IntMatrix::Zero(2, 2)), std::invalid_argument);
}

TEST_CASE("framing matrix parser") {
    std::istringstream good("2\n2 1\n1 2\n");
    IntMatrix m = read_framing_matrix(good);
    CHECK(m(0, 1) == 1);

    std::istringstream asym("2\n2 1\n0 2\n");
    CHECK_THROWS_AS(read_framing_matrix(asym), std::invalid_argument);
    std::istringstream truncated("2\n2 1\n");
    CHECK_THROWS_AS(read_framing_matrix(truncated), std::invalid_argument);
    std::istringstream junk("2\n2 x\n1 2\n");
    CHECK_THROWS_AS(read_framing_matrix(junk), std::invalid_argument);
}
