#pragma once

#include "torlink/int_matrix.hpp"

namespace torlink {

struct SmithDecomposition {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // rows x cols, diagonal, d1 | d2 | ..., zeros last
    IntMatrix v;  // cols x cols, unimodular
};

/// Smith normal form U*M*V = D with nonnegative diagonal and divisibility
/// chain. Pivot selection takes the minimal nonzero |entry| of the trailing
/// block, so U and V are deterministic for a given input.
SmithDecomposition smith_normal_form(const IntMatrix& m);

}  // namespace torlink
