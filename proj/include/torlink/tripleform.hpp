#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "torlink/qmodz.hpp"
#include "torlink/subspace.hpp"

namespace torlink {

/// Intersection data of a rational height-2 grope: the second-stage
/// surfaces' intersection numbers with the classes y and z.
struct GropeData {
    long long t = 1;  // torsion exponent, >= 1
    std::vector<long long> cy, dz, cz, dy;  // length = genus

    size_t genus() const { return cy.size(); }
    void validate() const;
};

/// (1/t) * sum_i (cy_i * dz_i - cz_i * dy_i) as a residue in Q/Z.
QmodZ triple_linking_from_grope(const GropeData& data);

/// Rational representative before reduction mod Z (for debug output).
Rat triple_linking_rational(const GropeData& data);

inline constexpr int kNumColumnTriples = 20;

/// The 20 3-subsets of {0,...,5} in lexicographic order.
const std::array<std::array<int, 3>, kNumColumnTriples>& column_triples();

/// Residues mod 3 of the 20 ordered 3x3 minors of a Lagrangian basis
/// matrix (3 x 6 over F_3), indexed by column_triples().
using DeterminantVector = std::array<uint8_t, kNumColumnTriples>;

DeterminantVector determinant_vector(const Subspace& lagrangian);

/// Coefficient vector v in (Z/3)^20; parsing accepts entries in {-1,0,1}
/// or {0,1,2} and reduces.
struct ObstructionVector {
    std::array<uint8_t, kNumColumnTriples> entries{};

    static ObstructionVector parse(const std::string& comma_separated);
    static ObstructionVector from_ints(const std::vector<int>& values);
    std::string str() const;
};

int dot_mod3(const DeterminantVector& d, const ObstructionVector& v);

/// (1/3) * <determinant_vector(L), v> in Q/Z.
QmodZ triple_form_value(const ObstructionVector& v, const Subspace& lagrangian);

bool vanishes_on_lagrangian(const ObstructionVector& v, const Subspace& lagrangian);

}  // namespace torlink
