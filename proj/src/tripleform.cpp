#include "torlink/tripleform.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "torlink/fp.hpp"

namespace torlink {

void GropeData::validate() const {
    if (t < 1) throw std::invalid_argument("grope data: t must be positive");
    if (dz.size() != cy.size() || cz.size() != cy.size() || dy.size() != cy.size())
        throw std::invalid_argument("grope data: intersection lists must share length");
}

Rat triple_linking_rational(const GropeData& data) {
    data.validate();
    Int sum = 0;
    for (size_t i = 0; i < data.genus(); ++i)
        sum += Int(data.cy[i]) * data.dz[i] - Int(data.cz[i]) * data.dy[i];
    return Rat(sum, Int(data.t));
}

QmodZ triple_linking_from_grope(const GropeData& data) {
    return QmodZ::from_rational(triple_linking_rational(data));
}

const std::array<std::array<int, 3>, kNumColumnTriples>& column_triples() {
    static const auto triples = [] {
        std::array<std::array<int, 3>, kNumColumnTriples> out{};
        int idx = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c)
                    out[idx++] = {a, b, c};
        return out;
    }();
    return triples;
}

DeterminantVector determinant_vector(const Subspace& lagrangian) {
    if (lagrangian.p != 3 || lagrangian.ambient_dim != 6 || lagrangian.dim() != 3)
        throw std::invalid_argument("determinant_vector: need a 3-plane in F_3^6");
    DeterminantVector out{};
    const FpMatrix& b = lagrangian.basis;
    for (int idx = 0; idx < kNumColumnTriples; ++idx) {
        const auto& t = column_triples()[idx];
        FpMatrix sub(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) sub(r, c) = b(r, t[c]);
        out[idx] = static_cast<uint8_t>(fp_det(sub, 3));
    }
    return out;
}

ObstructionVector ObstructionVector::from_ints(const std::vector<int>& values) {
    if (values.size() != kNumColumnTriples)
        throw std::invalid_argument("obstruction vector: need exactly 20 entries");
    ObstructionVector v;
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] < -1 || values[i] > 2)
            throw std::invalid_argument("obstruction vector: entries must be in {-1,0,1,2}");
        v.entries[i] = static_cast<uint8_t>(fp_reduce(values[i], 3));
    }
    return v;
}

ObstructionVector ObstructionVector::parse(const std::string& comma_separated) {
    std::vector<int> values;
    std::stringstream ss(comma_separated);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int val;
        try {
            val = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("obstruction vector: bad entry '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
            ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("obstruction vector: bad entry '" + tok + "'");
        values.push_back(val);
    }
    return from_ints(values);
}

std::string ObstructionVector::str() const {
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(static_cast<int>(entries[i]));
    }
    return out;
}

int dot_mod3(const DeterminantVector& d, const ObstructionVector& v) {
    int acc = 0;
    for (int i = 0; i < kNumColumnTriples; ++i) acc += d[i] * v.entries[i];
    return acc % 3;
}

QmodZ triple_form_value(const ObstructionVector& v, const Subspace& lagrangian) {
    return QmodZ(dot_mod3(determinant_vector(lagrangian), v), 3);
}

bool vanishes_on_lagrangian(const ObstructionVector& v, const Subspace& lagrangian) {
    return triple_form_value(v, lagrangian).is_zero();
}

}  // namespace torlink
