#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torlink/int_matrix.hpp"
#include "torlink/qmodz.hpp"
#include "torlink/subspace.hpp"

namespace torlink {

/// Finite abelian group given by its invariant factors d_1 | d_2 | ... | d_k,
/// each >= 2. The trivial group has an empty factor list and exponent 1.
struct TorsionGroup {
    std::vector<Int> invariant_factors;

    Int exponent() const {
        return invariant_factors.empty() ? Int(1) : invariant_factors.back();
    }
    Int order() const {
        Int o = 1;
        for (const Int& d : invariant_factors) o *= d;
        return o;
    }
    size_t rank() const { return invariant_factors.size(); }

    /// True iff every invariant factor equals the same prime p.
    bool is_elementary_abelian(Int* p_out = nullptr) const;

    friend bool operator==(const TorsionGroup& a, const TorsionGroup& b) {
        return a.invariant_factors == b.invariant_factors;
    }
};

/// Element coordinates relative to the invariant-factor generators,
/// coordinate i reduced into [0, d_i).
struct GroupElement {
    std::vector<Int> coordinates;

    static GroupElement zero(const TorsionGroup& g) {
        return {std::vector<Int>(g.rank(), Int(0))};
    }
    static GroupElement generator(const TorsionGroup& g, size_t i) {
        GroupElement e = zero(g);
        e.coordinates[i] = 1;
        return e;
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.coordinates == b.coordinates;
    }
};

GroupElement element_add(const TorsionGroup& g, const GroupElement& a,
                         const GroupElement& b);
GroupElement element_scale(const TorsionGroup& g, const Int& k,
                           const GroupElement& a);

/// Symmetric Q/Z-valued Gram matrix on the invariant-factor generators.
struct LinkingForm {
    TorsionGroup group;
    std::vector<std::vector<QmodZ>> gram;  // k x k, symmetric

    const QmodZ& at(size_t i, size_t j) const { return gram[i][j]; }
};

QmodZ eval_linking(const LinkingForm& form, const GroupElement& a,
                   const GroupElement& b);

enum class SignConvention { paper, lemma };

/// Presents coker(framing) by invariant factors via Smith normal form and
/// transports the residues of framing^{-1} to the SNF generators. Under the
/// `paper` convention a +3-framed generator has self-linking +1/3; `lemma`
/// negates the form.
LinkingForm linking_form_from_framing(const IntMatrix& framing,
                                      SignConvention convention = SignConvention::paper);

bool is_nondegenerate(const LinkingForm& form);

enum class HantzscheStatus {
    no_square_order,    // |G| is not a perfect square
    splitting,          // dual pair of Lagrangians found
    no_splitting_found, // exhaustive search over Lagrangians came up empty
    square_order_only,  // square order, but the splitting search is
                        // unsupported for this group shape
};

struct HantzscheResult {
    HantzscheStatus status;
    std::optional<std::pair<Subspace, Subspace>> splitting;
};

/// Square-order test from the embedding obstruction; when the group is
/// elementary abelian (Z/p)^{2n} of order <= ~10^6 also searches for a
/// splitting into a dual pair of Lagrangians.
HantzscheResult check_hantzsche(const LinkingForm& form);

/// Integer Gram matrix mod p of a form on an elementary abelian group:
/// entry (i,j) is p * gram[i][j] as a residue. Throws unless every gram
/// denominator divides p.
FpMatrix gram_mod_p(const LinkingForm& form, int p);

}  // namespace torlink
