#include "torlink/linking.hpp"

#include <stdexcept>

#include "torlink/isotropic.hpp"
#include "torlink/smith.hpp"

namespace torlink {

namespace {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Visits every element of the group; coordinates run through an odometer.
template <typename F>
void for_each_element(const TorsionGroup& g, F&& visit) {
    GroupElement e = GroupElement::zero(g);
    for (;;) {
        visit(e);
        size_t pos = 0;
        while (pos < e.coordinates.size() &&
               e.coordinates[pos] + 1 == g.invariant_factors[pos]) {
            e.coordinates[pos] = 0;
            ++pos;
        }
        if (pos == e.coordinates.size()) return;
        ++e.coordinates[pos];
    }
}

bool brute_force_nondegenerate(const LinkingForm& form) {
    const size_t k = form.group.rank();
    bool degenerate = false;
    for_each_element(form.group, [&](const GroupElement& g) {
        if (degenerate) return;
        bool zero = true;
        for (const Int& c : g.coordinates)
            if (c != 0) { zero = false; break; }
        if (zero) return;
        for (size_t j = 0; j < k; ++j) {
            QmodZ pairing;
            for (size_t i = 0; i < k; ++i)
                pairing = pairing + qmodz_int_scale(g.coordinates[i], form.at(i, j));
            if (!pairing.is_zero()) return;  // g pairs nontrivially
        }
        degenerate = true;
    });
    return !degenerate;
}

Int p_adic_part(Int n, const Int& p) {
    Int part = 1;
    while (n % p == 0) {
        part *= p;
        n /= p;
    }
    return part;
}

// Restriction of the form to the p-primary component. The generator of the
// p-part of Z/d_i is (d_i / p^{v_p(d_i)}) times the original generator.
LinkingForm primary_component(const LinkingForm& form, const Int& p) {
    std::vector<size_t> idx;
    std::vector<Int> cofactor;
    LinkingForm sub;
    for (size_t i = 0; i < form.group.rank(); ++i) {
        Int part = p_adic_part(form.group.invariant_factors[i], p);
        if (part == 1) continue;
        idx.push_back(i);
        cofactor.push_back(form.group.invariant_factors[i] / part);
        sub.group.invariant_factors.push_back(part);
    }
    const size_t k = idx.size();
    sub.gram.assign(k, std::vector<QmodZ>(k));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            sub.gram[a][b] =
                qmodz_int_scale(cofactor[a] * cofactor[b], form.at(idx[a], idx[b]));
    return sub;
}

constexpr long long kBruteForceOrderLimit = 1'000'000;

}  // namespace

bool TorsionGroup::is_elementary_abelian(Int* p_out) const {
    if (invariant_factors.empty()) return false;
    const Int& p = invariant_factors.front();
    if (!is_prime(p)) return false;
    for (const Int& d : invariant_factors)
        if (d != p) return false;
    if (p_out) *p_out = p;
    return true;
}

GroupElement element_add(const TorsionGroup& g, const GroupElement& a,
                         const GroupElement& b) {
    GroupElement out = GroupElement::zero(g);
    for (size_t i = 0; i < g.rank(); ++i) {
        out.coordinates[i] =
            (a.coordinates[i] + b.coordinates[i]) % g.invariant_factors[i];
    }
    return out;
}

GroupElement element_scale(const TorsionGroup& g, const Int& k,
                           const GroupElement& a) {
    GroupElement out = GroupElement::zero(g);
    for (size_t i = 0; i < g.rank(); ++i) {
        Int c = (k * a.coordinates[i]) % g.invariant_factors[i];
        if (c < 0) c += g.invariant_factors[i];
        out.coordinates[i] = c;
    }
    return out;
}

QmodZ eval_linking(const LinkingForm& form, const GroupElement& a,
                   const GroupElement& b) {
    const size_t k = form.group.rank();
    if (a.coordinates.size() != k || b.coordinates.size() != k)
        throw std::invalid_argument("eval_linking: element/group dimension mismatch");
    QmodZ acc;
    for (size_t i = 0; i < k; ++i) {
        if (a.coordinates[i] == 0) continue;
        for (size_t j = 0; j < k; ++j) {
            if (b.coordinates[j] == 0) continue;
            acc = acc + qmodz_int_scale(a.coordinates[i] * b.coordinates[j],
                                        form.at(i, j));
        }
    }
    return acc;
}

LinkingForm linking_form_from_framing(const IntMatrix& framing,
                                      SignConvention convention) {
    if (!is_symmetric(framing))
        throw std::invalid_argument("linking form: framing matrix not symmetric");
    if (determinant(framing) == 0)
        throw std::invalid_argument("linking form: framing matrix singular");

    const SmithDecomposition snf = smith_normal_form(framing);
    const Eigen::Index n = framing.rows();

    // coker(framing) = Z^n / D Z^n under x -> U x; the generator of the i-th
    // cyclic factor is U^{-1} e_i, so the form transports by congruence
    // with U^{-1}.
    RatMatrix lam_inv = rational_inverse(framing);
    RatMatrix u_inv = rational_inverse(snf.u);
    RatMatrix full = mat_mul(mat_mul(mat_transpose(u_inv), lam_inv), u_inv);

    LinkingForm form;
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (snf.d(i, i) > 1) {
            kept.push_back(i);
            form.group.invariant_factors.push_back(snf.d(i, i));
        }
    }
    const size_t k = kept.size();
    form.gram.assign(k, std::vector<QmodZ>(k));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a; b < k; ++b) {
            Rat value = full(kept[a], kept[b]);
            if (convention == SignConvention::lemma) value = -value;
            QmodZ q = QmodZ::from_rational(value);
            form.gram[a][b] = q;
            form.gram[b][a] = q;
        }

    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            if (!qmodz_int_scale(form.group.invariant_factors[a], form.at(a, b))
                     .is_zero())
                throw std::logic_error("linking form: form not defined on cokernel");
    return form;
}

bool is_nondegenerate(const LinkingForm& form) {
    if (form.group.rank() == 0) return true;
    if (form.group.order() <= kBruteForceOrderLimit)
        return brute_force_nondegenerate(form);

    // Primary components are pairwise orthogonal, so check each one.
    std::vector<Int> primes;
    Int rest = form.group.exponent();
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) primes.push_back(rest);
    for (const Int& p : primes) {
        LinkingForm sub = primary_component(form, p);
        if (sub.group.order() <= kBruteForceOrderLimit) {
            if (!brute_force_nondegenerate(sub)) return false;
        } else if (Int prime; sub.group.is_elementary_abelian(&prime)) {
            FpMatrix g = gram_mod_p(sub, static_cast<int>(prime));
            if (fp_det(g, static_cast<int>(prime)) == 0) return false;
        } else {
            throw std::invalid_argument(
                "is_nondegenerate: primary component too large for exact check");
        }
    }
    return true;
}

FpMatrix gram_mod_p(const LinkingForm& form, int p) {
    const size_t k = form.group.rank();
    FpMatrix g(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            const QmodZ& q = form.at(i, j);
            if (p % q.den() != 0)
                throw std::invalid_argument("gram_mod_p: denominator does not divide p");
            Int scaled = q.num() * (Int(p) / q.den());
            g(i, j) = static_cast<int>(scaled % p);
        }
    return g;
}

HantzscheResult check_hantzsche(const LinkingForm& form) {
    if (!is_nondegenerate(form))
        throw std::invalid_argument("check_hantzsche: degenerate form");

    if (form.group.rank() == 0) {
        Subspace zero;
        zero.p = 2;
        zero.ambient_dim = 0;
        zero.basis = FpMatrix(0, 0);
        return {HantzscheStatus::splitting, std::make_pair(zero, zero)};
    }

    Int order = form.group.order();
    Int root = sqrt(order);
    if (root * root != order) return {HantzscheStatus::no_square_order, std::nullopt};

    Int prime;
    if (!form.group.is_elementary_abelian(&prime) ||
        form.group.rank() % 2 != 0 || order > kBruteForceOrderLimit)
        return {HantzscheStatus::square_order_only, std::nullopt};

    std::vector<Subspace> lagrangians = enumerate_lagrangians(form);
    for (size_t i = 0; i < lagrangians.size(); ++i)
        for (size_t j = i + 1; j < lagrangians.size(); ++j)
            if (subspace_intersection_dim(lagrangians[i], lagrangians[j]) == 0)
                return {HantzscheStatus::splitting,
                        std::make_pair(lagrangians[i], lagrangians[j])};
    return {HantzscheStatus::no_splitting_found, std::nullopt};
}

}  // namespace torlink
