#include <doctest.h>

#include <random>
#include <set>

#include "torlink/linking.hpp"
#include "torlink/smith.hpp"

using namespace torlink;

namespace {

IntMatrix diag(const std::vector<int>& entries) {
    IntMatrix m = IntMatrix::Zero(entries.size(), entries.size());
    for (size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

LinkingForm make_form(std::vector<Int> factors, std::vector<std::vector<QmodZ>> gram) {
    LinkingForm f;
    f.group.invariant_factors = std::move(factors);
    f.gram = std::move(gram);
    return f;
}

// Every element of a small group, by odometer over the coordinates.
std::vector<GroupElement> all_elements(const TorsionGroup& g) {
    std::vector<GroupElement> out;
    GroupElement e = GroupElement::zero(g);
    for (;;) {
        out.push_back(e);
        size_t pos = 0;
        while (pos < e.coordinates.size() &&
               e.coordinates[pos] + 1 == g.invariant_factors[pos]) {
            e.coordinates[pos] = 0;
            ++pos;
        }
        if (pos == e.coordinates.size()) return out;
        ++e.coordinates[pos];
    }
}

// Independent brute-force isomorphism search for small groups: tries every
// assignment of generator images, demanding a well-defined bijective
// homomorphism that carries the gram matrix of `a` to the form of `b`.
bool forms_isomorphic(const LinkingForm& a, const LinkingForm& b) {
    if (!(a.group == b.group)) return false;
    const size_t k = a.group.rank();
    if (k == 0) return true;
    REQUIRE(a.group.order() <= 81);

    std::vector<GroupElement> elems = all_elements(b.group);
    std::vector<size_t> pick(k, 0);
    for (;;) {
        bool ok = true;
        std::vector<GroupElement> imgs;
        for (size_t i = 0; i < k && ok; ++i) {
            const GroupElement& img = elems[pick[i]];
            // relation d_i * g_i = 0 must be respected
            if (!(element_scale(b.group, a.group.invariant_factors[i], img) ==
                  GroupElement::zero(b.group)))
                ok = false;
            imgs.push_back(img);
        }
        if (ok) {
            for (size_t i = 0; i < k && ok; ++i)
                for (size_t j = 0; j < k && ok; ++j)
                    if (!(eval_linking(b, imgs[i], imgs[j]) == a.at(i, j))) ok = false;
        }
        if (ok) {
            // surjectivity: images must generate the whole group
            std::set<std::vector<Int>> span{GroupElement::zero(b.group).coordinates};
            bool grew = true;
            while (grew) {
                grew = false;
                for (const auto& coords : std::vector<std::vector<Int>>(span.begin(), span.end()))
                    for (const GroupElement& g : imgs) {
                        GroupElement next = element_add(b.group, {coords}, g);
                        if (span.insert(next.coordinates).second) grew = true;
                    }
            }
            if (Int(span.size()) == b.group.order()) return true;
        }
        size_t pos = 0;
        while (pos < k && pick[pos] + 1 == elems.size()) pick[pos++] = 0;
        if (pos == k) return false;
        ++pick[pos];
    }
}

IntMatrix random_unimodular(std::mt19937& rng, int n) {
    IntMatrix p = IntMatrix::Identity(n, n);
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int step = 0; step < 8; ++step) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        p.row(i) += (Int(coef(rng)) * p.row(j)).eval();
    }
    return p;
}

}  // namespace

TEST_CASE("m0 framing produces (Z/3)^6 with diagonal thirds") {
    LinkingForm form = linking_form_from_framing(diag({3, 3, 3, -3, -3, -3}));
    REQUIRE(form.group.rank() == 6);
    for (const Int& d : form.group.invariant_factors) CHECK(d == 3);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            if (i != j) CHECK(form.at(i, j) == QmodZ());
        }
    for (size_t i = 0; i < 3; ++i) CHECK(form.at(i, i) == QmodZ(1, 3));
    for (size_t i = 3; i < 6; ++i) CHECK(form.at(i, i) == QmodZ(2, 3));

    // lemma convention is the global negation
    LinkingForm lemma = linking_form_from_framing(diag({3, 3, 3, -3, -3, -3}),
                                                  SignConvention::lemma);
    for (size_t i = 0; i < 3; ++i) CHECK(lemma.at(i, i) == QmodZ(2, 3));
}

TEST_CASE("unimodular framing gives the trivial group") {
    LinkingForm form = linking_form_from_framing(IntMatrix::Identity(4, 4));
    CHECK(form.group.rank() == 0);
    CHECK(form.group.order() == 1);
    CHECK(form.group.exponent() == 1);
}

TEST_CASE("framing [[2,1],[1,2]] gives Z/3 with self-linking 2/3") {
    IntMatrix m(2, 2);
    m << 2, 1, 1, 2;
    LinkingForm form = linking_form_from_framing(m);
    REQUIRE(form.group.invariant_factors == std::vector<Int>{3});
    // adjugate oracle: inverse is (1/3) [[2,-1],[-1,2]]; both generators of
    // Z/3 have self-linking 4 * 2/3 = 2/3, so the value is transport-free
    CHECK(form.at(0, 0) == QmodZ(2, 3));
}

TEST_CASE("framing ingestion rejects bad input") {
    IntMatrix asym(2, 2);
    asym << 1, 2, 3, 4;
    CHECK_THROWS_AS(linking_form_from_framing(asym), std::invalid_argument);
    CHECK_THROWS_AS(linking_form_from_framing(IntMatrix::Zero(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("eval_linking on the m0 form") {
    LinkingForm form = linking_form_from_framing(diag({3, 3, 3, -3, -3, -3}));
    GroupElement e1 = GroupElement::generator(form.group, 0);
    CHECK(eval_linking(form, e1, e1) == QmodZ(1, 3));
    CHECK(eval_linking(form, GroupElement::zero(form.group), e1) == QmodZ());

    GroupElement e14 = element_add(form.group, e1, GroupElement::generator(form.group, 3));
    CHECK(eval_linking(form, e14, e14) == QmodZ());  // 1/3 - 1/3

    GroupElement bad{{Int(1)}};
    CHECK_THROWS_AS(eval_linking(form, bad, e1), std::invalid_argument);
}

TEST_CASE("eval_linking is symmetric and bilinear") {
    std::vector<LinkingForm> fixtures = {
        linking_form_from_framing(diag({3, 3, 3, -3, -3, -3})),
        linking_form_from_framing(diag({3, -3})),
        make_form({Int(2), Int(4)}, {{QmodZ(1, 2), QmodZ(1, 2)},
                                     {QmodZ(1, 2), QmodZ(1, 4)}}),
    };
    std::mt19937 rng(5);
    for (const LinkingForm& form : fixtures) {
        std::uniform_int_distribution<int> coord(0, 20);
        for (int trial = 0; trial < 50; ++trial) {
            GroupElement a = GroupElement::zero(form.group);
            GroupElement a2 = GroupElement::zero(form.group);
            GroupElement b = GroupElement::zero(form.group);
            for (size_t i = 0; i < form.group.rank(); ++i) {
                a.coordinates[i] = coord(rng) % form.group.invariant_factors[i];
                a2.coordinates[i] = coord(rng) % form.group.invariant_factors[i];
                b.coordinates[i] = coord(rng) % form.group.invariant_factors[i];
            }
            CHECK(eval_linking(form, a, b) == eval_linking(form, b, a));
            CHECK(eval_linking(form, element_add(form.group, a, a2), b) ==
                  eval_linking(form, a, b) + eval_linking(form, a2, b));
        }
    }
}

TEST_CASE("exponent squared kills every form value") {
    std::vector<IntMatrix> framings = {diag({3, 3, 3, -3, -3, -3}), diag({3, -3}),
                                       diag({2, 6})};
    IntMatrix odd(2, 2);
    odd << 2, 1, 1, 2;
    framings.push_back(odd);
    for (const IntMatrix& m : framings) {
        LinkingForm form = linking_form_from_framing(m);
        Int t = form.group.exponent();
        for (const auto& row : form.gram)
            for (const QmodZ& q : row) CHECK(qmodz_int_scale(t * t, q).is_zero());
    }
}

TEST_CASE("congruent framings present isomorphic forms") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-4, 4);
    int done = 0;
    while (done < 8) {
        IntMatrix m(2, 2);
        m(0, 0) = entry(rng);
        m(1, 1) = entry(rng);
        m(0, 1) = m(1, 0) = entry(rng);
        if (determinant(m) == 0 || abs(determinant(m)) > 81) continue;
        IntMatrix p = random_unimodular(rng, 2);
        IntMatrix congruent = mat_mul(mat_mul(p, m), mat_transpose(p));

        LinkingForm a = linking_form_from_framing(m);
        LinkingForm b = linking_form_from_framing(congruent);
        REQUIRE(a.group == b.group);
        CHECK(forms_isomorphic(a, b));
        ++done;
    }
}

TEST_CASE("nondegeneracy") {
    CHECK(is_nondegenerate(linking_form_from_framing(diag({3, 3, 3, -3, -3, -3}))));
    CHECK_FALSE(is_nondegenerate(make_form({Int(3)}, {{QmodZ()}})));
    // self-linking 3/9 on Z/9: the element 3g pairs trivially with everything
    CHECK_FALSE(is_nondegenerate(make_form({Int(9)}, {{QmodZ(3, 9)}})));
    CHECK(is_nondegenerate(make_form({Int(9)}, {{QmodZ(1, 9)}})));
}

TEST_CASE("hantzsche splitting checker") {
    // L(3,1): order 3 is not a square
    LinkingForm lens = linking_form_from_framing(diag({3}));
    CHECK(check_hantzsche(lens).status == HantzscheStatus::no_square_order);

    // trivial group splits trivially
    HantzscheResult trivial =
        check_hantzsche(linking_form_from_framing(IntMatrix::Identity(2, 2)));
    CHECK(trivial.status == HantzscheStatus::splitting);
    CHECK(trivial.splitting->first.dim() == 0);

    // (Z/3)^2 hyperbolic: the two isotropic lines split the group
    HantzscheResult hyp = check_hantzsche(linking_form_from_framing(diag({3, -3})));
    REQUIRE(hyp.status == HantzscheStatus::splitting);
    FpMatrix l1(1, 2), l2(1, 2);
    l1 << 1, 1;
    l2 << 1, 2;
    CHECK(hyp.splitting->first == Subspace::from_rows(3, l1));
    CHECK(hyp.splitting->second == Subspace::from_rows(3, l2));

    // definite (Z/3)^2 has square order but no isotropic line at all
    LinkingForm definite = make_form(
        {Int(3), Int(3)}, {{QmodZ(1, 3), QmodZ()}, {QmodZ(), QmodZ(1, 3)}});
    CHECK(check_hantzsche(definite).status == HantzscheStatus::no_splitting_found);

    // square order outside the elementary abelian case: verdict only
    LinkingForm z4 = make_form({Int(2), Int(8)}, {{QmodZ(1, 2), QmodZ()},
                                                  {QmodZ(), QmodZ(1, 8)}});
    CHECK(check_hantzsche(z4).status == HantzscheStatus::square_order_only);

    CHECK_THROWS_AS(check_hantzsche(make_form({Int(3)}, {{QmodZ()}})),
                    std::invalid_argument);
}

TEST_CASE("gram_mod_p") {
    LinkingForm form = linking_form_from_framing(diag({3, -3}));
    FpMatrix g = gram_mod_p(form, 3);
    CHECK(g(0, 0) == 1);
    CHECK(g(1, 1) == 2);
    CHECK(g(0, 1) == 0);
    CHECK_THROWS_AS(gram_mod_p(make_form({Int(4)}, {{QmodZ(1, 4)}}), 3),
                    std::invalid_argument);
}
