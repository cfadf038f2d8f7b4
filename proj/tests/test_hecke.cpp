#include "doctest.h"

#include <random>

#include "hecke/hecke_algebra.hpp"
#include "hecke/parse.hpp"
#include "test_util.hpp"

using namespace hecke;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> exp(-2, 2);
    std::uniform_int_distribution<int> num(-3, 3);
    LaurentPoly p(n);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) e[static_cast<size_t>(j)] = exp(rng);
        p.add_term(e, Coefficient(Rational(num(rng))));
    }
    return p;
}

HeckeElement random_element(std::mt19937& rng, const HeckeParams& params) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> gen(1, params.gen_max());
    std::uniform_int_distribution<int> len(0, 2);
    HeckeElement e = HeckeElement::zero(params);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        SignedPermutation w = SignedPermutation::identity(params.n);
        const int l = len(rng);
        for (int j = 0; j < l; ++j)
            w = w * SignedPermutation::simple_reflection(params.n, gen(rng));
        e.add_term(w, random_poly(rng, params.n));
    }
    return e;
}

}  // namespace

TEST_CASE("generator basics and quadratic relations") {
    const HeckeParams pc = HeckeParams::make_C(2, 1, 2, 1);
    const HeckeParams pa = HeckeParams::make_A(3, 1);

    CHECK_THROWS_AS(HeckeElement::gen(pa, 3), std::invalid_argument);
    CHECK_THROWS_AS(HeckeElement::t0_element(pa), std::invalid_argument);

    for (int i : {1, 2}) {
        const HeckeElement T = HeckeElement::gen(pc, i);
        const Coefficient& q = pc.q_param(i);
        CHECK(((T + HeckeElement::identity(pc)) * (T - HeckeElement::from_coeff(pc, q))).is_zero());
    }
}

TEST_CASE("one rewrite step pushes T_n through X_n") {
    const HeckeParams p = HeckeParams::make_C(1, 1, 2, 1);
    const HeckeElement Tn = HeckeElement::gen(p, 1);
    const HeckeElement lhs = Tn * HeckeElement::from_poly(p, parse_poly("X1", 1));
    // X_n^-1 T_n + (b + c X_n^-1) X_n
    HeckeElement rhs = HeckeElement::from_poly(p, parse_poly("X1^-1", 1)) * Tn;
    rhs = rhs + HeckeElement::from_poly(
                    p, (LaurentPoly(1, p.consts.b) + LaurentPoly::x_pow(1, 1, -1) * p.consts.c) *
                           LaurentPoly::x_pow(1, 1, 1));
    CHECK(lhs == rhs);
}

TEST_CASE("generator inverses") {
    const HeckeParams p = HeckeParams::make_C(2, 1, 2, 1);
    for (int i : {1, 2}) {
        CHECK(HeckeElement::gen(p, i) * HeckeElement::gen_inverse(p, i) ==
              HeckeElement::identity(p));
        CHECK(HeckeElement::gen_inverse(p, i) * HeckeElement::gen(p, i) ==
              HeckeElement::identity(p));
    }
    // r = 0 makes T_n an involution, so T_n^-1 = T_n.
    const HeckeParams p0 = HeckeParams::make_C(2, 1, 0, 0);
    CHECK(HeckeElement::gen_inverse(p0, 2) == HeckeElement::gen(p0, 2));

    // T_i^-1 X_{i+1}^-1 = q^-t X_i^-1 T_i.
    const HeckeElement lhs = HeckeElement::gen_inverse(p, 1) *
                             HeckeElement::from_poly(p, parse_poly("X2^-1", 2));
    const HeckeElement rhs =
        HeckeElement::from_poly(p, parse_poly("X1^-1", 2) * p.consts.qt.unit_inverse()) *
        HeckeElement::gen(p, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("the expanded T_0") {
    SUBCASE("n = 1 closed form") {
        const HeckeParams p = HeckeParams::make_C(1, 1, 2, 1);
        // v^{s-r} X_1 (T_n - b)
        HeckeElement expect =
            HeckeElement::from_poly(p, parse_poly("X1", 1) * Coefficient::v_pow(p.s - p.r)) *
            (HeckeElement::gen(p, 1) - HeckeElement::from_coeff(p, p.consts.b));
        CHECK(HeckeElement::t0_element(p) == expect);
    }
    SUBCASE("n = 1 degenerate parameters give X_1 T_n") {
        const HeckeParams p = HeckeParams::make_C(1, 1, 0, 0);
        CHECK(HeckeElement::t0_element(p) ==
              HeckeElement::from_poly(p, parse_poly("X1", 1)) * HeckeElement::gen(p, 1));
    }
    SUBCASE("quadratic holds for n = 1..3 and fails under the short exponent") {
        for (int n : {1, 2, 3}) {
            const HeckeParams p = HeckeParams::make_C(n, 1, 2, 1);
            const HeckeElement T0 = HeckeElement::t0_element(p);
            CHECK(((T0 + HeckeElement::identity(p)) *
                   (T0 - HeckeElement::from_coeff(p, p.consts.qs)))
                      .is_zero());
        }
        const HeckeParams p2 = HeckeParams::make_C(2, 1, 2, 1);
        const HeckeElement T0b = HeckeElement::t0_element(p2, T0Exponent::OneT);
        CHECK_FALSE(((T0b + HeckeElement::identity(p2)) *
                     (T0b - HeckeElement::from_coeff(p2, p2.consts.qs)))
                        .is_zero());
    }
}

TEST_CASE("relation suite") {
    CHECK(verify_relations(HeckeParams::make_A(3, 1)).all_pass());
    CHECK(verify_relations(HeckeParams::make_C(2, 1, 2, 1)).all_pass());

    // Equal-parameter degeneration: T_n^2 = 1 and T_0^2 = 1.
    const HeckeParams pii = HeckeParams::make_C(2, 1, 0, 0);
    CHECK(verify_relations(pii).all_pass());
    const HeckeElement Tn = HeckeElement::gen(pii, 2);
    CHECK(Tn * Tn == HeckeElement::identity(pii));
    const HeckeElement T0 = HeckeElement::t0_element(pii);
    CHECK(T0 * T0 == HeckeElement::identity(pii));

    const RelationReport bad = verify_relations(HeckeParams::make_C(2, 1, 2, 1), T0Exponent::OneT);
    CHECK_FALSE(bad.all_pass());
    for (const RelationCheck& c : bad.checks)
        if (c.name == "quadratic T0") CHECK_FALSE(c.pass);
}

TEST_CASE("product is associative and unital on random elements") {
    std::mt19937 rng(321);
    const HeckeParams p = HeckeParams::make_C(2, 1, 2, 1);
    const HeckeElement one = HeckeElement::identity(p);
    for (int trial = 0; trial < 25; ++trial) {
        const HeckeElement a = random_element(rng, p);
        const HeckeElement b = random_element(rng, p);
        const HeckeElement c = random_element(rng, p);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * one == a);
        CHECK(one * a == a);
    }
}

TEST_CASE("the subalgebra A is commutative inside H") {
    std::mt19937 rng(55);
    const HeckeParams p = HeckeParams::make_C(2, 1, 2, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const HeckeElement f = HeckeElement::from_poly(p, random_poly(rng, 2));
        const HeckeElement g = HeckeElement::from_poly(p, random_poly(rng, 2));
        CHECK(f * g == g * f);
    }
}

TEST_CASE("commutation rules match the divided differences") {
    std::mt19937 rng(77);
    const HeckeParams p = HeckeParams::make_C(2, 1, 2, 1);
    const HeckeElement T1 = HeckeElement::gen(p, 1);
    const HeckeElement Tn = HeckeElement::gen(p, 2);
    const Coefficient qt1 = p.consts.qt - Coefficient(1);
    const LaurentPoly cross =
        LaurentPoly(2, p.consts.b) + LaurentPoly::x_pow(2, 2, -1) * p.consts.c;
    for (int trial = 0; trial < 40; ++trial) {
        const LaurentPoly f = random_poly(rng, 2);
        const HeckeElement ef = HeckeElement::from_poly(p, f);
        const HeckeElement efs = HeckeElement::from_poly(p, poly_swap(f, 1));
        CHECK(T1 * ef - efs * T1 ==
              HeckeElement::from_poly(p, divided_diff_A(f, 1) * qt1));
        const HeckeElement efv = HeckeElement::from_poly(p, poly_invert_last(f));
        CHECK(ef * Tn - Tn * efv == HeckeElement::from_poly(p, cross * divided_diff_C(f)));
    }
}

TEST_CASE("W-invariant polynomials are central") {
    std::mt19937 rng(88);
    const HeckeParams p = HeckeParams::make_C(2, 1, 2, 1);
    for (int trial = 0; trial < 15; ++trial) {
        const LaurentPoly f = testutil::orbit_sum(random_poly(rng, 2), WeylType::C);
        REQUIRE(is_W_invariant(f));
        const HeckeElement ef = HeckeElement::from_poly(p, f);
        for (int i : {1, 2}) {
            const HeckeElement T = HeckeElement::gen(p, i);
            CHECK(ef * T == T * ef);
        }
    }
}

TEST_CASE("element rendering is ordered by word length") {
    const HeckeParams p = HeckeParams::make_C(2, 1, 2, 1);
    const HeckeElement e = HeckeElement::gen(p, 2) * HeckeElement::gen(p, 1) +
                           HeckeElement::from_coeff(p, Coefficient(3));
    CHECK(e.to_string() == "(3) T[e] + (1) T[s2.s1]");
}
