#include "doctest.h"

#include "hecke/gg.hpp"
#include "hecke/parse.hpp"

using namespace hecke;

namespace {

bool is_root_of(const Coefficient& x, const Coefficient& q) {
    return (x + Coefficient(1)) * (x - q) == Coefficient();
}

}  // namespace

TEST_CASE("input validation") {
    CHECK_THROWS_AS(make_gg_input(GGCase::III, 2, 1, Rational(0), Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_gg_input(GGCase::III, 2, 1, Rational(1, 2), Rational(1)),
                    std::invalid_argument);
    // r = t(alpha + beta) must be an integer
    CHECK_THROWS_AS(make_gg_input(GGCase::III, 2, 1, Rational(1), Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_gg_input(GGCase::II, 2, 1, Rational(1), Rational(0)),
                    std::invalid_argument);
    const GGInput ok = make_gg_input(GGCase::III, 2, 1, Rational(3, 2), Rational(1, 2));
    CHECK(ok.r == 2);
    CHECK(ok.s == 1);
    const GGInput ok2 = make_gg_input(GGCase::III, 1, 2, Rational(1, 2), Rational(1, 2));
    CHECK(ok2.r == 2);
    CHECK(ok2.s == 0);
}

TEST_CASE("generic characters") {
    SUBCASE("case III") {
        const GGInput in = make_gg_input(GGCase::III, 2, 1, Rational(3, 2), Rational(1, 2));
        const GenericCharacters chars = generic_characters(in);
        CHECK(chars.chi_pi.value(1) == Coefficient::v_pow(5));
        CHECK(chars.chi_pi.value(2) == Coefficient::v_pow(3));
        REQUIRE(chars.chi_pi_minus.has_value());
        CHECK(chars.chi_pi_minus->value(1) == -Coefficient::v_pow(3));
        CHECK(chars.chi_pi_minus->value(2) == -Coefficient::v_pow(1));
    }
    SUBCASE("case II at n = 1") {
        const GGInput in = make_gg_input(GGCase::II, 1, 1, Rational(0), Rational(0));
        const GenericCharacters chars = generic_characters(in);
        CHECK(chars.chi_pi.value(1) == Coefficient(1));
        REQUIRE(chars.chi_pi_minus.has_value());
        CHECK(chars.chi_pi_minus->value(1) == Coefficient(-1));
    }
    SUBCASE("case I ratios") {
        for (int n : {2, 3, 4}) {
            for (int t : {1, 2}) {
                const GGInput in = make_gg_input(GGCase::I, n, t, Rational(0), Rational(0));
                const GenericCharacters chars = generic_characters(in);
                for (int i = 1; i <= n - 1; ++i) {
                    const Coefficient ratio =
                        chars.chi_pi.value(i) * chars.chi_pi.value(i + 1).unit_inverse();
                    CHECK(ratio == Coefficient::q_pow(t));
                }
            }
        }
    }
}

TEST_CASE("scalar tables") {
    SUBCASE("case III, n = 2, t = 1, alpha = 3/2, beta = 1/2") {
        const GGInput in = make_gg_input(GGCase::III, 2, 1, Rational(3, 2), Rational(1, 2));
        const GenericCharacters chars = generic_characters(in);
        const auto pi = scalar_table(in, chars.chi_pi);
        CHECK(pi.at(1) == Coefficient::q_pow(1));
        CHECK(pi.at(2) == Coefficient::q_pow(2));
        CHECK(pi.at(0) == Coefficient::q_pow(1));  // q^s with s = 1
        const auto pim = scalar_table(in, *chars.chi_pi_minus);
        CHECK(pim.at(1) == Coefficient::q_pow(1));
        CHECK(pim.at(2) == Coefficient::q_pow(2));
        CHECK(pim.at(0) == Coefficient(-1));
    }
    SUBCASE("case II, n = 2, t = 1, table on pi^-") {
        const GGInput in = make_gg_input(GGCase::II, 2, 1, Rational(0), Rational(0));
        const auto pim = scalar_table(in, *generic_characters(in).chi_pi_minus);
        CHECK(pim.at(1) == Coefficient::q_pow(1));
        CHECK(pim.at(2) == Coefficient(1));
        CHECK(pim.at(0) == Coefficient(-1));
    }
    SUBCASE("poles are rejected") {
        const GGInput in = make_gg_input(GGCase::III, 2, 1, Rational(1), Rational(0));
        const GenericCharacters chars = generic_characters(in);
        CHECK_NOTHROW(scalar_table(in, chars.chi_pi));
        CHECK_THROWS_AS(scalar_table(in, *chars.chi_pi_minus), std::invalid_argument);
        CharacterSpec flat;
        flat.values = {{1, 0}, {1, 0}};
        CHECK_THROWS_AS(scalar_table(in, flat), std::invalid_argument);
    }
}

TEST_CASE("every scalar is a root of its generator's quadratic") {
    std::vector<GGInput> grid;
    for (int n : {1, 2, 3})
        for (int t : {1, 2}) {
            grid.push_back(make_gg_input(GGCase::II, n, t, Rational(0), Rational(0)));
            for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(3, 2)})
                for (const Rational& beta : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
                    if (beta > alpha) continue;
                    const Rational r = t * (alpha + beta);
                    const Rational s = t * (alpha - beta);
                    if (r.get_den() != 1 || s.get_den() != 1) continue;
                    grid.push_back(make_gg_input(GGCase::III, n, t, alpha, beta));
                }
        }
    for (const GGInput& in : grid) {
        const GenericCharacters chars = generic_characters(in);
        const Coefficient qt = Coefficient::q_pow(in.t);
        const Coefficient qr = Coefficient::q_pow(in.r);
        const Coefficient qs = Coefficient::q_pow(in.s);
        for (const CharacterSpec* chi : {&chars.chi_pi, &*chars.chi_pi_minus}) {
            const auto table = scalar_table(in, *chi);
            for (const auto& [i, scalar] : table) {
                CAPTURE(in.n);
                CAPTURE(i);
                if (i == 0)
                    CHECK(is_root_of(scalar, qs));
                else if (i == in.n)
                    CHECK(is_root_of(scalar, qr));
                else
                    CHECK(is_root_of(scalar, qt));
            }
        }
    }
}

TEST_CASE("the T_0 word evaluation identity") {
    // v^{r + 2t(n-1) + s} q^{-2t(n-1)} q^{-r} chi(X_1) = q^s.
    for (int n : {1, 2, 3})
        for (int t : {1, 2})
            for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(3, 2)})
                for (const Rational& beta : {Rational(1, 2), Rational(1)}) {
                    if (beta > alpha) continue;
                    if (Rational(t * (alpha + beta)).get_den() != 1) continue;
                    if (Rational(t * (alpha - beta)).get_den() != 1) continue;
                    const GGInput in = make_gg_input(GGCase::III, n, t, alpha, beta);
                    const Coefficient lhs =
                        Coefficient::v_pow(in.r + in.s + 2L * t * (n - 1)) *
                        Coefficient::q_pow(-2L * t * (n - 1)) * Coefficient::q_pow(-in.r) *
                        generic_characters(in).chi_pi.value(1);
                    CHECK(lhs == Coefficient::q_pow(in.s));
                }
}

TEST_CASE("determination of the Gelfand-Graev module") {
    SUBCASE("case I") {
        const GGReport rep = determine(make_gg_input(GGCase::I, 3, 2, Rational(0), Rational(0)));
        CHECK(rep.decision.sub == Subalgebra::HSn);
        CHECK(rep.decision.lambda_A == Coefficient::q_pow(2));
        CHECK_FALSE(rep.decision.lambda_end.has_value());
    }
    SUBCASE("case III") {
        const GGReport rep =
            determine(make_gg_input(GGCase::III, 2, 1, Rational(3, 2), Rational(1, 2)));
        CHECK(rep.decision.sub == Subalgebra::H0);
        CHECK(rep.decision.lambda_A == Coefficient::q_pow(1));
        CHECK(*rep.decision.lambda_end == Coefficient::q_pow(2));
        CHECK(rep.table_pi.at(0) == Coefficient::q_pow(1));
        CHECK(rep.table_pi_minus->at(0) == Coefficient(-1));
    }
    SUBCASE("case II") {
        const GGReport rep = determine(make_gg_input(GGCase::II, 1, 1, Rational(0), Rational(0)));
        CHECK(rep.decision.sub == Subalgebra::H0);
        CHECK(*rep.decision.lambda_end == Coefficient(1));
        // the normalization annotation enumerates all four candidate structures
        int h0 = 0, hn = 0;
        for (const std::string& note : rep.notes) {
            if (note.find("T_n' =") == std::string::npos) continue;
            if (note.find("from H_0") != std::string::npos) ++h0;
            if (note.find("from H_n") != std::string::npos) ++hn;
        }
        CHECK(h0 == 2);
        CHECK(hn == 2);
    }
}

TEST_CASE("the decision feeds back into a consistent module") {
    for (const GGInput& in : {make_gg_input(GGCase::III, 2, 1, Rational(3, 2), Rational(1, 2)),
                              make_gg_input(GGCase::II, 2, 1, Rational(0), Rational(0)),
                              make_gg_input(GGCase::III, 3, 2, Rational(1), Rational(1))}) {
        const GGReport rep = determine(in);
        const RankOneModule mod = RankOneModule::induced(rep.params, rep.decision);
        std::vector<int> gens;
        for (int i = 1; i <= in.n; ++i) gens.push_back(i);
        const auto table = eigencheck(mod, LaurentPoly(in.n, Coefficient(1)), gens);
        REQUIRE(table.has_value());
        for (const auto& [i, scalar] : *table) CHECK(scalar == rep.table_pi.at(i));
    }
}
