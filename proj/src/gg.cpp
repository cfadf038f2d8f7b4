#include "hecke/gg.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

// t * x for rational x, required to be an integer.
long integral(const Rational& x, const char* what) {
    if (x.get_den() != 1) throw std::invalid_argument(std::string(what) + " must be an integer");
    if (!x.get_num().fits_slong_p()) throw std::invalid_argument(std::string(what) + " out of range");
    return x.get_num().get_si();
}

}  // namespace

std::string gg_case_name(GGCase c) {
    switch (c) {
        case GGCase::I:
            return "I";
        case GGCase::II:
            return "II";
        case GGCase::III:
            return "III";
    }
    return "?";
}

GGInput make_gg_input(GGCase c, int n, int t, const Rational& alpha, const Rational& beta) {
    if (n < 1 || t < 1) throw std::invalid_argument("make_gg_input: need n >= 1 and t >= 1");
    GGInput in;
    in.gg_case = c;
    in.n = n;
    in.t = t;
    in.alpha = alpha;
    in.beta = beta;
    switch (c) {
        case GGCase::I:
            in.alpha = 0;
            in.beta = 0;
            return in;
        case GGCase::II:
            if (sgn(alpha) != 0 || sgn(beta) != 0)
                throw std::invalid_argument("make_gg_input: case II requires alpha = beta = 0");
            return in;
        case GGCase::III: {
            if (sgn(alpha) <= 0) throw std::invalid_argument("make_gg_input: case III requires alpha > 0");
            if (sgn(beta) < 0 || beta > alpha)
                throw std::invalid_argument("make_gg_input: case III requires alpha >= beta >= 0");
            integral(2 * t * alpha, "2t*alpha");
            integral(2 * t * beta, "2t*beta");
            in.r = static_cast<int>(integral(t * (alpha + beta), "r = t(alpha+beta)"));
            in.s = static_cast<int>(integral(t * (alpha - beta), "s = t(alpha-beta)"));
            return in;
        }
    }
    throw std::logic_error("make_gg_input: unreachable");
}

GenericCharacters generic_characters(const GGInput& input) {
    GenericCharacters out;
    const int n = input.n;
    const long t = input.t;
    out.chi_pi.values.resize(static_cast<size_t>(n));
    if (input.gg_case == GGCase::I) {
        // X_i/X_{i+1} = q^t is the pinned ratio; the absolute exponents
        // come from the induction data nu^{(1-n)/2} ... nu^{(n-1)/2}.
        for (int i = 1; i <= n; ++i)
            out.chi_pi.values[static_cast<size_t>(i - 1)] = {1, t * (n + 1 - 2 * i)};
        return out;
    }
    const long two_t_alpha = integral(2 * input.t * input.alpha, "2t*alpha");
    const long two_t_beta = integral(2 * input.t * input.beta, "2t*beta");
    CharacterSpec minus;
    minus.values.resize(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        out.chi_pi.values[static_cast<size_t>(i - 1)] = {1, two_t_alpha + 2 * t * (n - i)};
        minus.values[static_cast<size_t>(i - 1)] = {-1, two_t_beta + 2 * t * (n - i)};
    }
    out.chi_pi_minus = std::move(minus);
    return out;
}

std::map<int, Coefficient> scalar_table(const GGInput& input, const CharacterSpec& chi) {
    const int n = input.n;
    if (chi.nvars() != n) throw std::invalid_argument("scalar_table: character has wrong rank");
    const Coefficient one(1);
    const Coefficient qt = Coefficient::q_pow(input.t);
    std::map<int, Coefficient> table;

    for (int i = 1; i <= n - 1; ++i) {
        const Coefficient x = chi.value(i) * chi.value(i + 1).unit_inverse();
        if (x == one)
            throw std::invalid_argument("scalar_table: chi(X_i/X_{i+1}) = 1 is a pole of T_i");
        auto scalar = ((qt - one) * x).div_exact(x - one);
        if (!scalar) throw std::logic_error("scalar_table: T_i value left the coefficient ring");
        table.emplace(i, std::move(*scalar));
    }
    if (input.gg_case == GGCase::I) return table;

    if (input.gg_case == GGCase::II) {
        // T_n is the intertwining operator itself here; with the Whittaker
        // functional normalizations fixed it acts by 1 on pi and pi^-.
        table.emplace(n, one);
    } else {
        const Coefficient y = chi.value(n);
        const Coefficient y2 = y * y;
        if (y2 == one) throw std::invalid_argument("scalar_table: chi(X_n)^2 = 1 is a pole of T_n");
        const Coefficient qr = Coefficient::q_pow(input.r);
        const long two_t_alpha = integral(2 * input.t * input.alpha, "2t*alpha");
        const long two_t_beta = integral(2 * input.t * input.beta, "2t*beta");
        const Coefficient qtb = Coefficient::v_pow(two_t_beta);
        const Coefficient qta = Coefficient::v_pow(two_t_alpha);
        const Coefficient num = y * ((qr - one) * y - (qtb - qta));
        auto scalar = num.div_exact(y2 - one);
        if (!scalar) throw std::logic_error("scalar_table: T_n value left the coefficient ring");
        table.emplace(n, std::move(*scalar));
    }

    // T_0 = v^{r + 2t(n-1) + s} X_1 T_1^-1 .. T_{n-1}^-1 T_n^-1 T_{n-1}^-1 .. T_1^-1,
    // evaluated multiplicatively on the one-dimensional module.
    Coefficient t0 = Coefficient::v_pow(input.r + input.s + 2L * input.t * (n - 1));
    t0 *= chi.value(1);
    for (int i = 1; i <= n - 1; ++i) {
        const Coefficient inv = table.at(i).unit_inverse();
        t0 *= inv * inv;
    }
    t0 *= table.at(n).unit_inverse();
    table.emplace(0, std::move(t0));
    return table;
}

GGReport determine(const GGInput& input) {
    GGReport report;
    report.input = input;
    const GenericCharacters chars = generic_characters(input);

    if (input.gg_case == GGCase::I) {
        report.params = HeckeParams::make_A(input.n, input.t);
        report.table_pi = scalar_table(input, chars.chi_pi);
        for (const auto& [i, scalar] : report.table_pi)
            if (!(scalar == report.params.consts.qt))
                throw std::logic_error("determine: case I table is not constant q^t");
        report.decision = make_rep(report.params, Subalgebra::HSn, report.params.consts.qt, std::nullopt);
        report.notes.push_back("every T_i acts by q^t on the generic quotient, and the module maps "
                               "onto it, so the inducing character is eps(T_i) = q^t");
        report.notes.push_back("absolute X_i exponents in chi are presentation-dependent; only the "
                               "ratios X_i/X_{i+1} = q^t enter the decision");
        return report;
    }

    report.params = HeckeParams::make_C(input.n, input.t, input.r, input.s);
    report.table_pi = scalar_table(input, chars.chi_pi);
    report.table_pi_minus = scalar_table(input, *chars.chi_pi_minus);
    const auto& pi = report.table_pi;
    const auto& pim = *report.table_pi_minus;

    if (pi.at(0) == pim.at(0))
        throw std::logic_error("determine: T_0 acts by the same scalar on pi and pi^-");
    for (int i = 1; i <= input.n; ++i)
        if (!(pi.at(i) == pim.at(i)))
            throw std::logic_error("determine: tables disagree inside H_0");

    // T_0 separates pi from pi^-, so the structure is induced from H_0 and
    // eps is the common part of the tables.
    report.decision = make_rep(report.params, Subalgebra::H0,
                               input.n >= 2 ? pi.at(1) : report.params.consts.qt, pi.at(input.n));
    std::ostringstream sep;
    sep << "T_0 acts by " << pi.at(0).to_string() << " on pi and by " << pim.at(0).to_string()
        << " on pi^-, so the module is induced from H_0";
    report.notes.push_back(sep.str());

    if (input.gg_case == GGCase::II) {
        report.notes.push_back(
            "T_n here is the intertwining operator itself (no pole-removing factor); the Whittaker "
            "normalizations pin T_n -> 1 on pi and pi^-");
        // Replacing T_n by (-1)^e X_n^f T_n preserves the relations but
        // permutes the four candidate structures; enumerate the effect.
        const Coefficient xn_pi = chars.chi_pi.value(input.n);
        const Coefficient xn_pim = chars.chi_pi_minus->value(input.n);
        for (int e = 0; e <= 1; ++e) {
            for (int fpar = 0; fpar <= 1; ++fpar) {
                const Coefficient sign(e == 0 ? 1 : -1);
                Coefficient tn_pi = sign * pi.at(input.n);
                Coefficient tn_pim = sign * pim.at(input.n);
                if (fpar == 1) {
                    tn_pi *= xn_pi;
                    tn_pim *= xn_pim;
                }
                const Coefficient t0_pi = pi.at(0) * pi.at(input.n) * tn_pi.unit_inverse();
                const Coefficient t0_pim = pim.at(0) * pim.at(input.n) * tn_pim.unit_inverse();
                std::ostringstream note;
                note << "T_n' = (-1)^" << e << " X_n^" << (fpar == 0 ? "even" : "odd") << " T_n: ";
                if (tn_pi == tn_pim) {
                    note << "induced from H_0 with eps(T_n') = " << tn_pi.to_string();
                } else {
                    note << "induced from H_n with eps(T_0') = " << t0_pi.to_string();
                    if (!(t0_pi == t0_pim)) note << " (inconsistent)";
                }
                if (e == 0 && fpar == 0) note << " [the normalization used]";
                report.notes.push_back(note.str());
            }
        }
    }
    return report;
}

}  // namespace hecke
