#include "hecke/modules.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

std::string subalgebra_name(Subalgebra s) {
    switch (s) {
        case Subalgebra::HSn:
            return "H_Sn";
        case Subalgebra::H0:
            return "H_0";
        case Subalgebra::Hn:
            return "H_n";
    }
    return "?";
}

std::string OneDimRep::name() const {
    std::ostringstream out;
    out << "eps(T_i -> " << lambda_A.to_string();
    if (lambda_end) {
        out << ", " << (sub == Subalgebra::Hn ? "T_0" : "T_n") << " -> "
            << lambda_end->to_string();
    }
    out << ") on " << subalgebra_name(sub);
    return out.str();
}

bool OneDimRep::operator<(const OneDimRep& o) const {
    if (sub != o.sub) return sub < o.sub;
    if (!(lambda_A == o.lambda_A)) return lambda_A < o.lambda_A;
    if (lambda_end.has_value() != o.lambda_end.has_value()) return !lambda_end.has_value();
    if (lambda_end && !(*lambda_end == *o.lambda_end)) return *lambda_end < *o.lambda_end;
    return false;
}

OneDimRep make_rep(const HeckeParams& params, Subalgebra sub, const Coefficient& lambda_A,
                   const std::optional<Coefficient>& lambda_end) {
    const Coefficient minus_one(-1);
    if (!(lambda_A == params.consts.qt) && !(lambda_A == minus_one))
        throw std::invalid_argument("make_rep: lambda_A must be q^t or -1");
    OneDimRep rep;
    rep.sub = sub;
    rep.lambda_A = lambda_A;
    rep.lambda_end = lambda_end;
    switch (sub) {
        case Subalgebra::HSn:
            if (params.case_tag != CaseTag::A)
                throw std::invalid_argument("make_rep: H_Sn is the case A subalgebra");
            if (lambda_end) throw std::invalid_argument("make_rep: H_Sn has no end scalar");
            break;
        case Subalgebra::H0:
            if (params.case_tag != CaseTag::C)
                throw std::invalid_argument("make_rep: H_0 requires case C");
            if (!lambda_end || (!(*lambda_end == params.consts.qr) && !(*lambda_end == minus_one)))
                throw std::invalid_argument("make_rep: eps(T_n) must be q^r or -1");
            break;
        case Subalgebra::Hn:
            if (params.case_tag != CaseTag::C)
                throw std::invalid_argument("make_rep: H_n requires case C");
            if (!lambda_end || (!(*lambda_end == params.consts.qs) && !(*lambda_end == minus_one)))
                throw std::invalid_argument("make_rep: eps(T_0) must be q^s or -1");
            break;
    }
    return rep;
}

LaurentPoly embed_last(const LaurentPoly& f_one_var, int n) {
    if (f_one_var.nvars() != 1) throw std::invalid_argument("embed_last: expected one variable");
    LaurentPoly out(n);
    for (const auto& [e, c] : f_one_var.terms()) {
        std::vector<int> e2(static_cast<size_t>(n), 0);
        e2[static_cast<size_t>(n - 1)] = e[0];
        out.add_term(e2, c);
    }
    return out;
}

RankOneModule::RankOneModule(const HeckeParams& params, const Coefficient& lambda_A,
                             LaurentPoly tn_param)
    : params_(params), lambda_A_(lambda_A), tn_param_(std::move(tn_param)), has_tn_(true) {
    if (params.case_tag != CaseTag::C)
        throw std::invalid_argument("RankOneModule: T_n parameter requires case C");
    if (tn_param_.nvars() != params.n)
        throw std::invalid_argument("RankOneModule: parameter polynomial has wrong variable count");
    for (int i = 1; i < params.n; ++i)
        if (!tn_param_.is_zero() && (tn_param_.min_deg(i) != 0 || tn_param_.max_deg(i) != 0))
            throw std::invalid_argument("RankOneModule: parameter must be supported on X_n");
}

RankOneModule::RankOneModule(const HeckeParams& params, const Coefficient& lambda_A)
    : params_(params), lambda_A_(lambda_A), tn_param_(params.n), has_tn_(false) {
    if (params.case_tag != CaseTag::A)
        throw std::invalid_argument("RankOneModule: case A constructor requires case A params");
}

RankOneModule RankOneModule::induced(const HeckeParams& params, const OneDimRep& rep) {
    switch (rep.sub) {
        case Subalgebra::HSn:
            return RankOneModule(params, rep.lambda_A);
        case Subalgebra::H0:
            return RankOneModule(params, rep.lambda_A, LaurentPoly(params.n, *rep.lambda_end));
        case Subalgebra::Hn: {
            // eps(T_0) determines how T_n moves the generator: evaluating the
            // T_0 word on an eigenvector g with T_n^-1 g = sigma X_n^-1 g
            // gives eps(T_0) = v^{r+s} sigma, so
            //   eps(T_0) = q^s  <->  T_n g = (b + v^{r+s} X_n^-1) g,
            //   eps(T_0) = -1   <->  T_n g = (b - v^{r-s} X_n^-1) g.
            const bool plus = *rep.lambda_end == params.consts.qs;
            if (!plus && !(*rep.lambda_end == Coefficient(-1)))
                throw std::invalid_argument("RankOneModule: eps(T_0) must be q^s or -1");
            LaurentPoly e(params.n, params.consts.b);
            e += LaurentPoly::x_pow(params.n, params.n, -1) *
                 (plus ? params.consts.half_rs_plus : -params.consts.half_rs_minus);
            return RankOneModule(params, rep.lambda_A, std::move(e));
        }
    }
    throw std::logic_error("RankOneModule::induced: unreachable");
}

LaurentPoly RankOneModule::act_gen(int i, const LaurentPoly& f) const {
    const int n = params_.n;
    if (f.nvars() != n) throw std::invalid_argument("act_gen: variable count mismatch");
    if (i == 0) {
        if (params_.case_tag != CaseTag::C)
            throw std::invalid_argument("act_gen: T_0 exists only in case C");
        // T_0 = v^{s+2t(n-1)+r} X_1 T_1^-1 .. T_{n-1}^-1 T_n^-1 T_{n-1}^-1 .. T_1^-1.
        LaurentPoly h = f;
        for (int k = 1; k <= n - 1; ++k) h = act_gen_inverse(k, h);
        h = act_gen_inverse(n, h);
        for (int k = n - 1; k >= 1; --k) h = act_gen_inverse(k, h);
        h = h * LaurentPoly::x_pow(n, 1, 1);
        const long E = params_.s + params_.r + 2L * params_.t * (n - 1);
        return h * Coefficient::v_pow(E);
    }
    if (i >= 1 && i <= n - 1) {
        LaurentPoly out = poly_swap(f, i) * lambda_A_;
        out.add_scaled(divided_diff_A(f, i), params_.consts.qt - Coefficient(1));
        return out;
    }
    if (i == n && has_tn_) {
        LaurentPoly cross(n, params_.consts.b);
        cross += LaurentPoly::x_pow(n, n, -1) * params_.consts.c;
        return poly_invert_last(f) * tn_param_ + cross * divided_diff_C(f);
    }
    throw std::invalid_argument("act_gen: generator index invalid for this structure");
}

LaurentPoly RankOneModule::act_gen_inverse(int i, const LaurentPoly& f) const {
    if (i < 1 || i > params_.gen_max())
        throw std::invalid_argument("act_gen_inverse: invalid generator");
    const Coefficient& qi = params_.q_param(i);
    LaurentPoly h = act_gen(i, f);
    h.add_scaled(f, Coefficient(1) - qi);
    return h * qi.unit_inverse();
}

LaurentPoly RankOneModule::act_word(const std::vector<int>& word, const LaurentPoly& f) const {
    LaurentPoly h = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = act_gen(*it, h);
    return h;
}

LaurentPoly RankOneModule::act_element(const HeckeElement& h, const LaurentPoly& f) const {
    if (!(h.params() == params_)) throw std::invalid_argument("act_element: parameter mismatch");
    LaurentPoly out(params_.n);
    const WeylType type = params_.weyl_type();
    for (const auto& [w, g] : h.terms()) out += g * act_word(w.reduced_word(type), f);
    return out;
}

std::optional<std::map<int, Coefficient>> eigencheck(const RankOneModule& mod, const LaurentPoly& g,
                                                     const std::vector<int>& gens) {
    if (g.is_zero()) throw std::invalid_argument("eigencheck: zero vector");
    const auto& [lead_mon, lead_coeff] = *g.terms().begin();
    std::map<int, Coefficient> table;
    for (int i : gens) {
        const LaurentPoly gi = mod.act_gen(i, g);
        Coefficient scalar;
        if (!gi.is_zero()) {
            auto q = gi.coeff(lead_mon).div_exact(lead_coeff);
            if (!q) return std::nullopt;
            scalar = *q;
        }
        if (g * scalar != gi) return std::nullopt;
        table.emplace(i, std::move(scalar));
    }
    return table;
}

ClassifyResult classify(const LaurentPoly& f_one_var, const HeckeParams& params,
                        const Coefficient& lambda_A) {
    if (params.case_tag != CaseTag::C) throw std::invalid_argument("classify: requires case C");
    const ParamConstants& pc = params.consts;
    if (!check_star(f_one_var, pc))
        throw std::invalid_argument("classify: input does not satisfy the functional equation");
    auto fam = identify_family(f_one_var, pc);
    if (!fam) throw std::logic_error("classify: solution outside the family catalogue");

    ClassifyResult res;
    res.family = *fam;
    Subalgebra sub;
    std::optional<Coefficient> lambda_end;
    switch (fam->kind) {
        case FamilyKind::ConstMinusOne:
        case FamilyKind::ConstQr:
            sub = Subalgebra::H0;
            res.shift = 0;
            lambda_end = f_one_var.constant_term();
            break;
        case FamilyKind::TypeI:
        case FamilyKind::TypeII: {
            // X^{2d} f - R_d collapses the family to its base constant.
            sub = Subalgebra::H0;
            res.shift = -fam->d;
            const LaurentPoly base = apply_shift(f_one_var, fam->d, pc);
            if (!base.is_constant()) throw std::logic_error("classify: shift did not collapse");
            lambda_end = base.constant_term();
            break;
        }
        case FamilyKind::TypeV:
        case FamilyKind::TypeVI: {
            sub = Subalgebra::H0;
            res.shift = fam->d;
            const LaurentPoly base = unapply_shift(f_one_var, fam->d, pc);
            if (!base.is_constant()) throw std::logic_error("classify: shift did not collapse");
            lambda_end = base.constant_term();
            break;
        }
        case FamilyKind::TypeIII: {
            sub = Subalgebra::Hn;
            res.shift = -fam->d;
            lambda_end = fam->sign > 0 ? pc.qs : Coefficient(-1);
            break;
        }
        case FamilyKind::TypeIV: {
            // The shifted eigen-relation picks up the opposite sign:
            // X^{-2d}(f + R_d) = a X with a = -v^{r+s} (sign +) flowing to
            // T_n g_1 = (b - v^{r-s} X_n^-1) g_1 and vice versa.
            sub = Subalgebra::Hn;
            res.shift = fam->d + 1;
            lambda_end = fam->sign > 0 ? Coefficient(-1) : pc.qs;
            break;
        }
    }
    res.rep = make_rep(params, sub, lambda_A, lambda_end);
    res.mu = *lambda_end;
    return res;
}

Coefficient verify_T0_lemma(const HeckeParams& params, const Coefficient& lambda_A, int sign) {
    if (params.case_tag != CaseTag::C)
        throw std::invalid_argument("verify_T0_lemma: requires case C");
    const int n = params.n;
    LaurentPoly e(n, params.consts.b);
    e += LaurentPoly::x_pow(n, n, -1) *
         (sign > 0 ? params.consts.half_rs_plus : -params.consts.half_rs_minus);
    const RankOneModule mod(params, lambda_A, std::move(e));
    const LaurentPoly image = mod.act_gen(0, LaurentPoly(n, Coefficient(1)));
    if (!image.is_constant()) throw std::logic_error("verify_T0_lemma: T_0 image is not a scalar");
    const Coefficient mu = image.constant_term();
    if (!(mu == params.consts.qs) && !(mu == Coefficient(-1)))
        throw std::logic_error("verify_T0_lemma: scalar is not a root of (x - q^s)(x + 1)");
    return mu;
}

bool center_check(const RankOneModule& mod, const LaurentPoly& f, int degree) {
    const int n = mod.params().n;
    if (f.nvars() != n) throw std::invalid_argument("center_check: variable count mismatch");
    std::vector<int> exps(static_cast<size_t>(n), -degree);
    const int gen_hi = mod.params().gen_max();
    while (true) {
        const LaurentPoly m = LaurentPoly::monomial(n, exps, Coefficient(1));
        const LaurentPoly fm = f * m;
        for (int i = 1; i <= gen_hi; ++i) {
            if (mod.act_gen(i, fm) != f * mod.act_gen(i, m)) return false;
        }
        int k = 0;
        while (k < n && exps[static_cast<size_t>(k)] == degree) {
            exps[static_cast<size_t>(k)] = -degree;
            ++k;
        }
        if (k == n) break;
        ++exps[static_cast<size_t>(k)];
    }
    return true;
}

}  // namespace hecke
