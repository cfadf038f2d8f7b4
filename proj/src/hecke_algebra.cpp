#include "hecke/hecke_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hecke {

HeckeParams HeckeParams::make_A(int n, int t) {
    if (n < 1) throw std::invalid_argument("HeckeParams: n must be >= 1");
    HeckeParams p;
    p.case_tag = CaseTag::A;
    p.n = n;
    p.t = t;
    p.r = 0;
    p.s = 0;
    p.consts = param_constants(t, 0, 0);
    return p;
}

HeckeParams HeckeParams::make_C(int n, int t, int r, int s) {
    if (n < 1) throw std::invalid_argument("HeckeParams: n must be >= 1");
    HeckeParams p;
    p.case_tag = CaseTag::C;
    p.n = n;
    p.t = t;
    p.r = r;
    p.s = s;
    p.consts = param_constants(t, r, s);
    return p;
}

const Coefficient& HeckeParams::q_param(int i) const {
    if (i < 1 || i > gen_max()) throw std::invalid_argument("q_param: generator index invalid for case");
    return i == n ? consts.qr : consts.qt;
}

std::string t0_exponent_name(T0Exponent e) { return e == T0Exponent::TwoT ? "s+2t(n-1)+r" : "s+t(n-1)+r"; }

HeckeElement HeckeElement::identity(const HeckeParams& params) {
    return from_coeff(params, Coefficient(1));
}

HeckeElement HeckeElement::from_poly(const HeckeParams& params, const LaurentPoly& f) {
    if (f.nvars() != params.n) throw std::invalid_argument("from_poly: variable count mismatch");
    HeckeElement e(params);
    e.add_term(SignedPermutation::identity(params.n), f);
    return e;
}

HeckeElement HeckeElement::from_coeff(const HeckeParams& params, const Coefficient& c) {
    return from_poly(params, LaurentPoly(params.n, c));
}

HeckeElement HeckeElement::gen(const HeckeParams& params, int i) {
    if (i == 0) return t0_element(params);
    if (i < 1 || i > params.gen_max()) throw std::invalid_argument("gen: generator index invalid for case");
    HeckeElement e(params);
    e.add_term(SignedPermutation::simple_reflection(params.n, i), LaurentPoly(params.n, Coefficient(1)));
    return e;
}

HeckeElement HeckeElement::gen_inverse(const HeckeParams& params, int i) {
    if (i < 1 || i > params.gen_max()) throw std::invalid_argument("gen_inverse: generator index invalid for case");
    const Coefficient qi = params.q_param(i);
    const Coefficient qi_inv = qi.unit_inverse();
    HeckeElement e = gen(params, i).scaled(qi_inv);
    e.add_term(SignedPermutation::identity(params.n),
               LaurentPoly(params.n, (Coefficient(1) - qi) * qi_inv));
    return e;
}

HeckeElement HeckeElement::t0_element(const HeckeParams& params, T0Exponent variant) {
    if (params.case_tag != CaseTag::C) throw std::invalid_argument("t0_element: defined only in case C");
    const int n = params.n;
    const long E = params.s + params.r +
                   static_cast<long>(variant == T0Exponent::TwoT ? 2 : 1) * params.t * (n - 1);
    LaurentPoly head = LaurentPoly::x_pow(n, 1, 1) * Coefficient::v_pow(E);
    HeckeElement acc = from_poly(params, head);
    for (int i = 1; i <= n - 1; ++i) acc = acc * gen_inverse(params, i);
    acc = acc * gen_inverse(params, n);
    for (int i = n - 1; i >= 1; --i) acc = acc * gen_inverse(params, i);
    return acc;
}

void HeckeElement::add_term(const SignedPermutation& w, const LaurentPoly& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    if (!(params_ == o.params_)) throw std::invalid_argument("HeckeElement: parameter mismatch");
    HeckeElement r = *this;
    for (const auto& [w, f] : o.terms_) r.add_term(w, f);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    if (!(params_ == o.params_)) throw std::invalid_argument("HeckeElement: parameter mismatch");
    HeckeElement r = *this;
    for (const auto& [w, f] : o.terms_) r.add_term(w, -f);
    return r;
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r(params_);
    for (const auto& [w, f] : terms_) r.terms_.emplace(w, -f);
    return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    return params_ == o.params_ && terms_ == o.terms_;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& f) const {
    HeckeElement r(params_);
    if (f.is_zero()) return r;
    for (const auto& [w, g] : terms_) r.add_term(w, f * g);
    return r;
}

HeckeElement HeckeElement::scaled(const Coefficient& c) const {
    HeckeElement r(params_);
    if (c.is_zero()) return r;
    for (const auto& [w, g] : terms_) r.terms_.emplace(w, g * c);
    return r;
}

HeckeElement mul_gen_left(int i, const HeckeElement& b) {
    const HeckeParams& params = b.params();
    const int n = params.n;
    if (i < 1 || i > params.gen_max()) throw std::invalid_argument("mul_gen_left: invalid generator");
    const WeylType type = params.weyl_type();
    const Coefficient& qi = params.q_param(i);
    const Coefficient qi_minus_one = qi - Coefficient(1);
    const SignedPermutation si = SignedPermutation::simple_reflection(n, i);

    // Cross term multiplier for pushing T_n through A.
    LaurentPoly cross_n(n);
    if (i == n) {
        cross_n = LaurentPoly(n, params.consts.b) +
                  LaurentPoly::x_pow(n, n, -1) * params.consts.c;
    }

    HeckeElement out(params);
    for (const auto& [u, g] : b.terms()) {
        LaurentPoly gs;
        LaurentPoly corr;
        if (i < n) {
            gs = poly_swap(g, i);
            corr = divided_diff_A(g, i) * qi_minus_one;
        } else {
            gs = poly_invert_last(g);
            corr = cross_n * divided_diff_C(g);
        }
        const SignedPermutation su = si * u;
        if (su.length(type) > u.length(type)) {
            out.add_term(su, gs);
        } else {
            out.add_term(u, gs * qi_minus_one);
            out.add_term(su, gs * qi);
        }
        out.add_term(u, corr);
    }
    return out;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
    if (!(params_ == o.params_)) throw std::invalid_argument("HeckeElement: parameter mismatch");
    const WeylType type = params_.weyl_type();
    HeckeElement result(params_);
    for (const auto& [w, f] : terms_) {
        const std::vector<int> word = w.reduced_word(type);
        HeckeElement acc = o;
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mul_gen_left(*it, acc);
        result = result + acc.scaled(f);
    }
    return result;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    const WeylType type = params_.weyl_type();
    std::vector<std::pair<std::pair<int, std::vector<int>>, std::string>> pieces;
    pieces.reserve(terms_.size());
    for (const auto& [w, f] : terms_) {
        std::vector<int> word = w.reduced_word(type);
        std::ostringstream term;
        term << "(" << f.to_string() << ") T[";
        if (word.empty()) {
            term << "e";
        } else {
            for (size_t k = 0; k < word.size(); ++k) {
                if (k > 0) term << ".";
                term << "s" << word[k];
            }
        }
        term << "]";
        pieces.emplace_back(std::make_pair(static_cast<int>(word.size()), std::move(word)), term.str());
    }
    std::sort(pieces.begin(), pieces.end());
    std::ostringstream out;
    for (size_t k = 0; k < pieces.size(); ++k) {
        if (k > 0) out << " + ";
        out << pieces[k].second;
    }
    return out.str();
}

bool RelationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

namespace {

void check_zero(RelationReport& report, const std::string& name, const HeckeElement& diff) {
    RelationCheck c;
    c.name = name;
    c.pass = diff.is_zero();
    if (!c.pass) c.difference = diff.to_string();
    report.checks.push_back(std::move(c));
}

HeckeElement quadratic_defect(const HeckeParams& p, const HeckeElement& T, const Coefficient& q) {
    // (T + 1)(T - q)
    const HeckeElement lhs = T + HeckeElement::identity(p);
    const HeckeElement rhs = T - HeckeElement::from_coeff(p, q);
    return lhs * rhs;
}

}  // namespace

RelationReport verify_relations(const HeckeParams& params, T0Exponent variant) {
    RelationReport report;
    report.params = params;
    report.t0_exponent = variant;
    const int n = params.n;

    std::vector<HeckeElement> T;  // T[i] for i = 1..gen_max
    T.reserve(static_cast<size_t>(params.gen_max()) + 1);
    T.push_back(HeckeElement::identity(params));  // placeholder at index 0
    for (int i = 1; i <= params.gen_max(); ++i) T.push_back(HeckeElement::gen(params, i));

    for (int i = 1; i <= n - 1; ++i)
        check_zero(report, "quadratic T" + std::to_string(i),
                   quadratic_defect(params, T[static_cast<size_t>(i)], params.consts.qt));

    if (params.case_tag == CaseTag::C) {
        check_zero(report, "quadratic T" + std::to_string(n),
                   quadratic_defect(params, T[static_cast<size_t>(n)], params.consts.qr));
        const HeckeElement T0 = HeckeElement::t0_element(params, variant);
        check_zero(report, "quadratic T0", quadratic_defect(params, T0, params.consts.qs));

        if (n >= 2) {
            // 4-bond at each end of the diagram.
            const HeckeElement& Tn = T[static_cast<size_t>(n)];
            const HeckeElement& Tm = T[static_cast<size_t>(n - 1)];
            check_zero(report, "braid T" + std::to_string(n - 1) + " T" + std::to_string(n),
                       Tm * Tn * Tm * Tn - Tn * Tm * Tn * Tm);
            const HeckeElement& T1 = T[1];
            check_zero(report, "braid T0 T1", T0 * T1 * T0 * T1 - T1 * T0 * T1 * T0);
        }
        for (int j = 2; j <= n; ++j) {
            const HeckeElement& Tj = T[static_cast<size_t>(j)];
            check_zero(report, "commute T0 T" + std::to_string(j), T0 * Tj - Tj * T0);
        }
    }

    // 3-bonds between interior neighbours; case C restricts them to i <= n-2.
    for (int i = 1; i <= n - 2; ++i) {
        const HeckeElement& a = T[static_cast<size_t>(i)];
        const HeckeElement& b = T[static_cast<size_t>(i + 1)];
        check_zero(report, "braid T" + std::to_string(i) + " T" + std::to_string(i + 1),
                   a * b * a - b * a * b);
    }

    for (int i = 1; i <= params.gen_max(); ++i) {
        for (int j = i + 2; j <= params.gen_max(); ++j) {
            check_zero(report, "commute T" + std::to_string(i) + " T" + std::to_string(j),
                       T[static_cast<size_t>(i)] * T[static_cast<size_t>(j)] -
                           T[static_cast<size_t>(j)] * T[static_cast<size_t>(i)]);
        }
    }

    if (params.case_tag == CaseTag::C)
        report.notes.push_back("T0 = sqrt(q)^{" + t0_exponent_name(variant) + "} X1 Tw^-1");
    return report;
}

}  // namespace hecke
