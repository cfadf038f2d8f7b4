#include "hecke/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

bool GrlexDesc::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int ga = std::accumulate(a.begin(), a.end(), 0);
    const int gb = std::accumulate(b.begin(), b.end(), 0);
    if (ga != gb) return ga > gb;
    return a > b;
}

LaurentPoly::LaurentPoly(int n, const Coefficient& constant) : n_(n) {
    if (!constant.is_zero()) terms_.emplace(std::vector<int>(static_cast<size_t>(n), 0), constant);
}

LaurentPoly LaurentPoly::monomial(int n, const std::vector<int>& exps, const Coefficient& c) {
    if (static_cast<int>(exps.size()) != n) throw std::invalid_argument("monomial: bad exponent vector");
    LaurentPoly p(n);
    if (!c.is_zero()) p.terms_.emplace(exps, c);
    return p;
}

LaurentPoly LaurentPoly::x_pow(int n, int i, int k) {
    if (i < 1 || i > n) throw std::invalid_argument("x_pow: index out of range");
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i - 1)] = k;
    return monomial(n, e, Coefficient(1));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Coefficient LaurentPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Coefficient() : it->second;
}

Coefficient LaurentPoly::constant_term() const {
    return coeff(std::vector<int>(static_cast<size_t>(n_), 0));
}

void LaurentPoly::add_term(const std::vector<int>& exps, const Coefficient& c) {
    if (static_cast<int>(exps.size()) != n_) throw std::invalid_argument("add_term: bad exponent vector");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    LaurentPoly r(n_);
    std::vector<int> e(static_cast<size_t>(n_));
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < n_; ++i)
                e[static_cast<size_t>(i)] = e1[static_cast<size_t>(i)] + e2[static_cast<size_t>(i)];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Coefficient& c) const {
    LaurentPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& src, const Coefficient& c) {
    if (n_ != src.n_) throw std::invalid_argument("add_scaled: variable count mismatch");
    if (c.is_zero()) return;
    for (const auto& [e, a] : src.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, a * c);
            continue;
        }
        it->second.add_mul(a, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    // Any total order works for use as a set key; compare term lists.
    return terms_ < o.terms_;
}

int LaurentPoly::min_deg(int i) const {
    if (terms_.empty()) throw std::logic_error("min_deg of zero polynomial");
    int m = terms_.begin()->first[static_cast<size_t>(i - 1)];
    for (const auto& [e, c] : terms_) m = std::min(m, e[static_cast<size_t>(i - 1)]);
    return m;
}

int LaurentPoly::max_deg(int i) const {
    if (terms_.empty()) throw std::logic_error("max_deg of zero polynomial");
    int m = terms_.begin()->first[static_cast<size_t>(i - 1)];
    for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<size_t>(i - 1)]);
    return m;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<const std::vector<int>*, const Coefficient*>> ordered;
    ordered.reserve(terms_.size());
    for (const auto& [e, c] : terms_) ordered.emplace_back(&e, &c);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return GrlexDesc()(*a.first, *b.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [eptr, cptr] : ordered) {
        const std::vector<int>& e = *eptr;
        const Coefficient& c = *cptr;
        std::ostringstream mon;
        bool trivial = true;
        for (int i = 0; i < n_; ++i) {
            const int k = e[static_cast<size_t>(i)];
            if (k == 0) continue;
            if (!trivial) mon << "*";
            mon << "X" << (i + 1);
            if (k != 1) mon << "^" << k;
            trivial = false;
        }
        std::string piece;
        if (trivial) {
            piece = c.to_string();
        } else if (c.is_monomial()) {
            const std::string cs = c.to_string();
            piece = (cs == "1") ? mon.str() : (cs == "-1" ? "-" + mon.str() : cs + "*" + mon.str());
        } else {
            piece = "(" + c.to_string() + ")*" + mon.str();
        }
        if (first) {
            out << piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out << " - " << piece.substr(1);
        } else {
            out << " + " << piece;
        }
        first = false;
    }
    return out.str();
}

LaurentPoly poly_swap(const LaurentPoly& f, int i) {
    const int n = f.nvars();
    if (i < 1 || i > n - 1) throw std::invalid_argument("poly_swap: index out of range");
    LaurentPoly r(n);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> e2 = e;
        std::swap(e2[static_cast<size_t>(i - 1)], e2[static_cast<size_t>(i)]);
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly poly_invert_last(const LaurentPoly& f) {
    const int n = f.nvars();
    if (n < 1) throw std::invalid_argument("poly_invert_last: no variables");
    LaurentPoly r(n);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> e2 = e;
        e2[static_cast<size_t>(n - 1)] = -e2[static_cast<size_t>(n - 1)];
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly weyl_act(const SignedPermutation& w, const LaurentPoly& f) {
    const int n = f.nvars();
    if (w.rank() != n) throw std::invalid_argument("weyl_act: rank mismatch");
    LaurentPoly r(n);
    std::vector<int> e2(static_cast<size_t>(n));
    for (const auto& [e, c] : f.terms()) {
        std::fill(e2.begin(), e2.end(), 0);
        for (int i = 1; i <= n; ++i) {
            const int m = w.image(i);
            e2[static_cast<size_t>(std::abs(m) - 1)] += (m < 0 ? -1 : 1) * e[static_cast<size_t>(i - 1)];
        }
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly divide_exact_in_var(const LaurentPoly& f, const LaurentPoly& divisor, int var) {
    const int n = f.nvars();
    if (divisor.nvars() != n) throw std::invalid_argument("divide_exact_in_var: variable count mismatch");
    if (f.is_zero()) return LaurentPoly(n);

    const int J = divisor.max_deg(var);
    const int jmin = divisor.min_deg(var);
    // Leading part must be exactly 1 * X_var^J.
    {
        LaurentPoly lead(n);
        for (const auto& [e, c] : divisor.terms())
            if (e[static_cast<size_t>(var - 1)] == J) lead.add_term(e, c);
        std::vector<int> expect(static_cast<size_t>(n), 0);
        expect[static_cast<size_t>(var - 1)] = J;
        if (lead != LaurentPoly::monomial(n, expect, Coefficient(1)))
            throw std::invalid_argument("divide_exact_in_var: divisor not monic in the variable");
    }

    const int qlow = f.min_deg(var) - jmin;
    LaurentPoly rem = f;
    LaurentPoly quot(n);
    while (!rem.is_zero()) {
        const int k = rem.max_deg(var);
        if (k - J < qlow) throw std::logic_error("divide_exact_in_var: division not exact");
        LaurentPoly piece(n);
        for (const auto& [e, c] : rem.terms()) {
            if (e[static_cast<size_t>(var - 1)] != k) continue;
            std::vector<int> e2 = e;
            e2[static_cast<size_t>(var - 1)] -= J;
            piece.add_term(e2, c);
        }
        quot += piece;
        rem -= piece * divisor;
    }
    return quot;
}

LaurentPoly divided_diff_A(const LaurentPoly& f, int i) {
    const int n = f.nvars();
    if (i < 1 || i > n - 1) throw std::invalid_argument("divided_diff_A: index out of range");
    LaurentPoly num = f - poly_swap(f, i);
    if (num.is_zero()) return LaurentPoly(n);
    // (f - f^{s_i}) / (1 - X_{i+1}/X_i) = X_i (f - f^{s_i}) / (X_i - X_{i+1}).
    num = num * LaurentPoly::x_pow(n, i, 1);
    LaurentPoly divisor = LaurentPoly::x_pow(n, i, 1) - LaurentPoly::x_pow(n, i + 1, 1);
    return divide_exact_in_var(num, divisor, i);
}

LaurentPoly divided_diff_C(const LaurentPoly& f) {
    const int n = f.nvars();
    LaurentPoly num = f - poly_invert_last(f);
    if (num.is_zero()) return LaurentPoly(n);
    // (f - f^vee) / (1 - 1/X_n^2) = X_n^2 (f - f^vee) / (X_n^2 - 1).
    num = num * LaurentPoly::x_pow(n, n, 2);
    LaurentPoly divisor = LaurentPoly::x_pow(n, n, 2) - LaurentPoly(n, Coefficient(1));
    return divide_exact_in_var(num, divisor, n);
}

LaurentPoly build_R_d(int d, const Coefficient& b, const Coefficient& c) {
    if (d < 1) throw std::invalid_argument("build_R_d: d must be positive");
    LaurentPoly r(1);
    for (int j = 1; j <= d; ++j) {
        r.add_term({2 * j}, b);
        r.add_term({2 * j - 1}, c);
    }
    return r;
}

bool is_W_invariant(const LaurentPoly& f) {
    const int n = f.nvars();
    for (int i = 1; i <= n - 1; ++i)
        if (poly_swap(f, i) != f) return false;
    return poly_invert_last(f) == f;
}

Coefficient CharacterSpec::value(int i) const {
    const auto& v = values[static_cast<size_t>(i - 1)];
    return Coefficient::monomial(Rational(v.sign), v.vexp);
}

Coefficient eval_character(const LaurentPoly& f, const CharacterSpec& chi) {
    if (chi.nvars() != f.nvars()) throw std::invalid_argument("eval_character: variable count mismatch");
    Coefficient acc;
    for (const auto& [e, c] : f.terms()) {
        long vexp = 0;
        int sign = 1;
        for (int i = 1; i <= f.nvars(); ++i) {
            const int k = e[static_cast<size_t>(i - 1)];
            const auto& val = chi.values[static_cast<size_t>(i - 1)];
            vexp += static_cast<long>(k) * val.vexp;
            if (val.sign < 0 && (k % 2 != 0)) sign = -sign;
        }
        acc += c * Coefficient::monomial(Rational(sign), vexp);
    }
    return acc;
}

}  // namespace hecke
