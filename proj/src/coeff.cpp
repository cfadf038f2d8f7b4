#include "hecke/coeff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hecke {

Coefficient::Coefficient(const Rational& constant) {
    if (sgn(constant) != 0) terms_.emplace_back(0, constant);
}

Coefficient::Coefficient(long constant) {
    if (constant != 0) terms_.emplace_back(0, Rational(constant));
}

Coefficient Coefficient::monomial(const Rational& a, long k) {
    Coefficient c;
    if (sgn(a) != 0) c.terms_.emplace_back(k, a);
    return c;
}

Coefficient Coefficient::v_pow(long k) { return monomial(Rational(1), k); }

Coefficient Coefficient::q_pow(long m) { return monomial(Rational(1), 2 * m); }

bool Coefficient::is_one() const {
    return terms_.size() == 1 && terms_.front().first == 0 && terms_.front().second == 1;
}

bool Coefficient::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

Rational Coefficient::coeff(long k) const {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                     [](const Term& t, long e) { return t.first < e; });
    return (it != terms_.end() && it->first == k) ? it->second : Rational(0);
}

long Coefficient::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero");
    return terms_.front().first;
}

long Coefficient::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero");
    return terms_.back().first;
}

void Coefficient::add_term(long exp, const Rational& a) {
    if (sgn(a) == 0) return;
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                     [](const Term& t, long e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += a;
        if (sgn(it->second) == 0) terms_.erase(it);
    } else {
        terms_.emplace(it, exp, a);
    }
}

void Coefficient::merge_add(const std::vector<Term>& other, bool negate) {
    if (other.empty()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.size());
    auto a = terms_.cbegin();
    auto b = other.cbegin();
    while (a != terms_.cend() && b != other.cend()) {
        if (a->first < b->first) {
            merged.push_back(std::move(*a++));
        } else if (b->first < a->first) {
            merged.emplace_back(b->first, negate ? Rational(-b->second) : b->second);
            ++b;
        } else {
            Rational sum = negate ? Rational(a->second - b->second) : Rational(a->second + b->second);
            if (sgn(sum) != 0) merged.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    for (; a != terms_.cend(); ++a) merged.push_back(std::move(*a));
    for (; b != other.cend(); ++b)
        merged.emplace_back(b->first, negate ? Rational(-b->second) : b->second);
    terms_ = std::move(merged);
}

Coefficient Coefficient::operator-() const {
    Coefficient r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, a] : terms_) r.terms_.emplace_back(e, -a);
    return r;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    Coefficient r = *this;
    r.merge_add(o.terms_, false);
    return r;
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
    Coefficient r = *this;
    r.merge_add(o.terms_, true);
    return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    merge_add(o.terms_, false);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    merge_add(o.terms_, true);
    return *this;
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
    Coefficient r;
    r.add_mul(*this, o);
    return r;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    Coefficient r;
    r.add_mul(*this, o);
    terms_ = std::move(r.terms_);
    return *this;
}

void Coefficient::merge_add_scaled(const std::vector<Term>& other, long shift,
                                   const Rational& scale) {
    if (other.empty() || scale.sgn() == 0) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.size());
    auto a = terms_.begin();
    auto b = other.cbegin();
    while (a != terms_.end() && b != other.cend()) {
        const long be = b->first + shift;
        if (a->first < be) {
            merged.push_back(std::move(*a++));
        } else if (be < a->first) {
            merged.emplace_back(be, scale * b->second);
            ++b;
        } else {
            Rational sum = std::move(a->second);
            sum += scale * b->second;
            if (sum.sgn() != 0) merged.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
    for (; b != other.cend(); ++b) merged.emplace_back(b->first + shift, scale * b->second);
    terms_ = std::move(merged);
}

void Coefficient::add_mul(const Coefficient& a, const Coefficient& b) {
    if (a.terms_.empty() || b.terms_.empty()) return;
    // Single-term factors reduce to a shifted scaled merge, the hot case.
    if (a.terms_.size() == 1) {
        merge_add_scaled(b.terms_, a.terms_.front().first, a.terms_.front().second);
        return;
    }
    if (b.terms_.size() == 1) {
        merge_add_scaled(a.terms_, b.terms_.front().first, b.terms_.front().second);
        return;
    }
    for (const auto& [shift, scale] : a.terms_) merge_add_scaled(b.terms_, shift, scale);
}

std::optional<Coefficient> Coefficient::div_exact(const Coefficient& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero coefficient");
    if (is_zero()) return Coefficient();
    // Long division from the top; the leading term of d is a unit of the ring,
    // so the quotient exists iff the remainder comes out zero.
    Coefficient rem = *this;
    Coefficient quot;
    const long dtop = d.max_exp();
    const Rational& dlead = d.terms_.back().second;
    const long qmin = min_exp() - d.min_exp();
    while (!rem.is_zero()) {
        const long k = rem.max_exp() - dtop;
        if (k < qmin) return std::nullopt;
        Coefficient piece = monomial(rem.terms_.back().second / dlead, k);
        quot += piece;
        rem -= piece * d;
    }
    return quot;
}

Coefficient Coefficient::unit_inverse() const {
    if (!is_monomial()) throw std::invalid_argument("unit_inverse: not a single-term coefficient");
    const auto& [e, a] = terms_.front();
    return monomial(1 / a, -e);
}

std::optional<Coefficient> Coefficient::sqrt() const {
    if (is_zero()) return Coefficient();
    const long lo = min_exp();
    const long hi = max_exp();
    if (((hi - lo) % 2) != 0) return std::nullopt;
    if ((lo % 2 + 2) % 2 != 0) return std::nullopt;
    // Shift to an ordinary polynomial with nonzero constant term,
    // take the root coefficient by coefficient from the bottom.
    const long m = (hi - lo) / 2;
    auto d0 = rational_sqrt(coeff(lo));
    if (!d0 || sgn(*d0) == 0) return std::nullopt;
    std::vector<Rational> g(static_cast<size_t>(m) + 1, Rational(0));
    g[0] = *d0;
    for (long j = 1; j <= m; ++j) {
        Rational acc = coeff(lo + j);
        for (long a = 1; a < j; ++a) acc -= g[static_cast<size_t>(a)] * g[static_cast<size_t>(j - a)];
        g[static_cast<size_t>(j)] = acc / (2 * g[0]);
    }
    Coefficient root;
    for (long j = 0; j <= m; ++j)
        if (sgn(g[static_cast<size_t>(j)]) != 0)
            root.terms_.emplace_back(lo / 2 + j, g[static_cast<size_t>(j)]);
    if (root * root != *this) return std::nullopt;
    return root;
}

Rational Coefficient::eval(const Rational& v0) const {
    if (sgn(v0) <= 0) throw std::invalid_argument("eval: v0 must be positive");
    Rational acc(0);
    for (const auto& [e, a] : terms_) {
        Rational p(1);
        const long n = e < 0 ? -e : e;
        for (long i = 0; i < n; ++i) p *= v0;
        if (e < 0) p = 1 / p;
        acc += a * p;
    }
    return acc;
}

std::string Coefficient::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const long e = it->first;
        Rational a = it->second;
        if (first) {
            if (sgn(a) < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "v";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

ParamConstants param_constants(int t, int r, int s) {
    if (t < 1) throw std::invalid_argument("param_constants: t must be >= 1");
    if (s < 0 || r < s) throw std::invalid_argument("param_constants: need r >= s >= 0");
    ParamConstants p;
    p.t = t;
    p.r = r;
    p.s = s;
    p.qt = Coefficient::q_pow(t);
    p.qr = Coefficient::q_pow(r);
    p.qs = Coefficient::q_pow(s);
    p.b = p.qr - Coefficient(1);
    p.half_rs_plus = Coefficient::v_pow(r + s);
    p.half_rs_minus = Coefficient::v_pow(r - s);
    p.c = p.half_rs_plus - p.half_rs_minus;
    return p;
}

}  // namespace hecke
