#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// An element of Q[v, v^-1], the coefficient ring of everything in this
// library. The formal variable v is a square root of q, so that q^t = v^{2t}
// and the half-integral powers sqrt(q)^{r+s} = v^{r+s} are honest ring
// elements for all integers r, s.
//
// Stored sparsely as (exponent, rational) pairs in ascending exponent order
// with no zero terms (canonical form); arithmetic is merge-based. Values are
// immutable in spirit: every operation returns a fresh value, so
// Coefficients can be shared freely across threads.
class Coefficient {
public:
    using Term = std::pair<long, Rational>;

    Coefficient() = default;
    Coefficient(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Coefficient(long constant);             // NOLINT(google-explicit-constructor)

    // The monomial a * v^k.
    static Coefficient monomial(const Rational& a, long k);
    // v^k.
    static Coefficient v_pow(long k);
    // q^m = v^{2m}.
    static Coefficient q_pow(long m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True iff the value is a single term a * v^k (a != 0), i.e. a unit.
    bool is_monomial() const { return terms_.size() == 1; }
    // True iff the value lies in Q.
    bool is_constant() const;
    // The coefficient of v^k (zero if absent).
    Rational coeff(long k) const;
    long min_exp() const;  // requires nonzero
    long max_exp() const;  // requires nonzero

    const std::vector<Term>& terms() const { return terms_; }

    Coefficient operator-() const;
    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    bool operator==(const Coefficient& o) const { return terms_ == o.terms_; }
    bool operator!=(const Coefficient& o) const { return terms_ != o.terms_; }
    bool operator<(const Coefficient& o) const { return terms_ < o.terms_; }

    // this += a * b, with the single-term fast paths fused in.
    void add_mul(const Coefficient& a, const Coefficient& b);

    // Exact division: returns this / d if the quotient lies in the ring.
    std::optional<Coefficient> div_exact(const Coefficient& d) const;
    // Inverse of a unit (single-term) coefficient; throws otherwise.
    Coefficient unit_inverse() const;
    // Exact square root in the ring, if one exists (the one with positive
    // leading rational is returned).
    std::optional<Coefficient> sqrt() const;

    // Substitutes v <- v0 (exact rational arithmetic); v0 must be > 0 so
    // negative exponents make sense and stay positive.
    Rational eval(const Rational& v0) const;

    // Text form "a_k*v^k + ..." with exponents in decreasing order.
    std::string to_string() const;

private:
    void merge_add(const std::vector<Term>& other, bool negate);
    void merge_add_scaled(const std::vector<Term>& other, long shift, const Rational& scale);
    void add_term(long exp, const Rational& a);
    std::vector<Term> terms_;
};

// The named constants attached to a parameter triple (t, r, s):
//   qt = q^t, qr = q^r, qs = q^s,
//   b  = q^r - 1,
//   c  = sqrt(q)^{r+s} - sqrt(q)^{r-s},
// together with the two half powers v^{r+s}, v^{r-s}.
// Requires r >= s >= 0 and t >= 1.
struct ParamConstants {
    int t = 1;
    int r = 0;
    int s = 0;
    Coefficient qt, qr, qs;
    Coefficient b, c;
    Coefficient half_rs_plus;   // v^{r+s}
    Coefficient half_rs_minus;  // v^{r-s}
};

ParamConstants param_constants(int t, int r, int s);

}  // namespace hecke
