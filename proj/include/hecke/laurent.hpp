#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/coeff.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Graded-lexicographic order on exponent vectors, descending: the canonical
// term order used for all rendered output.
struct GrlexDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// A sparse Laurent polynomial in X_1..X_n over the coefficient ring
// Q[v, v^-1]. This is the commutative algebra the Hecke algebra acts
// through; all module vectors live here. Exponent vectors are dense
// (length n), term maps are sparse, and no zero coefficient is stored.
// Internal storage uses the cheap lexicographic key order; rendering sorts
// into the canonical graded order.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int n) : n_(n) {}
    LaurentPoly(int n, const Coefficient& constant);

    static LaurentPoly monomial(int n, const std::vector<int>& exps, const Coefficient& c);
    // X_i^k (1-based i).
    static LaurentPoly x_pow(int n, int i, int k);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The coefficient of the given monomial (zero if absent).
    Coefficient coeff(const std::vector<int>& exps) const;
    Coefficient constant_term() const;
    const std::map<std::vector<int>, Coefficient>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Coefficient& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;

    // Degree range in variable i (1-based); requires a nonzero polynomial.
    int min_deg(int i) const;
    int max_deg(int i) const;

    void add_term(const std::vector<int>& exps, const Coefficient& c);
    // this += src * c, fused.
    void add_scaled(const LaurentPoly& src, const Coefficient& c);

    std::string to_string() const;

private:
    int n_ = 0;
    std::map<std::vector<int>, Coefficient> terms_;
};

// f^{s_i}: swap X_i and X_{i+1} (1 <= i <= n-1). Involutive.
LaurentPoly poly_swap(const LaurentPoly& f, int i);

// f^vee: invert the last variable, X_n -> 1/X_n. Involutive.
LaurentPoly poly_invert_last(const LaurentPoly& f);

// The substitution action of a signed permutation; s_i acts as poly_swap
// and s_n as poly_invert_last.
LaurentPoly weyl_act(const SignedPermutation& w, const LaurentPoly& f);

// The exact quotient (f - f^{s_i}) / (1 - X_{i+1}/X_i). The numerator is
// divisible because it is antisymmetric in X_i, X_{i+1}; inexact division
// signals a bug.
LaurentPoly divided_diff_A(const LaurentPoly& f, int i);

// The exact quotient (f - f^vee) / (1 - 1/X_n^2).
LaurentPoly divided_diff_C(const LaurentPoly& f);

// R_d = b X^{2d} + c X^{2d-1} + ... + b X^2 + c X, a one-variable polynomial.
LaurentPoly build_R_d(int d, const Coefficient& b, const Coefficient& c);

// True iff f is fixed by every simple reflection of W(C_n).
bool is_W_invariant(const LaurentPoly& f);

// A character of the torus: X_i -> zeta_i * v^{m_i} with zeta_i = +-1.
struct CharacterSpec {
    struct Value {
        int sign = 1;  // +1 or -1
        long vexp = 0;
    };
    std::vector<Value> values;

    int nvars() const { return static_cast<int>(values.size()); }
    Coefficient value(int i) const;  // 1-based
};

// Ring homomorphism A -> Q[v, v^-1] determined by chi.
Coefficient eval_character(const LaurentPoly& f, const CharacterSpec& chi);

// Exact division of f by a divisor whose leading term in the distinguished
// variable (1-based) is the monomial X_var^J with coefficient 1. Throws
// std::logic_error if the division is not exact.
LaurentPoly divide_exact_in_var(const LaurentPoly& f, const LaurentPoly& divisor, int var);

}  // namespace hecke
