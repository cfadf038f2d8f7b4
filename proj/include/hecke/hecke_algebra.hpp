#pragma once

#include <map>
#include <string>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

// Which affine Hecke algebra:
//   A: type A~_{n-1}, generators T_1..T_{n-1}, equal parameter q^t.
//   C: type C~_n, generators T_1..T_n (plus the derived T_0), parameters
//      q^t inside and q^r at the n-th node, q^s at the 0 node. The equal-
//      parameter degeneration r = s = 0 gives T_n^2 = T_0^2 = 1.
enum class CaseTag { A, C };

struct HeckeParams {
    CaseTag case_tag = CaseTag::A;
    int n = 1;
    int t = 1;
    int r = 0;
    int s = 0;
    ParamConstants consts;

    static HeckeParams make_A(int n, int t);
    static HeckeParams make_C(int n, int t, int r, int s);

    WeylType weyl_type() const { return case_tag == CaseTag::A ? WeylType::A : WeylType::C; }
    // Largest valid generator index (n-1 in case A, n in case C).
    int gen_max() const { return case_tag == CaseTag::A ? n - 1 : n; }
    // The quadratic parameter of T_i: q^t for i < n, q^r for i = n.
    const Coefficient& q_param(int i) const;

    bool operator==(const HeckeParams& o) const {
        return case_tag == o.case_tag && n == o.n && t == o.t && r == o.r && s == o.s;
    }
};

// The element T_0 is defined as sqrt(q)^E X_1 T_w^{-1} with
// T_w = T_1..T_{n-1} T_n T_{n-1}..T_1. Two spellings of E are in
// circulation; only the first makes the T_0 quadratic hold for n >= 2.
enum class T0Exponent {
    TwoT,  // E = s + 2t(n-1) + r
    OneT,  // E = s + t(n-1) + r
};

std::string t0_exponent_name(T0Exponent e);

// An element of H = A (x) H_0 in the Bernstein presentation: a finite sum
// sum_w f_w T_w over the finite Weyl group, with f_w in A written on the
// left. Multiplication normalizes products by peeling generators off the
// left factor's reduced words and pushing them through A with the
// commutation rules
//   T_i f = f^{s_i} T_i + (q^t - 1) * divided_diff_A(f, i),
//   T_n f = f^vee T_n + (b + c X_n^-1) * divided_diff_C(f).
class HeckeElement {
public:
    explicit HeckeElement(const HeckeParams& params) : params_(params) {}

    static HeckeElement zero(const HeckeParams& params) { return HeckeElement(params); }
    static HeckeElement identity(const HeckeParams& params);
    // An element of A embedded as f * T_e.
    static HeckeElement from_poly(const HeckeParams& params, const LaurentPoly& f);
    static HeckeElement from_coeff(const HeckeParams& params, const Coefficient& c);
    // T_{s_i} for 1 <= i <= gen_max; gen(params, 0) is the expanded T_0.
    static HeckeElement gen(const HeckeParams& params, int i);
    // T_i^{-1} = q_i^{-1} (T_i - (q_i - 1)).
    static HeckeElement gen_inverse(const HeckeParams& params, int i);
    // The expanded basis form of sqrt(q)^E X_1 T_w^{-1}; case C only.
    static HeckeElement t0_element(const HeckeParams& params, T0Exponent variant = T0Exponent::TwoT);

    const HeckeParams& params() const { return params_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<SignedPermutation, LaurentPoly>& terms() const { return terms_; }

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator-() const;
    HeckeElement operator*(const HeckeElement& o) const;  // full product
    bool operator==(const HeckeElement& o) const;
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    // Left multiplication by an element of A (coefficient-wise).
    HeckeElement scaled(const LaurentPoly& f) const;
    HeckeElement scaled(const Coefficient& c) const;

    void add_term(const SignedPermutation& w, const LaurentPoly& f);

    // Terms ordered by (length, reduced word), each as "(f) T[s1.s2]".
    std::string to_string() const;

private:
    HeckeParams params_;
    std::map<SignedPermutation, LaurentPoly> terms_;
};

// Left multiplication by the generator T_i (the one-step rewrite).
HeckeElement mul_gen_left(int i, const HeckeElement& b);

struct RelationCheck {
    std::string name;
    bool pass = false;
    std::string difference;  // canonical text of the nonzero defect, if any
};

struct RelationReport {
    HeckeParams params;
    T0Exponent t0_exponent = T0Exponent::TwoT;
    std::vector<RelationCheck> checks;
    std::vector<std::string> notes;

    bool all_pass() const;
};

// Checks every quadratic, braid and non-adjacency commutation relation of
// the presentation as an exact element identity.
RelationReport verify_relations(const HeckeParams& params, T0Exponent variant = T0Exponent::TwoT);

}  // namespace hecke
