#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/hecke_algebra.hpp"
#include "hecke/star_solver.hpp"

namespace hecke {

// The three finite subalgebras a rank-one structure can be induced from:
// H_Sn (generated by T_1..T_{n-1}, case A), H_0 (T_1..T_n) and H_n
// (T_0..T_{n-1}), both case C.
enum class Subalgebra { HSn, H0, Hn };

std::string subalgebra_name(Subalgebra s);

// A one-dimensional representation of one of those subalgebras. The braid
// relations force T_1..T_{n-1} onto a common scalar lambda_A in {-1, q^t};
// the end generator (T_n for H_0, T_0 for H_n) takes lambda_end in
// {-1, q^r} resp. {-1, q^s}.
struct OneDimRep {
    Subalgebra sub = Subalgebra::H0;
    Coefficient lambda_A;
    std::optional<Coefficient> lambda_end;  // absent for HSn

    std::string name() const;
    bool operator==(const OneDimRep& o) const {
        return sub == o.sub && lambda_A == o.lambda_A && lambda_end == o.lambda_end;
    }
    bool operator<(const OneDimRep& o) const;
};

// Validates the scalars against the quadratic relations of params.
OneDimRep make_rep(const HeckeParams& params, Subalgebra sub, const Coefficient& lambda_A,
                   const std::optional<Coefficient>& lambda_end);

// An H-module structure on A itself (free of rank one). T_1..T_{n-1} act in
// the Demazure-Lusztig form with the scalar lambda_A, T_n acts through the
// parameter polynomial e:
//     T_n . f = f^vee e + (b + c X_n^-1) divided_diff_C(f),
// and T_0 acts by its defining word sqrt(q)^{s+2t(n-1)+r} X_1 Tw^{-1},
// expanded into the known generator actions. Induced modules arise from
// constant e (H_0 type) or e = b +- sqrt(q)^{r+-s} X_n^{-1} (H_n type); the
// classification engine also runs with a general solution of the functional
// equation in place of e.
class RankOneModule {
public:
    // Case C structure with T_n parameter polynomial e (in the n-variable
    // algebra, supported on X_n alone).
    RankOneModule(const HeckeParams& params, const Coefficient& lambda_A, LaurentPoly tn_param);
    // Case A structure (no T_n).
    RankOneModule(const HeckeParams& params, const Coefficient& lambda_A);

    // The module H (x)_{H'} eps realized on A with generator 1.
    static RankOneModule induced(const HeckeParams& params, const OneDimRep& rep);

    const HeckeParams& params() const { return params_; }
    const Coefficient& lambda_A() const { return lambda_A_; }
    const LaurentPoly& tn_param() const { return tn_param_; }

    // Action of T_i (i = 0 for the expanded T_0 word; 1..n otherwise).
    LaurentPoly act_gen(int i, const LaurentPoly& f) const;
    // Action of T_i^{-1}, i = 1..n.
    LaurentPoly act_gen_inverse(int i, const LaurentPoly& f) const;
    // Action of T_{i_1} ... T_{i_k} (rightmost letter acts first).
    LaurentPoly act_word(const std::vector<int>& word, const LaurentPoly& f) const;
    // Action of a full algebra element, extended A-linearly over its words.
    LaurentPoly act_element(const HeckeElement& h, const LaurentPoly& f) const;

private:
    HeckeParams params_;
    Coefficient lambda_A_;
    LaurentPoly tn_param_;
    bool has_tn_ = false;
};

// If g is a simultaneous eigenvector of the listed generators, returns the
// scalar table, otherwise nothing. g must be nonzero.
std::optional<std::map<int, Coefficient>> eigencheck(const RankOneModule& mod, const LaurentPoly& g,
                                                     const std::vector<int>& gens);

struct ClassifyResult {
    SolutionFamily family;
    OneDimRep rep;
    int shift = 0;     // g_1 = (X_1 ... X_n)^shift
    Coefficient mu;    // the end-generator scalar (same as rep.lambda_end)
};

// Classifies a solution f of the functional equation: which subalgebra the
// structure T_n g_0 = f g_0 is induced from, the monomial shift that turns
// g_0 = 1 into a simultaneous eigenvector g_1, and the resulting scalars.
ClassifyResult classify(const LaurentPoly& f_one_var, const HeckeParams& params,
                        const Coefficient& lambda_A);

// Runs the eigenvector transfer to T_0: builds the structure with
// T_n g = (b + sqrt(q)^{r+s} X_n^-1) g  (sign = +1), or
// T_n g = (b - sqrt(q)^{r-s} X_n^-1) g  (sign = -1),
// T_i g = lambda_A g, evaluates the T_0 word on g = 1 and returns the
// resulting scalar, which lands in {q^s, -1}.
Coefficient verify_T0_lemma(const HeckeParams& params, const Coefficient& lambda_A, int sign);

// True iff multiplication by f commutes with every generator action on the
// monomial panel with exponents bounded by `degree`. For the structure with
// lambda_A = q^t, lambda_end = q^r this detects exactly the W-invariants.
bool center_check(const RankOneModule& mod, const LaurentPoly& f, int degree);

// Embeds a one-variable polynomial into n variables, supported on X_n.
LaurentPoly embed_last(const LaurentPoly& f_one_var, int n);

}  // namespace hecke
