#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/modules.hpp"

namespace hecke {

// The three shapes of the component's Hecke algebra: I (type A~_{n-1},
// nothing self-dual in the inducing line), II (type C~_n with alpha =
// beta = 0) and III (type C~_n with alpha > 0).
enum class GGCase { I, II, III };

std::string gg_case_name(GGCase c);

// Inputs are the reducibility points (alpha, beta) rather than (r, s), so
// the derived-parameter arithmetic r = t(alpha+beta), s = t(alpha-beta) is
// checked here. Both 2t*alpha and 2t*beta, as well as r and s, must be
// integers.
struct GGInput {
    GGCase gg_case = GGCase::I;
    int n = 1;
    int t = 1;
    Rational alpha{0};
    Rational beta{0};
    int r = 0;  // derived
    int s = 0;  // derived
};

GGInput make_gg_input(GGCase c, int n, int t, const Rational& alpha, const Rational& beta);

// The characters of A carried by the distinguished generic representations
// pi and (cases II, III) pi^-: in case III X_i maps to q^{t(alpha+n-i)} on
// pi and to -q^{t(beta+n-i)} on pi^-; case II is the alpha = beta = 0
// specialization. In case I only the ratios X_i/X_{i+1} = q^t are pinned by
// the construction; the absolute exponents stored here follow the induction
// data and are flagged as presentation-dependent in the report notes.
struct GenericCharacters {
    CharacterSpec chi_pi;
    std::optional<CharacterSpec> chi_pi_minus;
};

GenericCharacters generic_characters(const GGInput& input);

// The scalars by which the generators act on the one-dimensional module
// attached to chi: T_i through (q^t - 1) x / (x - 1) with x = chi(X_i/X_i+1)
// (the intertwining operator R_i vanishes there), T_n through the analogous
// degree-two expression in y = chi(X_n) in case III and through the fixed
// Whittaker normalization T_n -> 1 in case II, and T_0 by evaluating its
// defining word. Keys are generator indices, with 0 for T_0. Throws
// std::invalid_argument when chi sits on a pole (x = 1 or y^2 = 1).
std::map<int, Coefficient> scalar_table(const GGInput& input, const CharacterSpec& chi);

struct GGReport {
    GGInput input;
    HeckeParams params;  // case A (I) or case C (II, III)
    std::map<int, Coefficient> table_pi;
    std::optional<std::map<int, Coefficient>> table_pi_minus;
    OneDimRep decision;
    std::vector<std::string> notes;
};

// Determines the Gelfand-Graev module: case I forces eps_{q^t} on H_Sn; in
// cases II and III the T_0 scalars on pi and pi^- differ, so the module is
// induced from H_0 with eps read off the common part of the tables.
GGReport determine(const GGInput& input);

}  // namespace hecke
