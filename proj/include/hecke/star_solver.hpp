#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

// The catalogue of solutions of the quadratic functional equation
//   (X^2 - 1) f f^vee = b (X^2 f^vee - f) - c (X f - X f^vee) + q^r (X^2 - 1)
// in one Laurent variable. Families I/II run over negative even support,
// III/IV end at an odd extreme degree, V/VI over positive even support, and
// the two constants round out the list. The extreme coefficient of family I
// (and the constant) is q^r, a root of x^2 = bx + q^r; see the solver
// report for the live evidence that q^t in its place fails when r != t.
enum class FamilyKind { ConstMinusOne, ConstQr, TypeI, TypeII, TypeIII, TypeIV, TypeV, TypeVI };

struct SolutionFamily {
    FamilyKind kind = FamilyKind::ConstMinusOne;
    int d = 0;     // TypeI/II/V/VI: d >= 1; TypeIII/IV: d >= 0
    int sign = 1;  // +1 or -1, TypeIII/IV only

    std::string name() const;
    bool operator==(const SolutionFamily& o) const {
        return kind == o.kind && d == o.d && sign == o.sign;
    }
};

// The closed-form polynomial of a family member (one variable).
LaurentPoly family_poly(const SolutionFamily& fam, const ParamConstants& pc);

// True iff the one-variable polynomial f satisfies the equation identically.
bool check_star(const LaurentPoly& f, const ParamConstants& pc);

// X^{2d} f - R_d. Maps solutions to solutions; d >= 0.
LaurentPoly apply_shift(const LaurentPoly& f, int d, const ParamConstants& pc);

// The inverse shift X^{-2d} (f + R_d).
LaurentPoly unapply_shift(const LaurentPoly& f, int d, const ParamConstants& pc);

// Every family member whose support lies within [lo, hi], deduplicated.
std::vector<std::pair<SolutionFamily, LaurentPoly>> family_catalogue(const ParamConstants& pc,
                                                                     int lo, int hi);

// Identifies a polynomial as a family member, if it is one.
std::optional<SolutionFamily> identify_family(const LaurentPoly& f, const ParamConstants& pc);

// The independent solver: treats the coefficients of f (supported in
// [lo, hi]) as unknowns over Q[v, v^-1], compares coefficients of the
// equation, and propagates from the extreme degrees inward. Steps are
// linear in one unknown, quadratic in one unknown (branching on the ring
// roots found through an exact discriminant square root), or a common-
// factor split u = 0 / cofactor = 0. Every completed assignment is
// confirmed with check_star before being reported.
std::vector<LaurentPoly> enumerate_solutions(const ParamConstants& pc, int lo, int hi,
                                             int window_limit = 12);

struct StarReport {
    int t = 1, r = 0, s = 0;
    int lo = 0, hi = 0;
    struct Entry {
        LaurentPoly poly;
        std::optional<SolutionFamily> family;
    };
    std::vector<Entry> solutions;
    std::vector<std::string> notes;
};

StarReport solve_star_report(int t, int r, int s, int lo, int hi, int window_limit = 12);

}  // namespace hecke
