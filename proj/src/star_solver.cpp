#include "hecke/star_solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

LaurentPoly one_var(const Coefficient& c) { return LaurentPoly(1, c); }

LaurentPoly x_pow1(int k) { return LaurentPoly::x_pow(1, 1, k); }

}  // namespace

std::string SolutionFamily::name() const {
    std::ostringstream out;
    switch (kind) {
        case FamilyKind::ConstMinusOne:
            return "const(-1)";
        case FamilyKind::ConstQr:
            return "const(q^r)";
        case FamilyKind::TypeI:
            out << "I(d=" << d << ")";
            break;
        case FamilyKind::TypeII:
            out << "II(d=" << d << ")";
            break;
        case FamilyKind::TypeIII:
            out << "III(d=" << d << "," << (sign > 0 ? "+" : "-") << ")";
            break;
        case FamilyKind::TypeIV:
            out << "IV(d=" << d << "," << (sign > 0 ? "+" : "-") << ")";
            break;
        case FamilyKind::TypeV:
            out << "V(d=" << d << ")";
            break;
        case FamilyKind::TypeVI:
            out << "VI(d=" << d << ")";
            break;
    }
    return out.str();
}

LaurentPoly family_poly(const SolutionFamily& fam, const ParamConstants& pc) {
    LaurentPoly f(1);
    switch (fam.kind) {
        case FamilyKind::ConstMinusOne:
            return one_var(Coefficient(-1));
        case FamilyKind::ConstQr:
            return one_var(pc.qr);
        case FamilyKind::TypeI:
        case FamilyKind::TypeII: {
            if (fam.d < 1) throw std::invalid_argument("family_poly: d must be >= 1");
            for (int j = 0; j < fam.d; ++j) {
                f.add_term({-2 * j}, pc.b);
                f.add_term({-2 * j - 1}, pc.c);
            }
            f.add_term({-2 * fam.d},
                       fam.kind == FamilyKind::TypeI ? pc.qr : Coefficient(-1));
            return f;
        }
        case FamilyKind::TypeIII: {
            if (fam.d < 0) throw std::invalid_argument("family_poly: d must be >= 0");
            for (int j = 0; j <= fam.d; ++j) f.add_term({-2 * j}, pc.b);
            for (int j = 0; j < fam.d; ++j) f.add_term({-2 * j - 1}, pc.c);
            f.add_term({-2 * fam.d - 1},
                       fam.sign > 0 ? pc.half_rs_plus : -pc.half_rs_minus);
            return f;
        }
        case FamilyKind::TypeIV: {
            if (fam.d < 0) throw std::invalid_argument("family_poly: d must be >= 0");
            f.add_term({2 * fam.d + 1}, fam.sign > 0 ? -pc.half_rs_plus : pc.half_rs_minus);
            for (int j = 1; j <= fam.d; ++j) {
                f.add_term({2 * j}, -pc.b);
                f.add_term({2 * j - 1}, -pc.c);
            }
            return f;
        }
        case FamilyKind::TypeV:
        case FamilyKind::TypeVI: {
            if (fam.d < 1) throw std::invalid_argument("family_poly: d must be >= 1");
            f.add_term({2 * fam.d},
                       fam.kind == FamilyKind::TypeV ? -pc.qr : Coefficient(1));
            for (int j = 1; j < fam.d; ++j) f.add_term({2 * j}, -pc.b);
            for (int j = 1; j <= fam.d; ++j) f.add_term({2 * j - 1}, -pc.c);
            return f;
        }
    }
    throw std::logic_error("family_poly: unreachable");
}

bool check_star(const LaurentPoly& f, const ParamConstants& pc) {
    if (f.nvars() != 1) throw std::invalid_argument("check_star: expected one variable");
    const LaurentPoly fv = poly_invert_last(f);
    const LaurentPoly x2m1 = x_pow1(2) - one_var(Coefficient(1));
    const LaurentPoly lhs = x2m1 * f * fv;
    const LaurentPoly rhs = (fv * x_pow1(2) - f) * pc.b - (f * x_pow1(1) - fv * x_pow1(1)) * pc.c +
                            x2m1 * pc.qr;
    return lhs == rhs;
}

LaurentPoly apply_shift(const LaurentPoly& f, int d, const ParamConstants& pc) {
    if (f.nvars() != 1) throw std::invalid_argument("apply_shift: expected one variable");
    if (d < 0) throw std::invalid_argument("apply_shift: d must be >= 0");
    if (d == 0) return f;
    return f * x_pow1(2 * d) - build_R_d(d, pc.b, pc.c);
}

LaurentPoly unapply_shift(const LaurentPoly& f, int d, const ParamConstants& pc) {
    if (f.nvars() != 1) throw std::invalid_argument("unapply_shift: expected one variable");
    if (d < 0) throw std::invalid_argument("unapply_shift: d must be >= 0");
    if (d == 0) return f;
    return (f + build_R_d(d, pc.b, pc.c)) * x_pow1(-2 * d);
}

std::vector<std::pair<SolutionFamily, LaurentPoly>> family_catalogue(const ParamConstants& pc,
                                                                     int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("family_catalogue: empty window");
    std::vector<std::pair<SolutionFamily, LaurentPoly>> out;
    std::set<LaurentPoly> seen;
    const int dmax = std::max(std::abs(lo), std::abs(hi)) / 2 + 1;
    auto consider = [&](const SolutionFamily& fam) {
        LaurentPoly p = family_poly(fam, pc);
        if (p.min_deg(1) < lo || p.max_deg(1) > hi) return;
        if (seen.insert(p).second) out.emplace_back(fam, std::move(p));
    };
    if (lo <= 0 && hi >= 0) {
        consider({FamilyKind::ConstMinusOne, 0, 1});
        consider({FamilyKind::ConstQr, 0, 1});
    }
    for (int d = 1; d <= dmax; ++d) {
        consider({FamilyKind::TypeI, d, 1});
        consider({FamilyKind::TypeII, d, 1});
        consider({FamilyKind::TypeV, d, 1});
        consider({FamilyKind::TypeVI, d, 1});
    }
    for (int d = 0; d <= dmax; ++d) {
        for (int sign : {1, -1}) {
            consider({FamilyKind::TypeIII, d, sign});
            consider({FamilyKind::TypeIV, d, sign});
        }
    }
    return out;
}

std::optional<SolutionFamily> identify_family(const LaurentPoly& f, const ParamConstants& pc) {
    if (f.is_zero()) return std::nullopt;
    const int lo = f.min_deg(1);
    const int hi = f.max_deg(1);
    for (const auto& [fam, poly] : family_catalogue(pc, lo, hi))
        if (poly == f) return fam;
    return std::nullopt;
}

namespace {

// A polynomial of total degree <= 2 in the unknown coefficients of f,
// with known coefficients in Q[v, v^-1]. Unknowns are indexed by the
// exponent they multiply.
struct Equation {
    Coefficient c0;
    std::map<int, Coefficient> lin;
    std::map<std::pair<int, int>, Coefficient> quad;  // keys (a, b) with a <= b

    void add_const(const Coefficient& x) { c0 += x; }

    void add_lin(int j, const Coefficient& x) {
        auto it = lin.find(j);
        if (it == lin.end()) {
            if (!x.is_zero()) lin.emplace(j, x);
            return;
        }
        it->second += x;
        if (it->second.is_zero()) lin.erase(it);
    }

    void add_quad(int a, int b, const Coefficient& x) {
        const auto key = std::minmax(a, b);
        auto it = quad.find(key);
        if (it == quad.end()) {
            if (!x.is_zero()) quad.emplace(key, x);
            return;
        }
        it->second += x;
        if (it->second.is_zero()) quad.erase(it);
    }

    bool trivially_zero() const { return c0.is_zero() && lin.empty() && quad.empty(); }
    bool contradiction() const { return lin.empty() && quad.empty() && !c0.is_zero(); }

    std::set<int> unknowns() const {
        std::set<int> u;
        for (const auto& [j, x] : lin) u.insert(j);
        for (const auto& [ab, x] : quad) {
            u.insert(ab.first);
            u.insert(ab.second);
        }
        return u;
    }

    void subst(int j, const Coefficient& val) {
        std::map<std::pair<int, int>, Coefficient> old_quad;
        old_quad.swap(quad);
        std::map<int, Coefficient> old_lin;
        old_lin.swap(lin);
        for (const auto& [ab, x] : old_quad) {
            const auto [a, b] = ab;
            if (a == j && b == j) {
                add_const(x * val * val);
            } else if (a == j) {
                add_lin(b, x * val);
            } else if (b == j) {
                add_lin(a, x * val);
            } else {
                add_quad(a, b, x);
            }
        }
        for (const auto& [k, x] : old_lin) {
            if (k == j) {
                add_const(x * val);
            } else {
                add_lin(k, x);
            }
        }
    }

    // True iff u_j divides every monomial of the equation.
    bool has_factor(int j) const {
        if (!c0.is_zero()) return false;
        for (const auto& [k, x] : lin)
            if (k != j) return false;
        for (const auto& [ab, x] : quad)
            if (ab.first != j && ab.second != j) return false;
        return !(lin.empty() && quad.empty());
    }

    // The cofactor after dividing out u_j (valid when has_factor(j)).
    Equation divide_out(int j) const {
        Equation q;
        for (const auto& [k, x] : lin) q.add_const(x);
        for (const auto& [ab, x] : quad) {
            if (ab.first == j && ab.second == j)
                q.add_lin(j, x);
            else
                q.add_lin(ab.first == j ? ab.second : ab.first, x);
        }
        return q;
    }
};

// Roots in Q[v, v^-1] of alpha u^2 + beta u + gamma = 0. A ring root forces
// the discriminant to be a perfect square of the ring, so the exact square
// root test is complete.
std::vector<Coefficient> ring_quadratic_roots(const Coefficient& alpha, const Coefficient& beta,
                                              const Coefficient& gamma) {
    std::vector<Coefficient> roots;
    auto push = [&](const Coefficient& c) {
        if (std::find(roots.begin(), roots.end(), c) == roots.end()) roots.push_back(c);
    };
    if (alpha.is_zero()) {
        if (beta.is_zero()) throw std::logic_error("ring_quadratic_roots: degenerate equation");
        if (auto u = (-gamma).div_exact(beta)) push(*u);
        return roots;
    }
    const Coefficient two_alpha = alpha + alpha;
    const Coefficient disc = beta * beta - Coefficient(4) * alpha * gamma;
    if (disc.is_zero()) {
        if (auto u = (-beta).div_exact(two_alpha)) push(*u);
        return roots;
    }
    auto root = disc.sqrt();
    if (!root) return roots;
    for (int sgn : {1, -1}) {
        const Coefficient num = sgn > 0 ? -beta + *root : -beta - *root;
        if (auto u = num.div_exact(two_alpha)) push(*u);
    }
    return roots;
}

struct PropagationState {
    std::vector<Equation> eqs;
    std::map<int, Coefficient> assigned;
    std::set<int> unassigned;
};

class Propagator {
public:
    Propagator(const ParamConstants& pc, int lo, int hi) : pc_(pc), lo_(lo), hi_(hi) {}

    std::vector<LaurentPoly> run() {
        PropagationState st;
        for (int j = lo_; j <= hi_; ++j) st.unassigned.insert(j);
        st.eqs = build_equations();
        solve(std::move(st));
        return {results_.begin(), results_.end()};
    }

private:
    bool in_window(int j) const { return lo_ <= j && j <= hi_; }

    // Coefficient of X^e on both sides of the equation, written as
    // LHS - RHS = 0 in the unknowns u_lo..u_hi.
    std::vector<Equation> build_equations() const {
        const int emin = std::min({lo_ - hi_, 2 - hi_, 1 - hi_, 0});
        const int emax = std::max({hi_ - lo_ + 2, hi_ + 1, 2});
        std::vector<Equation> eqs;
        for (int e = emin; e <= emax; ++e) {
            Equation eq;
            // (X^2 - 1) f f^vee contributes p_{e-2} - p_e with
            // p_d = sum_j u_j u_{j-d}.
            for (int j = lo_; j <= hi_; ++j) {
                if (in_window(j - (e - 2))) eq.add_quad(j, j - (e - 2), Coefficient(1));
                if (in_window(j - e)) eq.add_quad(j, j - e, Coefficient(-1));
            }
            // b (X^2 f^vee - f): b u_{2-e} - b u_e.
            if (in_window(2 - e)) eq.add_lin(2 - e, -pc_.b);
            if (in_window(e)) eq.add_lin(e, pc_.b);
            // -c (X f - X f^vee): -c u_{e-1} + c u_{1-e}.
            if (in_window(e - 1)) eq.add_lin(e - 1, pc_.c);
            if (in_window(1 - e)) eq.add_lin(1 - e, -pc_.c);
            // q^r (X^2 - 1).
            if (e == 2) eq.add_const(-pc_.qr);
            if (e == 0) eq.add_const(pc_.qr);
            if (!eq.trivially_zero()) eqs.push_back(std::move(eq));
        }
        return eqs;
    }

    void record(const PropagationState& st) {
        LaurentPoly f(1);
        for (const auto& [j, val] : st.assigned) f.add_term({j}, val);
        if (!check_star(f, pc_))
            throw std::logic_error("propagation produced a non-solution: " + f.to_string());
        results_.insert(std::move(f));
    }

    void assign_and_recurse(PropagationState st, int j, const Coefficient& val) {
        for (Equation& eq : st.eqs) eq.subst(j, val);
        st.assigned.emplace(j, val);
        st.unassigned.erase(j);
        solve(std::move(st));
    }

    void solve(PropagationState st) {
        // Normalize: drop satisfied equations, stop on contradictions.
        std::vector<Equation> live;
        for (Equation& eq : st.eqs) {
            if (eq.trivially_zero()) continue;
            if (eq.contradiction()) return;
            live.push_back(std::move(eq));
        }
        st.eqs = std::move(live);

        if (st.eqs.empty()) {
            if (!st.unassigned.empty())
                throw std::logic_error("propagation left free coefficients; window underdetermined");
            record(st);
            return;
        }

        // Prefer the most constrained equation.
        std::sort(st.eqs.begin(), st.eqs.end(), [](const Equation& a, const Equation& b) {
            return a.unknowns().size() < b.unknowns().size();
        });

        for (size_t idx = 0; idx < st.eqs.size(); ++idx) {
            const std::set<int> unk = st.eqs[idx].unknowns();
            if (unk.size() != 1) continue;
            const int j = *unk.begin();
            const Equation& eq = st.eqs[idx];
            Coefficient alpha;
            if (auto it = eq.quad.find({j, j}); it != eq.quad.end()) alpha = it->second;
            Coefficient beta;
            if (auto it = eq.lin.find(j); it != eq.lin.end()) beta = it->second;
            for (const Coefficient& root : ring_quadratic_roots(alpha, beta, eq.c0)) {
                PropagationState branch = st;
                branch.eqs.erase(branch.eqs.begin() + static_cast<std::ptrdiff_t>(idx));
                assign_and_recurse(std::move(branch), j, root);
            }
            return;
        }

        for (size_t idx = 0; idx < st.eqs.size(); ++idx) {
            for (int j : st.eqs[idx].unknowns()) {
                if (!st.eqs[idx].has_factor(j)) continue;
                // Branch u_j = 0.
                assign_and_recurse(st, j, Coefficient());
                // Branch cofactor = 0 (u_j stays unknown).
                PropagationState branch = st;
                branch.eqs[idx] = branch.eqs[idx].divide_out(j);
                solve(std::move(branch));
                return;
            }
        }

        throw std::logic_error("propagation stuck: no resolvable equation");
    }

    ParamConstants pc_;
    int lo_, hi_;
    std::set<LaurentPoly> results_;
};

}  // namespace

std::vector<LaurentPoly> enumerate_solutions(const ParamConstants& pc, int lo, int hi,
                                             int window_limit) {
    if (lo > hi) throw std::invalid_argument("enumerate_solutions: empty window");
    if (std::abs(lo) > window_limit || std::abs(hi) > window_limit)
        throw std::invalid_argument("enumerate_solutions: window exceeds the configured limit");
    return Propagator(pc, lo, hi).run();
}

StarReport solve_star_report(int t, int r, int s, int lo, int hi, int window_limit) {
    const ParamConstants pc = param_constants(t, r, s);
    StarReport report;
    report.t = t;
    report.r = r;
    report.s = s;
    report.lo = lo;
    report.hi = hi;
    for (LaurentPoly& f : enumerate_solutions(pc, lo, hi, window_limit)) {
        StarReport::Entry entry;
        entry.family = identify_family(f, pc);
        entry.poly = std::move(f);
        report.solutions.push_back(std::move(entry));
    }
    report.notes.push_back("extreme constants are -1 and q^r, the roots of x^2 = (q^r - 1) x + q^r");
    if (r != t) {
        const bool qt_works = check_star(LaurentPoly(1, pc.qt), pc);
        report.notes.push_back(std::string("the constant q^t ") +
                               (qt_works ? "also satisfies" : "fails") +
                               " the equation at these parameters");
    }
    return report;
}

}  // namespace hecke
