// Command-line front end: relation verification, the functional-equation
// solver, rank-one classification and Gelfand-Graev determination, with
// deterministic text or JSON reports.
//
// Exit codes: 0 success / all relations pass, 1 verification failure,
// 2 usage or input error.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hecke/parse.hpp"
#include "hecke/report_io.hpp"

namespace {

using namespace hecke;

struct CommonOpts {
    std::string format = "text";
    unsigned long seed = 0;  // recorded for reproducibility of report bytes
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Seed recorded in JSON reports")->capture_default_str();
}

void emit(const CommonOpts& opts, const std::string& text, nlohmann::json j) {
    if (opts.format == "json") {
        j["seed"] = opts.seed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

Rational parse_rational_arg(const std::string& text) {
    try {
        return rational_from_string(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a rational like 3/2, got '" + text + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact affine Hecke algebras with unequal parameters and the "
                 "Gelfand-Graev module on the Laurent polynomial algebra"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // verify-relations
    std::string case_tag = "C";
    int n = 1, t = 1, r = 0, s = 0;
    std::string t0_exp = "2t";
    CommonOpts vr_opts;
    CLI::App* vr = app.add_subcommand("verify-relations",
                                      "Check the quadratic, braid and commutation relations");
    vr->add_option("--case", case_tag, "Algebra type")->check(CLI::IsMember({"A", "C"}))->capture_default_str();
    vr->add_option("--n", n, "Rank")->required();
    vr->add_option("--t", t, "Interior parameter exponent")->required();
    vr->add_option("--r", r, "End node parameter exponent (case C)")->capture_default_str();
    vr->add_option("--s", s, "Affine node parameter exponent (case C)")->capture_default_str();
    vr->add_option("--t0-exponent", t0_exp,
                   "Coefficient of (n-1) in the T0 exponent: s + 2t(n-1) + r or s + t(n-1) + r")
        ->check(CLI::IsMember({"2t", "t"}))
        ->capture_default_str();
    add_common(vr, vr_opts);

    // solve-star
    int st_t = 1, st_r = 0, st_s = 0, lo = 0, hi = 0, limit = 12;
    CommonOpts st_opts;
    CLI::App* st = app.add_subcommand("solve-star", "Enumerate solutions of the T_n eigen equation");
    st->add_option("--t", st_t, "t")->required();
    st->add_option("--r", st_r, "r")->required();
    st->add_option("--s", st_s, "s")->required();
    st->add_option("--min", lo, "Lowest allowed degree")->required();
    st->add_option("--max", hi, "Highest allowed degree")->required();
    st->add_option("--limit", limit, "Window bound")->capture_default_str();
    add_common(st, st_opts);

    // classify
    int cl_n = 1, cl_t = 1, cl_r = 0, cl_s = 0;
    std::string cl_f, cl_lambda = "qt";
    CommonOpts cl_opts;
    CLI::App* cl = app.add_subcommand("classify", "Classify a solution as an induced structure");
    cl->add_option("--n", cl_n, "Rank")->required();
    cl->add_option("--t", cl_t, "t")->required();
    cl->add_option("--r", cl_r, "r")->required();
    cl->add_option("--s", cl_s, "s")->required();
    cl->add_option("--f", cl_f, "Solution polynomial in X (coefficients in v)")->required();
    cl->add_option("--lambda", cl_lambda, "Common T_i scalar of the generator")
        ->check(CLI::IsMember({"qt", "-1"}))
        ->capture_default_str();
    add_common(cl, cl_opts);

    // gg
    std::string gg_case = "III";
    int gg_n = 1, gg_t = 1;
    std::string alpha = "0", beta = "0";
    CommonOpts gg_opts;
    CLI::App* gg = app.add_subcommand("gg", "Determine the Gelfand-Graev module");
    gg->add_option("--gg-case", gg_case, "Case")->check(CLI::IsMember({"I", "II", "III"}))->capture_default_str();
    gg->add_option("--n", gg_n, "Rank")->required();
    gg->add_option("--t", gg_t, "t")->required();
    gg->add_option("--alpha", alpha, "Reducibility point of rho (rational)")->capture_default_str();
    gg->add_option("--beta", beta, "Reducibility point of rho^- (rational)")->capture_default_str();
    add_common(gg, gg_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (vr->parsed()) {
            const HeckeParams params = case_tag == "A" ? HeckeParams::make_A(n, t)
                                                       : HeckeParams::make_C(n, t, r, s);
            const T0Exponent variant = t0_exp == "2t" ? T0Exponent::TwoT : T0Exponent::OneT;
            const RelationReport report = verify_relations(params, variant);
            emit(vr_opts, relation_report_text(report), relation_report_json(report));
            return report.all_pass() ? 0 : 1;
        }
        if (st->parsed()) {
            const StarReport report = solve_star_report(st_t, st_r, st_s, lo, hi, limit);
            emit(st_opts, star_report_text(report), star_report_json(report));
            return 0;
        }
        if (cl->parsed()) {
            const HeckeParams params = HeckeParams::make_C(cl_n, cl_t, cl_r, cl_s);
            const LaurentPoly f = parse_poly(cl_f, 1);
            const Coefficient lambda = cl_lambda == "qt" ? params.consts.qt : Coefficient(-1);
            const ClassifyResult result = classify(f, params, lambda);
            emit(cl_opts, classify_report_text(params, f, result),
                 classify_report_json(params, f, result));
            return 0;
        }
        if (gg->parsed()) {
            const GGCase c = gg_case == "I" ? GGCase::I : gg_case == "II" ? GGCase::II : GGCase::III;
            const GGInput input =
                make_gg_input(c, gg_n, gg_t, parse_rational_arg(alpha), parse_rational_arg(beta));
            const GGReport report = determine(input);
            emit(gg_opts, gg_report_text(report), gg_report_json(report));
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
