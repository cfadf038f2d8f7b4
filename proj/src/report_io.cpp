#include "hecke/report_io.hpp"

#include <sstream>

namespace hecke {

using nlohmann::json;

namespace {

std::string gen_name(int i) { return "T" + std::to_string(i); }

json table_json(const std::map<int, Coefficient>& table) {
    json j = json::object();
    for (const auto& [i, c] : table) j[gen_name(i)] = c.to_string();
    return j;
}

std::string table_text(const std::map<int, Coefficient>& table) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : table) {
        if (!first) out << ", ";
        out << gen_name(i) << " -> " << c.to_string();
        first = false;
    }
    return out.str();
}

json rep_json(const OneDimRep& rep) {
    json j;
    j["subalgebra"] = subalgebra_name(rep.sub);
    j["lambda_A"] = rep.lambda_A.to_string();
    if (rep.lambda_end) {
        j["end_generator"] = rep.sub == Subalgebra::Hn ? "T0" : "Tn";
        j["end_scalar"] = rep.lambda_end->to_string();
    }
    j["name"] = rep.name();
    return j;
}

}  // namespace

json params_json(const HeckeParams& params) {
    json j;
    j["case"] = params.case_tag == CaseTag::A ? "A" : "C";
    j["n"] = params.n;
    j["t"] = params.t;
    if (params.case_tag == CaseTag::C) {
        j["r"] = params.r;
        j["s"] = params.s;
    }
    return j;
}

json relation_report_json(const RelationReport& report) {
    json j;
    j["command"] = "verify-relations";
    j["params"] = params_json(report.params);
    j["t0_exponent"] = t0_exponent_name(report.t0_exponent);
    json rels = json::array();
    for (const RelationCheck& c : report.checks) {
        json r;
        r["name"] = c.name;
        r["status"] = c.pass ? "pass" : "fail";
        if (!c.pass) r["difference"] = c.difference;
        rels.push_back(std::move(r));
    }
    j["relations"] = std::move(rels);
    j["all_pass"] = report.all_pass();
    j["notes"] = report.notes;
    return j;
}

std::string relation_report_text(const RelationReport& report) {
    std::ostringstream out;
    const HeckeParams& p = report.params;
    out << "relation suite: case " << (p.case_tag == CaseTag::A ? "A" : "C") << ", n=" << p.n
        << ", t=" << p.t;
    if (p.case_tag == CaseTag::C) out << ", r=" << p.r << ", s=" << p.s;
    out << "\n";
    for (const std::string& n : report.notes) out << "note: " << n << "\n";
    int failed = 0;
    for (const RelationCheck& c : report.checks) {
        out << (c.pass ? "  pass " : "  FAIL ") << c.name << "\n";
        if (!c.pass) {
            out << "       difference: " << c.difference << "\n";
            ++failed;
        }
    }
    if (failed == 0)
        out << "result: all " << report.checks.size() << " relations hold\n";
    else
        out << "result: " << failed << " of " << report.checks.size() << " relations fail\n";
    return out.str();
}

json star_report_json(const StarReport& report) {
    json j;
    j["command"] = "solve-star";
    j["params"] = {{"t", report.t}, {"r", report.r}, {"s", report.s}};
    j["window"] = {report.lo, report.hi};
    json sols = json::array();
    for (const StarReport::Entry& e : report.solutions) {
        json s;
        s["poly"] = e.poly.to_string();
        s["family"] = e.family ? json(e.family->name()) : json(nullptr);
        sols.push_back(std::move(s));
    }
    j["solutions"] = std::move(sols);
    j["count"] = report.solutions.size();
    j["notes"] = report.notes;
    return j;
}

std::string star_report_text(const StarReport& report) {
    std::ostringstream out;
    out << "functional equation solver: t=" << report.t << ", r=" << report.r
        << ", s=" << report.s << ", window [" << report.lo << ", " << report.hi << "]\n";
    out << "solutions (" << report.solutions.size() << "):\n";
    for (const StarReport::Entry& e : report.solutions) {
        out << "  " << (e.family ? e.family->name() : std::string("unidentified")) << " : "
            << e.poly.to_string() << "\n";
    }
    for (const std::string& n : report.notes) out << "note: " << n << "\n";
    return out.str();
}

namespace {

// The predicted simultaneous-eigenvalue table of g_1 = (X_1...X_n)^shift.
std::map<int, Coefficient> classify_table(const HeckeParams& params, const ClassifyResult& result) {
    std::map<int, Coefficient> table;
    for (int i = 1; i <= params.n - 1; ++i) table.emplace(i, result.rep.lambda_A);
    table.emplace(result.rep.sub == Subalgebra::Hn ? 0 : params.n, *result.rep.lambda_end);
    return table;
}

}  // namespace

json classify_report_json(const HeckeParams& params, const LaurentPoly& input,
                          const ClassifyResult& result) {
    json j;
    j["command"] = "classify";
    j["params"] = params_json(params);
    j["input"] = input.to_string();
    j["family"] = result.family.name();
    j["shift"] = result.shift;
    j["rep"] = rep_json(result.rep);
    j["eigenvalues"] = table_json(classify_table(params, result));
    return j;
}

std::string classify_report_text(const HeckeParams& params, const LaurentPoly& input,
                                 const ClassifyResult& result) {
    std::ostringstream out;
    out << "classify: case C, n=" << params.n << ", t=" << params.t << ", r=" << params.r
        << ", s=" << params.s << "\n";
    out << "input: " << input.to_string() << "\n";
    out << "family: " << result.family.name() << "\n";
    out << "structure: induced from " << subalgebra_name(result.rep.sub) << ", shift "
        << result.shift << " (g1 = (X1...Xn)^" << result.shift << ")\n";
    out << "eps: " << result.rep.name() << "\n";
    out << "eigenvalues of g1: " << table_text(classify_table(params, result)) << "\n";
    return out.str();
}

json gg_report_json(const GGReport& report) {
    json j;
    j["command"] = "gg";
    json in;
    in["case"] = gg_case_name(report.input.gg_case);
    in["n"] = report.input.n;
    in["t"] = report.input.t;
    if (report.input.gg_case != GGCase::I) {
        in["alpha"] = report.input.alpha.get_str();
        in["beta"] = report.input.beta.get_str();
        in["r"] = report.input.r;
        in["s"] = report.input.s;
    }
    j["input"] = std::move(in);
    j["table_pi"] = table_json(report.table_pi);
    j["table_pi_minus"] = report.table_pi_minus ? table_json(*report.table_pi_minus) : json(nullptr);
    j["decision"] = rep_json(report.decision);
    j["notes"] = report.notes;
    return j;
}

std::string gg_report_text(const GGReport& report) {
    std::ostringstream out;
    out << "Gelfand-Graev determination: case " << gg_case_name(report.input.gg_case)
        << ", n=" << report.input.n << ", t=" << report.input.t;
    if (report.input.gg_case != GGCase::I)
        out << ", alpha=" << report.input.alpha.get_str() << ", beta=" << report.input.beta.get_str()
            << " (r=" << report.input.r << ", s=" << report.input.s << ")";
    out << "\n";
    out << "pi:  " << table_text(report.table_pi) << "\n";
    if (report.table_pi_minus) out << "pi-: " << table_text(*report.table_pi_minus) << "\n";
    out << "decision: H (x)_{" << subalgebra_name(report.decision.sub) << "} eps with "
        << report.decision.name() << "\n";
    for (const std::string& n : report.notes) out << "note: " << n << "\n";
    return out.str();
}

}  // namespace hecke
