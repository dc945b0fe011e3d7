#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mont/colored_jones.hpp"
#include "mont/verifier.hpp"

namespace {

using namespace mont;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

MontesinosKnot knot_from(const std::string& r, const std::string& s, const std::string& t) {
    return validate_family(parse_tail(r), parse_tail(s), parse_tail(t));
}

EmitFormat parse_format(const std::string& f) {
    if (f == "json") return EmitFormat::Json;
    if (f == "csv") return EmitFormat::Csv;
    if (f == "text") return EmitFormat::Text;
    throw CLI::ValidationError("--format", "expected json, csv or text");
}

std::string sign_word(int sign) {
    return sign > 0 ? "increasing" : (sign < 0 ? "decreasing" : "flat");
}

void print_paths(const EdgepathSystem& sys, std::ostream& out) {
    const char* names[3] = {"path 1", "path 2", "path 3"};
    for (int i = 0; i < 3; ++i) {
        const Edgepath& p = sys.paths[i];
        out << "  " << names[i] << ": <" << rat_str(p.start.slope) << ">";
        for (const Edge& e : p.edges) {
            out << " -> ";
            if (e.fraction != 1) out << rat_str(e.fraction) << " of the way to ";
            out << "<" << rat_str(e.far.slope) << ">";
            out << " (" << sign_word(e.sign) << ")";
        }
        out << "\n";
    }
}

int cmd_verify(const std::string& r, const std::string& s, const std::string& t,
               const Budgets& budgets, EmitFormat format) {
    const MontesinosKnot k = knot_from(r, s, t);
    const VerificationReport rep = verify_instance(k, budgets);
    emit_report(rep, format, std::cout);
    if (rep.budget_exceeded) return kExitBudget;
    return rep.passed() ? kExitPass : kExitCheckFailed;
}

int cmd_degree(const std::string& r, const std::string& s, const std::string& t, long long N) {
    const MontesinosKnot k = knot_from(r, s, t);
    const QuasiQuadratic qq = closed_form_degree(k);
    ordered_json j;
    j["label"] = k.label();
    j["case"] = k.case_tag == CaseTag::NegDisc ? "disc<0" : "disc>=0";
    j["period"] = qq.period;
    j["a"] = rat_str(qq.a);
    j["b"] = rat_str(qq.b);
    ordered_json cs = ordered_json::array();
    for (const Rational& c : qq.c) cs.push_back(rat_str(c));
    j["c"] = cs;
    if (N >= 1) j["degree_at_N"] = rat_str(qq.evaluate(N));
    std::cout << j.dump(2) << '\n';
    return kExitPass;
}

int cmd_surface(const std::string& r, const std::string& s, const std::string& t,
                bool show_paths) {
    const MontesinosKnot k = knot_from(r, s, t);
    const EdgepathSystem seifert = build_seifert_system(k);
    const EdgepathSystem matching =
        k.case_tag == CaseTag::NegDisc ? build_type1_system(k) : build_type2_system(k);
    ordered_json j;
    j["label"] = k.label();
    j["case"] = k.case_tag == CaseTag::NegDisc ? "disc<0" : "disc>=0";
    if (k.case_tag == CaseTag::NegDisc) {
        j["u0"] = rat_str(compute_u0(k));
        const auto [kk, tt] = locate_k_and_fraction(k);
        j["k"] = kk;
        j["t"] = rat_str(tt);
    }
    j["r_cycle"] = matching.r_cycle;
    j["twist_S0"] = rat_str(twist(seifert));
    j["twist_S"] = rat_str(twist(matching));
    j["bs"] = rat_str(twist(matching) - twist(seifert));
    j["chi_ratio"] = rat_str(euler_ratio(matching));
    ordered_json adm = ordered_json::array();
    for (const auto& sys : {seifert, matching})
        for (AdmissibilityCondition c : check_admissibility(sys))
            adm.push_back("E" + std::to_string(static_cast<int>(c) + 1));
    j["admissibility"] = adm;
    j["incompressible"] = incompressibility_check(matching);
    std::cout << j.dump(2) << '\n';
    if (show_paths) {
        std::cout << "Seifert system:\n";
        print_paths(seifert, std::cout);
        std::cout << (k.case_tag == CaseTag::NegDisc ? "type I system:\n" : "type II system:\n");
        print_paths(matching, std::cout);
    }
    return kExitPass;
}

int cmd_jones(const std::string& r, const std::string& s, const std::string& t, long long n,
              unsigned long long max_assignments) {
    const MontesinosKnot k = knot_from(r, s, t);
    StateSumOptions opts;
    if (max_assignments) opts.max_assignments = max_assignments;
    const LaurentPoly j = state_sum(k, n, opts);
    std::cout << "J_" << k.label() << "(" << n + 1 << ") = " << j.str() << '\n';
    std::cout << "max_degree = " << j.max_degree() << '\n';
    return kExitPass;
}

int cmd_sweep(const std::string& grid_file, const Budgets& budgets, EmitFormat format) {
    GridSpec grid;
    if (!grid_file.empty()) {
        std::ifstream in(grid_file);
        if (!in) throw CLI::ValidationError("--grid", "cannot open " + grid_file);
        grid = parse_grid_config(in);
    }
    grid.budgets.use_bracket = budgets.use_bracket;
    const SweepResult result = sweep(grid);
    emit(result, format, std::cout);
    bool any_budget = false;
    for (const auto& rep : result.reports) any_budget = any_budget || rep.budget_exceeded;
    if (any_budget) return kExitBudget;
    return result.summary.failures.empty() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the (Strong) Slope Conjecture on 3-string Montesinos knots"};
    app.require_subcommand(1);

    std::string r, s, t, format = "text", grid_file, oracle;
    long long N = 0, n = 1;
    unsigned long long max_assignments = 0;
    Budgets budgets;

    auto add_tails = [&](CLI::App* cmd) {
        cmd->add_option("--r", r, "r-tail, e.g. -4,-1")->required();
        cmd->add_option("--s", s, "s-tail, e.g. 2,-1")->required();
        cmd->add_option("--t", t, "t-tail, e.g. 2,-1")->required();
    };

    CLI::App* verify = app.add_subcommand("verify", "verify one instance");
    add_tails(verify);
    verify->add_option("--format", format, "json, csv or text");
    verify->add_option("--oracle", oracle, "enable 'bracket' for the Kauffman cross-check");
    verify->add_option("--brute-n", budgets.brute_n, "max n for the full-Phi brute force");
    verify->add_option("--reduced-n", budgets.reduced_n, "max n for the reduced scan");
    verify->add_option("--state-n", budgets.state_sum_n, "max n for the state sum");

    CLI::App* degree = app.add_subcommand("degree", "closed-form degree quasi-quadratic");
    add_tails(degree);
    degree->add_option("--N", N, "also evaluate d+J at this color N >= 1");

    CLI::App* surface = app.add_subcommand("surface", "edgepath systems and boundary slope");
    add_tails(surface);
    bool show_paths = false;
    surface->add_flag("--paths", show_paths, "also print the edgepath rows");

    CLI::App* jones = app.add_subcommand("jones", "state-sum colored Jones polynomial");
    add_tails(jones);
    jones->add_option("--n", n, "computes J_K(n+1)");
    jones->add_option("--max-assignments", max_assignments, "state-sum budget override");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify a parameter grid");
    sweep_cmd->add_option("--grid", grid_file, "grid config file (key=value)");
    sweep_cmd->add_option("--format", format, "json, csv or text");
    sweep_cmd->add_option("--oracle", oracle, "enable 'bracket' for the Kauffman cross-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (!oracle.empty()) {
            if (oracle != "bracket") {
                std::cerr << "unknown oracle: " << oracle << '\n';
                return kExitUsage;
            }
            budgets.use_bracket = true;
        }
        if (verify->parsed()) return cmd_verify(r, s, t, budgets, parse_format(format));
        if (degree->parsed()) return cmd_degree(r, s, t, N);
        if (surface->parsed()) return cmd_surface(r, s, t, show_paths);
        if (jones->parsed()) return cmd_jones(r, s, t, n, max_assignments);
        if (sweep_cmd->parsed()) return cmd_sweep(grid_file, budgets, parse_format(format));
    } catch (const mont::FamilyError& e) {
        std::cerr << "invalid family parameters: " << e.what() << '\n';
        return kExitUsage;
    } catch (const mont::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
