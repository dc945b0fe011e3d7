#include "mont/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mont/colored_jones.hpp"
#include "mont/kauffman.hpp"

namespace mont {

bool VerificationReport::passed() const {
    if (!(slope_match && euler_match && b_nonpositive && edgepath_consistent && incompressible))
        return false;
    for (const DegreeCheck& c : degree_checks)
        if (!c.match) return false;
    for (const StateSumCheck& c : state_checks)
        if (!c.match) return false;
    return kauffman_status.rfind("mismatch", 0) != 0;
}

VerificationReport verify_instance(const MontesinosKnot& k, const Budgets& budgets) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.label = k.label();
    rep.case_name = k.case_tag == CaseTag::NegDisc ? "disc<0" : "disc>=0";
    rep.period = k.period;
    rep.qq = closed_form_degree(k);
    rep.closed_surface = closed_form_surface(k);

    const EdgepathSystem seifert = build_seifert_system(k);
    const EdgepathSystem matching =
        k.case_tag == CaseTag::NegDisc ? build_type1_system(k) : build_type2_system(k);
    rep.edge_twist_s0 = twist(seifert);
    rep.edge_twist_s = twist(matching);
    rep.edge_bs = rep.edge_twist_s - rep.edge_twist_s0;
    rep.edge_chi = euler_ratio(matching);
    const bool admissible =
        check_admissibility(seifert).empty() && check_admissibility(matching).empty();
    rep.edgepath_consistent = admissible &&
                              rep.edge_twist_s0 == rep.closed_surface.twist_s0 &&
                              rep.edge_twist_s == rep.closed_surface.twist &&
                              rep.edge_bs == rep.closed_surface.boundary_slope &&
                              rep.edge_chi == rep.closed_surface.chi_ratio;
    rep.incompressible = incompressibility_check(matching);

    rep.slope_match = rep.qq.a == rep.closed_surface.boundary_slope;
    rep.euler_match = rep.qq.b == rep.closed_surface.chi_ratio;
    rep.b_nonpositive = check_b_nonpositive(rep.qq);

    for (long long n = 0; n <= budgets.reduced_n; ++n) {
        DegreeCheck dc;
        dc.n = n;
        dc.closed = rep.qq.evaluate(n + 1);
        dc.reduced = reduced_max_R(k, n).max;
        dc.match = dc.reduced == dc.closed;
        if (n <= budgets.brute_n) {
            try {
                dc.brute = brute_force_max_phi(k, n, budgets.brute_assignments).max;
                dc.has_brute = true;
                dc.match = dc.match && dc.brute == dc.closed;
            } catch (const BudgetExceeded&) {
                rep.budget_exceeded = true;
            }
        }
        rep.degree_checks.push_back(dc);
    }

    if (k.m() == 1 && k.p() == 1 && k.q() == 1) {
        StateSumOptions opts;
        opts.max_assignments = budgets.state_assignments;
        for (long long n = 0; n <= budgets.state_sum_n; ++n) {
            try {
                const LaurentPoly j = state_sum(k, n, opts);
                StateSumCheck sc;
                sc.n = n;
                sc.degree = j.max_degree();
                sc.closed = rep.qq.evaluate(n + 1);
                sc.match = Rational(sc.degree) == sc.closed;
                rep.state_checks.push_back(sc);
            } catch (const BudgetExceeded&) {
                rep.budget_exceeded = true;
            }
        }
    }

    if (budgets.use_bracket) {
        if (k.total_crossings() > budgets.crossing_limit) {
            rep.kauffman_status = "skipped (crossing limit)";
        } else {
            try {
                const BracketResult br = kauffman_oracle(k, budgets.crossing_limit);
                const LaurentPoly ref = state_sum(k, 1);
                if (br.jones2 == ref)
                    rep.kauffman_status = "match (sign +1)";
                else if (br.jones2 == -ref)
                    rep.kauffman_status = "match (sign -1)";
                else
                    rep.kauffman_status = "mismatch";
            } catch (const std::exception& e) {
                rep.kauffman_status = std::string("unavailable (") + e.what() + ")";
            }
        }
    }

    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
}

SweepResult sweep(const GridSpec& grid) {
    SweepResult result;
    std::vector<MontesinosKnot> instances;
    for (long long r0 : grid.r0s)
        for (long long s0 : grid.s0s)
            for (long long t0 : grid.t0s)
                for (const auto& combo : grid.combos) {
                    auto tail = [&](long long head, int idx) {
                        ContinuedFraction cf;
                        cf.entries.push_back(head);
                        for (long long e : grid.templates.at(combo[idx])) cf.entries.push_back(e);
                        return cf;
                    };
                    try {
                        MontesinosKnot k =
                            validate_family(tail(r0, 0), tail(s0, 1), tail(t0, 2));
                        if (k.total_crossings() > grid.max_crossings) {
                            ++result.summary.skipped;
                            continue;
                        }
                        instances.push_back(std::move(k));
                    } catch (const FamilyError&) {
                        ++result.summary.skipped;
                    }
                }

    result.reports.resize(instances.size());
    size_t workers = 1;
    if (const char* env = std::getenv("MONTVERIFY_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 1) workers = static_cast<size_t>(v);
    }
    workers = std::min(workers, instances.size() ? instances.size() : size_t{1});
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1))
            result.reports[i] = verify_instance(instances[i], grid.budgets);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (const VerificationReport& rep : result.reports) {
        ++result.summary.total;
        if (rep.case_name == "disc<0")
            ++result.summary.neg_disc;
        else
            ++result.summary.nonneg_disc;
        if (rep.passed())
            ++result.summary.passed;
        else
            result.summary.failures.push_back(rep.label);
    }
    return result;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json report_json(const VerificationReport& r) {
    ordered_json j;
    j["label"] = r.label;
    j["case"] = r.case_name;
    j["period"] = r.period;
    ordered_json qq;
    qq["a"] = rat_str(r.qq.a);
    qq["b"] = rat_str(r.qq.b);
    ordered_json cs = ordered_json::array();
    for (const Rational& c : r.qq.c) cs.push_back(rat_str(c));
    qq["c"] = cs;
    qq["period"] = r.qq.period;
    j["quasi_quadratic"] = qq;
    ordered_json surf;
    surf["twist_s0"] = rat_str(r.closed_surface.twist_s0);
    surf["twist_s"] = rat_str(r.closed_surface.twist);
    surf["bs"] = rat_str(r.closed_surface.boundary_slope);
    surf["chi_ratio"] = rat_str(r.closed_surface.chi_ratio);
    j["closed_surface"] = surf;
    ordered_json ep;
    ep["twist_s0"] = rat_str(r.edge_twist_s0);
    ep["twist_s"] = rat_str(r.edge_twist_s);
    ep["bs"] = rat_str(r.edge_bs);
    ep["chi_ratio"] = rat_str(r.edge_chi);
    j["edgepath"] = ep;
    ordered_json dcs = ordered_json::array();
    for (const DegreeCheck& c : r.degree_checks) {
        ordered_json d;
        d["n"] = c.n;
        if (c.has_brute) d["brute"] = rat_str(c.brute);
        d["reduced"] = rat_str(c.reduced);
        d["closed"] = rat_str(c.closed);
        d["match"] = c.match;
        dcs.push_back(d);
    }
    j["degree_checks"] = dcs;
    ordered_json scs = ordered_json::array();
    for (const StateSumCheck& c : r.state_checks) {
        ordered_json s;
        s["n"] = c.n;
        s["degree"] = c.degree;
        s["closed"] = rat_str(c.closed);
        s["match"] = c.match;
        scs.push_back(s);
    }
    j["state_checks"] = scs;
    j["kauffman"] = r.kauffman_status;
    ordered_json v;
    v["slope_match"] = r.slope_match;
    v["euler_match"] = r.euler_match;
    v["b_nonpositive"] = r.b_nonpositive;
    v["edgepath_consistent"] = r.edgepath_consistent;
    v["incompressible"] = r.incompressible;
    j["verdicts"] = v;
    j["budget_exceeded"] = r.budget_exceeded;
    j["passed"] = r.passed();
    return j;
}

const char* kCsvHeader =
    "label,case,period,a,b,bs,chi_ratio,slope_match,euler_match,b_nonpositive,"
    "edgepath_consistent,incompressible,degree_checks_ok,state_checks_ok,kauffman,passed";

void csv_row(const VerificationReport& r, std::ostream& out) {
    bool deg_ok = true, st_ok = true;
    for (const DegreeCheck& c : r.degree_checks) deg_ok = deg_ok && c.match;
    for (const StateSumCheck& c : r.state_checks) st_ok = st_ok && c.match;
    out << '"' << r.label << "\"," << r.case_name << ',' << r.period << ','
        << rat_str(r.qq.a) << ',' << rat_str(r.qq.b) << ','
        << rat_str(r.closed_surface.boundary_slope) << ','
        << rat_str(r.closed_surface.chi_ratio) << ',' << r.slope_match << ','
        << r.euler_match << ',' << r.b_nonpositive << ',' << r.edgepath_consistent << ','
        << r.incompressible << ',' << deg_ok << ',' << st_ok << ",\"" << r.kauffman_status
        << "\"," << r.passed() << '\n';
}

void text_report(const VerificationReport& r, std::ostream& out) {
    out << r.label << "  [" << r.case_name << ", period " << r.period << "]\n"
        << "  d+J(N) = " << rat_str(r.qq.a) << "*N^2 + 2*" << rat_str(r.qq.b) << "*N + c_l, c = (";
    for (size_t i = 0; i < r.qq.c.size(); ++i) out << (i ? ", " : "") << rat_str(r.qq.c[i]);
    out << ")\n"
        << "  bs = " << rat_str(r.closed_surface.boundary_slope)
        << "  chi/#S = " << rat_str(r.closed_surface.chi_ratio) << "\n"
        << "  verdicts: slope=" << r.slope_match << " euler=" << r.euler_match
        << " b<=0=" << r.b_nonpositive << " edgepaths=" << r.edgepath_consistent
        << " incompressible=" << r.incompressible << " kauffman=" << r.kauffman_status
        << "\n  " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

void emit_report(const VerificationReport& report, EmitFormat format, std::ostream& out) {
    switch (format) {
        case EmitFormat::Json: out << report_json(report).dump(2) << '\n'; break;
        case EmitFormat::Csv: out << kCsvHeader << '\n'; csv_row(report, out); break;
        case EmitFormat::Text: text_report(report, out); break;
    }
}

void emit(const SweepResult& result, EmitFormat format, std::ostream& out) {
    switch (format) {
        case EmitFormat::Json: {
            ordered_json j;
            ordered_json sum;
            sum["total"] = result.summary.total;
            sum["passed"] = result.summary.passed;
            sum["skipped"] = result.summary.skipped;
            sum["disc_negative"] = result.summary.neg_disc;
            sum["disc_nonnegative"] = result.summary.nonneg_disc;
            sum["failures"] = result.summary.failures;
            j["summary"] = sum;
            ordered_json reps = ordered_json::array();
            for (const VerificationReport& r : result.reports) reps.push_back(report_json(r));
            j["reports"] = reps;
            out << j.dump(2) << '\n';
            break;
        }
        case EmitFormat::Csv: {
            out << kCsvHeader << '\n';
            for (const VerificationReport& r : result.reports) csv_row(r, out);
            break;
        }
        case EmitFormat::Text: {
            for (const VerificationReport& r : result.reports) text_report(r, out);
            out << "total " << result.summary.total << ", passed " << result.summary.passed
                << ", skipped " << result.summary.skipped << " (disc<0: "
                << result.summary.neg_disc << ", disc>=0: " << result.summary.nonneg_disc
                << ")\n";
            for (const std::string& f : result.summary.failures) out << "FAILED: " << f << '\n';
            break;
        }
    }
}

namespace {

std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

GridSpec parse_grid_config(std::istream& in) {
    GridSpec grid;
    bool templates_reset = false, combos_reset = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad config line: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "r0") {
            grid.r0s = parse_ll_list(value);
        } else if (key == "s0") {
            grid.s0s = parse_ll_list(value);
        } else if (key == "t0") {
            grid.t0s = parse_ll_list(value);
        } else if (key == "template") {
            if (!templates_reset) grid.templates.clear(), templates_reset = true;
            grid.templates.push_back(parse_ll_list(value));
        } else if (key == "combo") {
            if (!combos_reset) grid.combos.clear(), combos_reset = true;
            const auto ix = parse_ll_list(value);
            if (ix.size() != 3) throw std::runtime_error("combo needs 3 template indices");
            grid.combos.push_back({static_cast<int>(ix[0] - 1), static_cast<int>(ix[1] - 1),
                                   static_cast<int>(ix[2] - 1)});
        } else if (key == "max_crossings") {
            grid.max_crossings = std::stoll(value);
        } else if (key == "brute_n") {
            grid.budgets.brute_n = std::stoll(value);
        } else if (key == "reduced_n") {
            grid.budgets.reduced_n = std::stoll(value);
        } else if (key == "state_n") {
            grid.budgets.state_sum_n = std::stoll(value);
        } else if (key == "crossing_limit") {
            grid.budgets.crossing_limit = std::stoll(value);
        } else if (key == "bracket") {
            grid.budgets.use_bracket = value == "1" || value == "true";
        } else {
            throw std::runtime_error("unknown config key: " + key);
        }
    }
    return grid;
}

}  // namespace mont
