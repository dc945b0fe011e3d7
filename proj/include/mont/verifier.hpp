#pragma once

#include <iosfwd>
#include <optional>

#include "mont/hatcher_oertel.hpp"
#include "mont/jones_slope.hpp"

namespace mont {

struct Budgets {
    long long brute_n = 6;        // full-Phi brute force for n <= brute_n
    long long reduced_n = 40;     // reduced triangle scan for n <= reduced_n
    long long state_sum_n = 3;    // state sum for n <= state_sum_n (m=p=q=1 only)
    unsigned long long brute_assignments = 200'000'000;
    unsigned long long state_assignments = 2'000'000;
    bool use_bracket = false;     // opt-in Kauffman oracle
    long long crossing_limit = 16;
};

struct DegreeCheck {
    long long n;
    bool has_brute = false;
    Rational brute;     // valid when has_brute
    Rational reduced;
    Rational closed;    // closed_form_degree.evaluate(n+1)
    bool match = false;
};

struct StateSumCheck {
    long long n;
    long long degree;   // max_degree of the state sum
    Rational closed;
    bool match = false;
};

struct VerificationReport {
    std::string label;
    std::string case_name;  // "disc<0" or "disc>=0"
    long long period = 1;
    QuasiQuadratic qq;
    SurfaceInvariants closed_surface;
    // edgepath-derived counterparts
    Rational edge_twist_s0, edge_twist_s, edge_bs, edge_chi;
    std::vector<DegreeCheck> degree_checks;
    std::vector<StateSumCheck> state_checks;
    std::string kauffman_status = "skipped";
    // verdicts
    bool slope_match = false;
    bool euler_match = false;
    bool b_nonpositive = false;
    bool edgepath_consistent = false;
    bool incompressible = false;
    bool budget_exceeded = false;
    long long millis = 0;

    bool passed() const;
};

struct GridSpec {
    std::vector<long long> r0s{-2, -4, -6};
    std::vector<long long> s0s{2, 4};
    std::vector<long long> t0s{2, 4};
    std::vector<std::vector<long long>> templates{{-1}, {-2, -1}, {-2, -3}};
    std::vector<std::array<int, 3>> combos{
        {0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {1, 0, 0}, {0, 1, 2}};
    long long max_crossings = 100;
    Budgets budgets;
};

struct SweepSummary {
    long long total = 0;
    long long passed = 0;
    long long skipped = 0;  // invalid parameter combinations
    long long neg_disc = 0;
    long long nonneg_disc = 0;
    std::vector<std::string> failures;
};

struct SweepResult {
    std::vector<VerificationReport> reports;
    SweepSummary summary;
};

VerificationReport verify_instance(const MontesinosKnot& k, const Budgets& budgets);

/// Deterministic grid enumeration; invalid combinations are counted, not
/// errors. Worker count is read from MONTVERIFY_WORKERS (default 1); results
/// are merged in enumeration order regardless of worker count.
SweepResult sweep(const GridSpec& grid);

enum class EmitFormat { Json, Csv, Text };

void emit(const SweepResult& result, EmitFormat format, std::ostream& out);
void emit_report(const VerificationReport& report, EmitFormat format, std::ostream& out);

/// Plain-text key=value grid config; unknown keys are errors.
GridSpec parse_grid_config(std::istream& in);

}  // namespace mont
