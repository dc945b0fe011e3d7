#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mont/colored_jones.hpp"
#include "mont/hatcher_oertel.hpp"
#include "mont/jones_slope.hpp"
#include "mont/montesinos.hpp"
#include "mont/verifier.hpp"

namespace py = pybind11;
using namespace mont;

namespace {

MontesinosKnot make_knot(const std::string& r, const std::string& s, const std::string& t) {
    return validate_family(parse_tail(r), parse_tail(s), parse_tail(t));
}

py::dict degree_dict(const std::string& r, const std::string& s, const std::string& t) {
    MontesinosKnot k = make_knot(r, s, t);
    QuasiQuadratic qq = closed_form_degree(k);
    py::dict out;
    out["label"] = k.label();
    out["case"] = k.case_tag == CaseTag::NegDisc ? "disc<0" : "disc>=0";
    out["period"] = qq.period;
    out["a"] = rat_str(qq.a);
    out["b"] = rat_str(qq.b);
    py::list cs;
    for (const Rational& c : qq.c) cs.append(rat_str(c));
    out["c"] = cs;
    return out;
}

py::dict surface_dict(const std::string& r, const std::string& s, const std::string& t) {
    MontesinosKnot k = make_knot(r, s, t);
    SurfaceInvariants inv = closed_form_surface(k);
    py::dict out;
    out["label"] = k.label();
    out["twist"] = rat_str(inv.twist);
    out["twist_seifert"] = rat_str(inv.twist_s0);
    out["boundary_slope"] = rat_str(inv.boundary_slope);
    out["chi_ratio"] = rat_str(inv.chi_ratio);
    return out;
}

std::string jones_str(const std::string& r, const std::string& s, const std::string& t,
                      long long n) {
    return state_sum(make_knot(r, s, t), n).str();
}

py::dict verify_dict(const std::string& r, const std::string& s, const std::string& t,
                     long long brute_n, long long reduced_n, long long state_n) {
    Budgets b;
    b.brute_n = brute_n;
    b.reduced_n = reduced_n;
    b.state_sum_n = state_n;
    VerificationReport rep = verify_instance(make_knot(r, s, t), b);
    py::dict out;
    out["label"] = rep.label;
    out["case"] = rep.case_name;
    out["period"] = rep.period;
    out["slope_match"] = rep.slope_match;
    out["euler_match"] = rep.euler_match;
    out["b_nonpositive"] = rep.b_nonpositive;
    out["edgepath_consistent"] = rep.edgepath_consistent;
    out["incompressible"] = rep.incompressible;
    out["budget_exceeded"] = rep.budget_exceeded;
    bool degrees_ok = true;
    for (const DegreeCheck& c : rep.degree_checks) degrees_ok = degrees_ok && c.match;
    for (const StateSumCheck& c : rep.state_checks) degrees_ok = degrees_ok && c.match;
    out["degrees_ok"] = degrees_ok;
    out["passed"] = rep.passed();
    return out;
}

py::str report_json(const std::string& r, const std::string& s, const std::string& t) {
    VerificationReport rep = verify_instance(make_knot(r, s, t), Budgets{});
    std::ostringstream out;
    emit_report(rep, EmitFormat::Json, out);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_montverify, mod) {
    mod.doc() = "Exact verifier for boundary slopes of 3-string Montesinos knots";
    mod.def("degree", &degree_dict, py::arg("r"), py::arg("s"), py::arg("t"),
            "Closed-form quasi-quadratic maximal degree of the colored Jones function.");
    mod.def("surface", &surface_dict, py::arg("r"), py::arg("s"), py::arg("t"),
            "Closed-form invariants of the candidate essential surface.");
    mod.def("jones", &jones_str, py::arg("r"), py::arg("s"), py::arg("t"), py::arg("n"),
            "Normalized colored Jones polynomial at color n+1, as a string in v.");
    mod.def("verify", &verify_dict, py::arg("r"), py::arg("s"), py::arg("t"),
            py::arg("brute_n") = 2, py::arg("reduced_n") = 10, py::arg("state_n") = 1,
            "Run the verification pipeline on one instance and return the verdicts.");
    mod.def("report_json", &report_json, py::arg("r"), py::arg("s"), py::arg("t"),
            "Full default-budget verification report serialized as JSON.");
}
