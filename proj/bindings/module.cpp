#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superhowe/cli.hpp"
#include "superhowe/decompose.hpp"
#include "superhowe/report_io.hpp"
#include "superhowe/verify.hpp"

namespace py = pybind11;
using namespace superhowe;

namespace {

std::vector<std::string> weight_strings(const Weight& w) {
    std::vector<std::string> out;
    for (const Rational& c : w.coords) out.push_back(c.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_superhowe, m) {
    m.doc() = "exact spinor-oscillator engine for the spo(2n|1) / osp(2|2) duality on S(E)";

    py::class_<SuperPoly>(m, "SuperPoly")
        .def(py::init([](const std::string& text, int n) {
                 return parse_poly(text, VarSpace(n));
             }),
             py::arg("text"), py::arg("n"))
        .def("__str__", [](const SuperPoly& p) { return to_string(p); })
        .def("__repr__",
             [](const SuperPoly& p) { return "SuperPoly('" + to_string(p) + "')"; })
        .def("__add__", [](const SuperPoly& a, const SuperPoly& b) { return a + b; })
        .def("__sub__", [](const SuperPoly& a, const SuperPoly& b) { return a - b; })
        .def("__mul__", [](const SuperPoly& a, const SuperPoly& b) { return poly_mul(a, b); })
        .def("__neg__", [](const SuperPoly& a) { return -a; })
        .def("__eq__", [](const SuperPoly& a, const SuperPoly& b) { return a == b; })
        .def("is_zero", &SuperPoly::is_zero)
        .def("degree", &SuperPoly::degree)
        .def("num_terms", &SuperPoly::num_terms);

    m.def("dim_of_degree", [](int n, int d) { return dim_of_degree(VarSpace(n), d); },
          py::arg("n"), py::arg("d"), "dimension of S^d(E)");
    m.def("harmonic_dim", &harmonic_dim, py::arg("n"), py::arg("d"),
          "dimension of S^d(E)^{n'+}");

    m.def("omega", &omega, py::arg("d"), py::arg("k"), py::arg("n"));
    m.def("omega_tilde", &omega_tilde, py::arg("d"), py::arg("k"), py::arg("n"));
    m.def("nu_vector", &nu_vector, py::arg("n"), py::arg("k"));
    m.def("s_vector", &s_vector, py::arg("n"), py::arg("k"));
    m.def("p_vector", &p_vector, py::arg("d"), py::arg("k"), py::arg("n"));
    m.def("gamma_poly",
          [](int n, const std::vector<int>& indices) {
              return gamma_poly(VarSpace(n), indices);
          },
          py::arg("n"), py::arg("indices"));

    m.def("joint_weights",
          [](const SuperPoly& v, int n) {
              py::dict out;
              auto set = [&out, &v](const char* key, const AlgebraSpec& alg) {
                  const auto w = weight_of(v, alg);
                  if (w)
                      out[key] = weight_strings(*w);
                  else
                      out[key] = py::none();
              };
              set("gl_big", build_gl_big(n));
              set("gl_small", build_gl_small(n));
              set("spo", build_spo(n));
              set("osp22", build_osp22(n));
              return out;
          },
          py::arg("v"), py::arg("n"),
          "Cartan weights of v along each algebra (None when not a weight vector)");

    m.def("is_joint_harmonic_hwv",
          [](const SuperPoly& v, int n) {
              const AlgebraSpec spo = build_spo(n);
              const AlgebraSpec osp = build_osp22(n);
              return is_hwv(v, spo).has_value() && is_hwv(v, osp).has_value();
          },
          py::arg("v"), py::arg("n"));

    m.def("decompose_json",
          [](int n, int dmax) {
              std::vector<DecompositionReport> reports;
              for (int d = 0; d <= dmax; ++d) reports.push_back(decompose_harmonic(n, d));
              return reports_to_json(reports, n, dmax);
          },
          py::arg("n"), py::arg("dmax"),
          "harmonic decomposition reports for degrees 0..dmax as a JSON string");

    m.def("verify",
          [](const std::string& target, int n, int dmax, unsigned long long seed) {
              VerifyOptions opts;
              opts.n = n;
              opts.dmax = dmax;
              opts.seed = seed;
              const CheckLedger ledger = run_verify(target, opts);
              std::vector<std::pair<std::string, bool>> out;
              for (const Check& c : ledger.checks) out.emplace_back(c.name, c.pass);
              return py::make_tuple(ledger.all_pass(), out);
          },
          py::arg("target"), py::arg("n") = 0, py::arg("dmax") = -1,
          py::arg("seed") = 12345ULL,
          "run a named claim suite; returns (all_pass, [(check, pass), ...])");

    m.def("verify_targets", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const VerifyTarget& t : verify_targets()) out.emplace_back(t.id, t.description);
        return out;
    });

    m.def("run_cli", [](const std::vector<std::string>& args) { return cli::run(args); },
          py::arg("args"), "invoke the command-line interface; returns the exit code");

    py::register_exception<AuditError>(m, "AuditError");
}
