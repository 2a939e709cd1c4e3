#include "chowforge/cherncycles.hpp"
#include "chowforge/groebner.hpp"
#include "chowforge/matdet.hpp"
#include "chowforge/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace chowforge;

namespace {

RingPtr ring_of(const std::vector<std::string>& vars) { return RingBuilder().vars(vars).build(); }

Ideal ideal_of(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
    RingPtr R = ring_of(vars);
    std::vector<Polynomial> g;
    for (const auto& s : gens) g.push_back(R->parse(s));
    return Ideal(R, std::move(g));
}

// Runs the suites with the GIL released; returns the schema-1 JSON document.
std::string run_json(const std::vector<std::string>& suites, std::size_t n_max, std::size_t r_max, std::size_t l_max,
                     std::uint64_t seed, std::uint64_t budget_steps, double budget_secs, bool force) {
    SuiteConfig cfg;
    cfg.suites = suites;
    cfg.n_max = n_max;
    cfg.r_max = r_max;
    cfg.l_max = l_max;
    cfg.seed = seed;
    cfg.budget.steps = budget_steps;
    cfg.budget.seconds = budget_secs;
    cfg.force = force;
    cfg.validate();
    py::gil_scoped_release release;
    return report_json(run_suites(cfg), cfg, -1);
}

}  // namespace

PYBIND11_MODULE(_chowforge, m) {
    m.doc() = "Exact verification engine: polynomials, Groebner bases, suites";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    SuiteConfig defaults;
    m.def("suite_names", &suite_names);
    m.def("run_json", &run_json, py::arg("suites"), py::arg("n_max") = defaults.n_max,
          py::arg("r_max") = defaults.r_max, py::arg("l_max") = defaults.l_max, py::arg("seed") = defaults.seed,
          py::arg("budget_steps") = defaults.budget.steps, py::arg("budget_secs") = defaults.budget.seconds,
          py::arg("force") = false);

    m.def("named_ideal_examples", &named_ideal_examples);
    m.def("export_named", [](const std::string& id) { return export_ideal(named_ideal(id)); }, py::arg("id"));
    m.def("named_dim", [](const std::string& id) { return krull_dim(named_ideal(id)); }, py::arg("id"));
    m.def("roundtrip", [](const std::string& text) { return export_ideal(import_ideal(text)); }, py::arg("text"));

    m.def("groebner",
          [](const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
              auto gb = ideal_of(vars, gens).groebner();
              std::vector<std::string> out;
              for (const auto& g : gb->elements()) out.push_back(g.str());
              return out;
          },
          py::arg("vars"), py::arg("gens"));
    m.def("contains",
          [](const std::vector<std::string>& vars, const std::vector<std::string>& gens, const std::string& f) {
              Ideal I = ideal_of(vars, gens);
              return I.contains(I.ring()->parse(f));
          },
          py::arg("vars"), py::arg("gens"), py::arg("f"));
    m.def("dim",
          [](const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
              return krull_dim(ideal_of(vars, gens));
          },
          py::arg("vars"), py::arg("gens"));
    m.def("det",
          [](const std::vector<std::string>& vars, const std::string& matrix) {
              return det(PolyMatrix::parse(ring_of(vars), matrix)).str();
          },
          py::arg("vars"), py::arg("matrix"));
}
