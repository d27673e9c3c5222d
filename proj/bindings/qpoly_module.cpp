#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qp/axioms.hpp"
#include "qp/classify.hpp"
#include "qp/io.hpp"
#include "qp/verify.hpp"

namespace py = pybind11;

namespace {

qp::DiscreteFunction make_function(int m, int n, std::vector<int> table) {
  return qp::DiscreteFunction(qp::Chain(m), n, std::move(table));
}

}  // namespace

PYBIND11_MODULE(_qpoly, mod) {
  mod.doc() = "Lattice (quasi-)polynomial functions over finite bounded chains";

  mod.def(
      "eval_at",
      [](int m, int n, std::vector<int> table, std::vector<int> point) {
        const qp::DiscreteFunction f = make_function(m, n, std::move(table));
        return f.eval(qp::Tuple(f.chain(), std::move(point)));
      },
      py::arg("m"), py::arg("n"), py::arg("table"), py::arg("point"),
      "Value of the table function at a point (components 0-based chain elements).");

  mod.def(
      "is_polynomial",
      [](int m, int n, std::vector<int> table) {
        return qp::is_polynomial(make_function(m, n, std::move(table))).polynomial;
      },
      py::arg("m"), py::arg("n"), py::arg("table"));

  mod.def(
      "is_quasi_polynomial",
      [](int m, int n, std::vector<int> table) {
        return qp::is_quasi_polynomial(make_function(m, n, std::move(table))).quasi_polynomial;
      },
      py::arg("m"), py::arg("n"), py::arg("table"));

  mod.def(
      "classify",
      [](int m, int n, std::vector<int> table) {
        const qp::ClassReport rep = qp::classify(make_function(m, n, std::move(table)));
        py::dict out;
        out["polynomial"] = rep.polynomial;
        out["quasi_polynomial"] = rep.quasi_polynomial;
        out["quasi_sugeno"] = rep.quasi_sugeno;
        out["quasi_term"] = rep.quasi_term;
        out["quasi_weighted_max"] = rep.quasi_weighted_max;
        out["quasi_weighted_min"] = rep.quasi_weighted_min;
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("table"));

  mod.def(
      "axiom_holds",
      [](int m, int n, std::vector<int> table, const std::string& axiom) {
        const auto a = qp::axiom_from_string(axiom);
        if (!a) throw std::invalid_argument("unknown axiom '" + axiom + "'");
        const qp::DiscreteFunction f = make_function(m, n, std::move(table));
        return qp::check(f, *a).holds;
      },
      py::arg("m"), py::arg("n"), py::arg("table"), py::arg("axiom"));

  mod.def(
      "axioms",
      [](int m, int n, std::vector<int> table) {
        const qp::DiscreteFunction f = make_function(m, n, std::move(table));
        const qp::AxiomChecker ax(f.chain(), f.arity());
        py::dict out;
        for (const qp::AxiomId a : qp::kAllAxioms)
          out[py::str(std::string(qp::to_string(a)))] = ax.holds(f, a);
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("table"));

  mod.def(
      "canonical_factorization",
      [](int m, int n, std::vector<int> table) -> py::object {
        const qp::QuasiPolynomialCheck qc =
            qp::is_quasi_polynomial(make_function(m, n, std::move(table)));
        if (!qc.quasi_polynomial) return py::none();
        return py::make_tuple(qc.canonical->p.table(), qc.canonical->phi.values());
      },
      py::arg("m"), py::arg("n"), py::arg("table"),
      "Pair (p table, phi values) with f = p o phi, or None when f is not quasi-polynomial.");

  mod.def(
      "verify",
      [](const std::string& theorem, int m, int n, const std::string& mode, std::size_t samples,
         std::uint64_t seed, int jobs, std::size_t budget) {
        const auto t = qp::theorem_from_string(theorem);
        if (!t) throw std::invalid_argument("unknown theorem '" + theorem + "'");
        const auto um = qp::universe_mode_from_string(mode);
        if (!um) throw std::invalid_argument("unknown mode '" + mode + "'");
        const qp::Universe u{m, n, *um, samples, seed, budget};
        const qp::VerificationReport rep = qp::verify(*t, u, jobs);
        py::dict out;
        out["theorem"] = std::string(qp::to_string(*t));
        out["m"] = m;
        out["n"] = n;
        out["mode"] = std::string(qp::to_string(*um));
        out["seed"] = seed;
        out["checked"] = rep.functions_checked;
        out["holds"] = rep.holds;
        out["witness"] =
            rep.holds ? py::object(py::none()) : py::cast(rep.counterexample->function.table());
        out["detail"] =
            rep.holds ? py::object(py::none()) : py::cast(rep.counterexample->detail);
        return out;
      },
      py::arg("theorem"), py::arg("m"), py::arg("n"), py::arg("mode") = "exhaustive",
      py::arg("samples") = 0, py::arg("seed") = 0, py::arg("jobs") = 1,
      py::arg("budget") = 10'000'000);

  mod.def(
      "count_classes",
      [](int m, int n, std::size_t budget, int jobs) {
        const qp::ClassCounts c = qp::count_classes(m, n, budget, jobs);
        py::dict out;
        out["m"] = c.m;
        out["n"] = c.n;
        out["total"] = c.total;
        for (std::size_t k = 0; k < qp::kAllAxioms.size(); ++k)
          out[py::str(std::string(qp::to_string(qp::kAllAxioms[k])))] = c.axiom[k];
        out["polynomial"] = c.polynomial;
        out["quasi_polynomial"] = c.quasi_polynomial;
        out["quasi_term"] = c.quasi_term;
        out["quasi_weighted_max"] = c.quasi_weighted_max;
        out["quasi_weighted_min"] = c.quasi_weighted_min;
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("budget") = 10'000'000, py::arg("jobs") = 1);

  mod.def(
      "random_function",
      [](int m, int n, std::uint64_t seed, const std::string& constraint) {
        qp::SampleConstraint c;
        if (constraint == "any")
          c = qp::SampleConstraint::any;
        else if (constraint == "nondecreasing")
          c = qp::SampleConstraint::nondecreasing;
        else
          throw std::invalid_argument("unknown constraint '" + constraint + "'");
        return qp::random_function(m, n, seed, c).table();
      },
      py::arg("m"), py::arg("n"), py::arg("seed"), py::arg("constraint") = "any");

  mod.def(
      "to_qpf",
      [](int m, int n, std::vector<int> table) {
        return qp::serialize(make_function(m, n, std::move(table)));
      },
      py::arg("m"), py::arg("n"), py::arg("table"));

  mod.def(
      "from_qpf",
      [](const std::string& text) {
        const qp::DiscreteFunction f = qp::parse_function(text);
        return py::make_tuple(f.chain().size(), f.arity(), f.table());
      },
      py::arg("text"), "Returns (m, n, table).");

  mod.attr("__version__") = "1.0.0";
}
