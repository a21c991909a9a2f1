#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dopgb/cli.hpp"
#include "dopgb/division.hpp"
#include "dopgb/errors.hpp"
#include "dopgb/groebner.hpp"
#include "dopgb/parser.hpp"

namespace py = pybind11;
using namespace dopgb;

namespace {

struct Problem {
  std::vector<DiffOp> ops;
  MonomialOrder ord;
};

Problem load(const std::vector<std::string>& ops, std::size_t nvars, const std::string& order) {
  Problem p{{}, MonomialOrder::make(parse_order_kind(order), nvars)};
  for (const auto& s : ops) p.ops.push_back(parse_operator(s, nvars));
  return p;
}

std::vector<std::string> strings(const std::vector<DiffOp>& ops, const MonomialOrder& ord) {
  std::vector<std::string> out;
  for (const auto& f : ops) out.push_back(format_op(f, ord));
  return out;
}

py::dict report_dict(const GBReport& r, const MonomialOrder& ord) {
  py::dict d;
  d["method"] = to_string(r.method);
  d["basis"] = strings(r.basis, ord);
  d["spoly_count"] = r.spoly_count;
  d["zero_reductions"] = r.zero_reductions;
  d["additions"] = strings(r.additions, ord);
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Groebner bases for left ideals of differential operators with polynomial coefficients.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ComputationCapExceeded>(m, "ComputationCapExceeded");
  py::register_exception<InvariantViolation>(m, "InvariantViolation");

  m.def(
      "multiply",
      [](const std::string& f, const std::string& g, std::size_t nvars) {
        auto ord = MonomialOrder::graded_lex(nvars);
        return format_op(parse_operator(f, nvars) * parse_operator(g, nvars), ord);
      },
      py::arg("f"), py::arg("g"), py::arg("nvars"));

  m.def(
      "groebner",
      [](const std::vector<std::string>& ops, std::size_t nvars, const std::string& method,
         const std::string& order, bool interreduce) {
        auto p = load(ops, nvars, order);
        CompletionOptions options;
        options.interreduce = interreduce;
        return report_dict(groebner(p.ops, p.ord, parse_method(method), options), p.ord);
      },
      py::arg("ops"), py::arg("nvars"), py::arg("method") = "new", py::arg("order") = "grlex",
      py::arg("interreduce") = false);

  m.def(
      "is_groebner",
      [](const std::vector<std::string>& ops, std::size_t nvars, const std::string& method,
         const std::string& order) {
        auto p = load(ops, nvars, order);
        return is_groebner(p.ops, p.ord, parse_method(method)).groebner;
      },
      py::arg("ops"), py::arg("nvars"), py::arg("method") = "new", py::arg("order") = "grlex");

  m.def(
      "reduce",
      [](const std::string& g, const std::vector<std::string>& ops, std::size_t nvars,
         const std::string& order) {
        auto p = load(ops, nvars, order);
        auto r = divide_op(parse_operator(g, nvars), p.ops, p.ord);
        return py::make_tuple(strings(r.quotients, p.ord), format_op(r.remainder, p.ord));
      },
      py::arg("g"), py::arg("ops"), py::arg("nvars"), py::arg("order") = "grlex");

  m.def(
      "syzygies",
      [](const std::vector<std::string>& ops, std::size_t nvars, const std::string& strategy,
         const std::string& order) {
        auto p = load(ops, nvars, order);
        std::vector<std::vector<std::string>> out;
        for (const auto& s : cg_generators(p.ops, p.ord, parse_strategy(strategy)).generators) {
          std::vector<std::string> row;
          for (const auto& c : s.components) row.push_back(format_bpoly(c, p.ord));
          out.push_back(std::move(row));
        }
        return out;
      },
      py::arg("ops"), py::arg("nvars"), py::arg("strategy") = "general",
      py::arg("order") = "grlex");

  m.def(
      "compare",
      [](const std::vector<std::string>& ops, std::size_t nvars, const std::string& order) {
        auto p = load(ops, nvars, order);
        auto c = compare_methods(p.ops, p.ord);
        py::dict d;
        d["new"] = c.new_method.spoly_count;
        d["ip"] = c.ip_method.spoly_count;
        d["same_ideal"] = c.same_ideal;
        return d;
      },
      py::arg("ops"), py::arg("nvars"), py::arg("order") = "grlex");

  m.def(
      "run",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        auto r = cli::run_command(args, stdin_text);
        return py::make_tuple(r.code, r.out, r.err);
      },
      py::arg("args"), py::arg("stdin_text") = "");
}
