#include <pybind11/pybind11.h>
#include <pybind11/eigen.h>
#include <pybind11/stl.h>

#include "subcocycle/cocycle.hpp"
#include "subcocycle/error.hpp"
#include "subcocycle/iet.hpp"
#include "subcocycle/lyapunov.hpp"
#include "subcocycle/mahler.hpp"
#include "subcocycle/number_theory.hpp"
#include "subcocycle/serialize.hpp"
#include "subcocycle/verdict.hpp"

namespace py = pybind11;
using namespace subcocycle;

namespace {

py::object to_python(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return out;
    }
  }
}

py::int_ to_python(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.str())); }

py::list to_python(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.dimension(); ++j) row.append(to_python(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list to_python(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_python(c));
  return out;
}

IntPolynomial from_coefficients(const std::vector<long long>& c) {
  std::vector<BigInt> big(c.begin(), c.end());
  return IntPolynomial(std::move(big));
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

McOptions options(const std::string& sampler, unsigned threads) {
  McOptions o;
  o.threads = threads;
  if (sampler == "pseudorandom")
    o.sampler = Sampler::pseudorandom;
  else if (sampler != "lattice")
    throw std::invalid_argument("sampler must be 'lattice' or 'pseudorandom'");
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral cocycle of substitutions: Lyapunov exponents, Mahler measures, Rauzy loops";
  m.attr("__version__") = SUBCOCYCLE_VERSION;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<UndecidedError>(m, "UndecidedError", PyExc_RuntimeError);
  py::register_exception<NotImplementedError>(m, "UnimplementedError", PyExc_NotImplementedError);

  py::class_<Substitution>(m, "Substitution")
      .def(py::init([](const std::string& text) { return parse_substitution(text); }), py::arg("text"))
      .def_property_readonly("alphabet_size", &Substitution::alphabet_size)
      .def_property_readonly("images", &Substitution::images)
      .def("apply", &Substitution::apply, py::arg("word"))
      .def("matrix", [](const Substitution& s) { return to_python(substitution_matrix(s)); })
      .def("is_primitive", [](const Substitution& s) { return is_primitive(s); })
      .def("is_constant_length", &is_constant_length)
      .def("power", &power, py::arg("n"))
      .def("__eq__", [](const Substitution& a, const Substitution& b) { return a == b; })
      .def("__str__", [](const Substitution& s) { return to_string(s); })
      .def("__repr__", [](const Substitution& s) { return "Substitution('" + to_string(s) + "')"; });

  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("family_zeta_m", &family_zeta_m, py::arg("m"));
  m.def("family_zeta_n", &family_zeta_n, py::arg("n"));

  m.def(
      "cocycle_matrix",
      [](const Substitution& s) { return to_python(serialize(build_cocycle_matrix(s))); },
      py::arg("substitution"), "Cocycle matrix as {d, entries[b][c] = [[frequency, coefficient], ...]}");
  m.def(
      "evaluate_cocycle",
      [](const Substitution& s, const std::vector<double>& xi) { return evaluate(build_cocycle_matrix(s), xi); },
      py::arg("substitution"), py::arg("xi"));

  m.def(
      "char_poly", [](const std::vector<std::vector<long long>>& rows) { return to_python(char_poly(from_rows(rows))); },
      py::arg("matrix"), "Coefficients of det(xI - A), constant term first");
  m.def(
      "roots",
      [](const std::vector<long long>& c) { return to_python(serialize(roots(from_coefficients(c)))); },
      py::arg("coefficients"));
  m.def(
      "is_irreducible", [](const std::vector<long long>& c) { return is_irreducible_over_q(from_coefficients(c)); },
      py::arg("coefficients"));
  m.def(
      "classify_number",
      [](const std::vector<long long>& c) { return to_python(serialize(classify_number(from_coefficients(c)))); },
      py::arg("coefficients"));
  m.def(
      "perron_eigenvalue",
      [](const std::vector<std::vector<long long>>& rows) { return perron_data(from_rows(rows)).eigenvalue; },
      py::arg("matrix"));
  m.def(
      "mahler_jensen", [](const std::vector<long long>& c) { return mahler_jensen(from_coefficients(c)); },
      py::arg("coefficients"));
  m.def(
      "mahler_quadrature",
      [](const std::vector<long long>& c, std::size_t grid) {
        return mahler_quadrature(to_trig_poly(from_coefficients(c)), grid).value;
      },
      py::arg("coefficients"), py::arg("grid") = 4096);

  m.def(
      "mc_exponent",
      [](const Substitution& s, unsigned k, std::uint64_t samples, std::uint64_t seed, const std::string& sampler,
         unsigned threads) {
        LyapunovEstimate e;
        {
          py::gil_scoped_release release;
          e = mc_exponent(s, k, samples, seed, options(sampler, threads));
        }
        return to_python(serialize(e));
      },
      py::arg("substitution"), py::arg("k") = 1, py::arg("samples") = 50000, py::arg("seed") = 1,
      py::arg("sampler") = "lattice", py::arg("threads") = 1);
  m.def(
      "inf_exponent",
      [](const Substitution& s, unsigned k_max, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
        ExponentReport r;
        {
          py::gil_scoped_release release;
          r = inf_exponent(s, k_max, samples, seed, options("lattice", threads));
        }
        return to_python(serialize(r));
      },
      py::arg("substitution"), py::arg("k_max") = 4, py::arg("samples") = 50000, py::arg("seed") = 1,
      py::arg("threads") = 1);
  m.def(
      "entrywise_bound", [](const Substitution& s, unsigned k) { return entrywise_bound(s, k).value; },
      py::arg("substitution"), py::arg("k"));
  m.def(
      "pointwise_exponent",
      [](const Substitution& s, double omega, unsigned n) {
        return pointwise_exponent(s, diagonal_point(s.alphabet_size(), omega), n).value;
      },
      py::arg("substitution"), py::arg("omega"), py::arg("n"));

  m.def(
      "verdict",
      [](const Substitution& s, std::optional<double> bound, unsigned k_max, std::uint64_t samples,
         std::uint64_t seed, bool assert_aperiodic, unsigned theorem) {
        Evidence evidence;
        if (bound)
          evidence = AnalyticBound{"user", *bound};
        else
          evidence = inf_exponent(s, k_max, samples, seed);
        const Verdict v = theorem == 2 ? check_theorem2(s, evidence, assert_aperiodic)
                                       : check_theorem1(s, evidence, assert_aperiodic);
        return to_python(serialize(v));
      },
      py::arg("substitution"), py::arg("bound") = py::none(), py::arg("k_max") = 4, py::arg("samples") = 50000,
      py::arg("seed") = 1, py::arg("assert_aperiodic") = false, py::arg("theorem") = 1);
  m.def("example51_bound", &example51_bound);
  m.def(
      "family_bound_lemma52",
      [](unsigned d, std::uint64_t n1, std::uint64_t n2) { return to_python(serialize(family_bound_lemma52(d, n1, n2))); },
      py::arg("d"), py::arg("norm1_sq"), py::arg("norm2_sq"));

  m.def(
      "rauzy_loop",
      [](const std::string& loop) { return to_python(serialize(loop_substitution(parse_loop_spec(loop)))); },
      py::arg("loop"), "Composes a loop such as 'base=4321 moves=b,a,a,b,a*n,b,a,a,a n=1'");
  m.def(
      "rauzy_move",
      [](const std::string& pi, const std::string& move) {
        if (move != "a" && move != "b") throw std::invalid_argument("move must be 'a' or 'b'");
        return to_string(rauzy_move_permutation(parse_permutation(pi), move == "a" ? RauzyMove::a : RauzyMove::b));
      },
      py::arg("permutation"), py::arg("move"));
}
