#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcount/enumerate.hpp"
#include "qcount/expansions.hpp"
#include "qcount/maps.hpp"
#include "qcount/odometer.hpp"
#include "qcount/question_mark.hpp"
#include "qcount/rational.hpp"
#include "qcount/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> python int, via decimal strings
template <>
struct type_caster<qcount::Integer> {
  PYBIND11_TYPE_CASTER(qcount::Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = qcount::Integer(py::str(src).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const qcount::Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace qcount;

std::vector<Integer> head_of(const BcfExpansion& e) { return e.head(); }
std::vector<Integer> digits_of(const CfExpansion& e) { return e.digits(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic for continued fractions, odometers and the question mark";

  py::class_<Rational>(m, "Rational")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return Rational::parse(text); }))
      .def(py::init([](const Integer& n) { return Rational(n); }))
      .def(py::init([](const Integer& num, const Integer& den) { return Rational(num, den); }))
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& x) { return "Rational('" + x.str() + "')"; })
      .def("__float__", &Rational::approx)
      .def("__hash__", [](const Rational& x) { return py::hash(py::str(x.str())); })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self);

  py::class_<Dyadic>(m, "Dyadic")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return Dyadic::parse(text); }))
      .def(py::init([](const Integer& j, unsigned long k) { return Dyadic(j, k); }))
      .def_property_readonly("numerator", &Dyadic::numerator)
      .def_property_readonly("exponent", &Dyadic::exponent)
      .def("to_rational", &Dyadic::to_rational)
      .def("bits", &Dyadic::bits_str)
      .def("__str__", &Dyadic::str)
      .def("__repr__", [](const Dyadic& d) { return "Dyadic('" + d.str() + "')"; })
      .def("__hash__", [](const Dyadic& d) { return py::hash(py::str(d.str())); })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self);

  m.def("int_floor", &int_floor);
  m.def("pow2_floor_exp", &pow2_floor_exp);

  m.def("cf_expand", [](const Rational& x) { return digits_of(cf_expand(x)); });
  m.def("cf_eval", [](std::vector<Integer> d) { return cf_eval(CfExpansion(std::move(d))); });
  m.def("bcf_expand", [](const Rational& x) { return head_of(bcf_expand(x)); });
  m.def("bcf_eval", [](std::vector<Integer> h) { return bcf_eval(BcfExpansion(std::move(h))); });
  m.def("cf_to_bcf",
        [](std::vector<Integer> d) { return head_of(cf_to_bcf(CfExpansion(std::move(d)))); });
  m.def("bcf_to_cf",
        [](std::vector<Integer> h) { return digits_of(bcf_to_cf(BcfExpansion(std::move(h)))); });
  m.def("binary_expand", [](const Dyadic& x) { return binary_expand(x).bits(); });
  m.def("word_value", [](const std::string& bits) { return word_value(BinaryWord(bits)); });
  m.def("binary_prefix",
        [](const Rational& x, std::size_t depth) { return binary_prefix(x, depth); });
  m.def("blocks_encode",
        [](const std::string& bits) { return blocks_encode(BinaryWord(bits)).blocks(); });
  m.def("blocks_decode", [](std::vector<std::size_t> ks) {
    return blocks_decode(BlockSequence(std::move(ks))).bits();
  });
  m.def("shift_h",
        [](std::vector<std::size_t> ks) { return head_of(shift_h(BlockSequence(std::move(ks)))); });

  m.def("newman_f", &newman_f);
  m.def("newman_t", &newman_t);
  m.def("renyi", &renyi);
  m.def("gauss", &gauss);
  m.def("doubling", &doubling);
  m.def("linear_renyi", &linear_renyi);
  m.def("backward_farey", &backward_farey);
  m.def("odometer_d2", &odometer_d2);
  m.def("hitting_time_farey", &hitting_time_farey);
  m.def("hitting_time_doubling", &hitting_time_doubling);
  m.def("renyi_branch", &renyi_branch);
  m.def("orbit", [](const std::string& map, const Rational& x, std::size_t steps) {
    return orbit(parse_map_id(map), x, steps);
  });

  m.def("odometer_step",
        [](const std::string& bits) { return odometer_step(BitSequence(bits)).bits(); });
  m.def("odometer_block_step", [](std::vector<std::size_t> ks) {
    return odometer_block_step(BlockSequence(std::move(ks))).blocks();
  });
  m.def("odometric_substitution", [](std::vector<Integer> h) {
    return head_of(odometric_substitution(BcfExpansion(std::move(h))));
  });

  m.def("qmark_mediant", &qmark_mediant);
  m.def("qmark_denjoy", &qmark_denjoy);
  m.def("qmark_bcf", &qmark_bcf);
  m.def("qmark_bcf_series", &qmark_bcf_series);
  m.def("qmark", [](const Rational& x, const std::string& algo) {
    return qmark(x, parse_qmark_algo(algo));
  }, py::arg("x"), py::arg("algo") = "bcf");
  m.def("qmark_inverse", &qmark_inverse);

  m.def("enum_positive", &enum_positive);
  m.def("enum_unit", &enum_unit);
  m.def("enum_dyadic", &enum_dyadic);
  m.def("calkin_wilf", &calkin_wilf);
  m.def("index_of_unit", &index_of_unit);

  m.def("run_suite", [](const std::string& suite, unsigned long bound) {
    py::list out;
    for (const auto& r : run_suite(parse_suite(suite), bound)) {
      py::dict row;
      row["suite"] = r.suite;
      row["checked"] = r.checked;
      row["ok"] = r.ok;
      row["counterexample"] = r.counterexample;
      out.append(row);
    }
    return out;
  });
}
