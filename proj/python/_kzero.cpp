#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kzero/certificate.hpp"
#include "kzero/class_group.hpp"
#include "kzero/errors.hpp"
#include "kzero/monoid_ring.hpp"
#include "kzero/quartic.hpp"
#include "kzero/steinitz.hpp"
#include "kzero/weil.hpp"

namespace py = pybind11;
using namespace kzero;

// Python int <-> Integer and fractions.Fraction <-> Rational, through decimal text.
namespace pybind11::detail {

template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>(), 10);
    return true;
  }
  static handle cast(const Integer& n, return_value_policy, handle) {
    return py::int_(py::str(n.get_str())).release();
  }
};

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    if (!PyLong_Check(src.ptr()) && !py::isinstance(src, fraction)) return false;
    value = parse_rational(py::str(src).cast<std::string>());
    return true;
  }
  static handle cast(const Rational& q, return_value_policy, handle) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::str(q.get_str())).release();
  }
};

}  // namespace pybind11::detail

namespace {

std::vector<Integer> coeffs(const IntPoly& f) { return {f.coefficients().begin(), f.coefficients().end()}; }

py::tuple element(const QuadElement& z) { return py::make_tuple(z.a(), z.b()); }

py::dict class_group_info(std::int64_t d) {
  auto O = maximal_order(d);
  auto g = class_group(O);
  py::dict out;
  out["discriminant"] = g.discriminant;
  out["class_number"] = g.class_number;
  out["invariants"] = g.invariants;
  out["structure"] = g.structure();
  std::vector<std::string> gens;
  for (const auto& P : g.generators) gens.push_back(P.to_string());
  out["generators"] = gens;
  return out;
}

py::object principal_generator(std::int64_t d, const Integer& a, const Integer& b) {
  auto r = is_principal(FracIdeal(maximal_order(d), a, b));
  if (!r.principal) return py::none();
  return element(*r.generator);
}

WeilQuartic weil_quartic(const std::vector<Integer>& c, const Integer& p) { return WeilQuartic(p, IntPoly(c)); }

py::dict witness(std::int64_t d, const Integer& a, const Integer& b) {
  auto O = maximal_order(d);
  IdealClass c = class_of(FracIdeal(O, a, b));
  AVRing A = AVRing::basis(tensor_av(ModuleClass::free(O, 1), "A"));
  AVRing B = AVRing::basis(tensor_av(ModuleClass(1, c), "A"));
  auto w = zero_divisor_witness(A + B, A - B);
  py::dict out;
  out["accepted"] = w.accepted;
  out["reason"] = w.reason;
  out["x"] = w.x.to_string();
  out["y"] = w.y.to_string();
  out["product"] = w.product.to_string();
  return out;
}

py::object verify_text(const std::string& text, unsigned bound) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("document", e.what());
  }
  std::string report = run_certificate(parse_certificate_input(doc), bound).to_json().dump();
  return py::module_::import("json").attr("loads")(report);
}

}  // namespace

PYBIND11_MODULE(_kzero, m) {
  m.doc() = "Exact quadratic-order, Weil-polynomial and monoid-ring computations";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvalidEigenvalue>(m, "InvalidEigenvalue", domain.ptr());
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParameterMismatch>(m, "ParameterMismatch", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DeductionRefused>(m, "DeductionRefused", PyExc_RuntimeError);

  m.attr("DEFAULT_STABILITY_BOUND") = kDefaultStabilityBound;

  m.def("class_group", &class_group_info, py::arg("d"));
  m.def("fundamental_unit", [](std::int64_t d) { return element(fundamental_unit(maximal_order(d))); }, py::arg("d"),
        "(x, y) with x + y sqrt(d) the fundamental unit");
  m.def("principal_generator", &principal_generator, py::arg("d"), py::arg("a"), py::arg("b"),
        "generator (x, y) of the ideal (a, b + w), or None when it is not principal");

  m.def(
      "frobenius_charpoly",
      [](const Integer& p, const Rational& a, const Rational& b, std::int64_t d) {
        return coeffs(frobenius_charpoly(QuadElement(d, a, b), p).poly());
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("d"), "coefficients c0..c4 of the Weil quartic");
  m.def(
      "is_irreducible", [](const std::vector<Integer>& c) { return is_irreducible_monic(IntPoly(c)); },
      py::arg("coeffs"));
  m.def(
      "is_ordinary", [](const std::vector<Integer>& c, const Integer& p) { return is_ordinary(weil_quartic(c, p)); },
      py::arg("coeffs"), py::arg("p"));
  m.def(
      "endomorphism_stability",
      [](const std::vector<Integer>& c, const Integer& p, unsigned bound) {
        return endomorphism_stability(weil_quartic(c, p), bound).to_string();
      },
      py::arg("coeffs"), py::arg("p"), py::arg("bound") = kDefaultStabilityBound);

  m.def("zero_divisor_witness", &witness, py::arg("d"), py::arg("a"), py::arg("b"),
        "([A] + [B])([A] - [B]) with [A] = T(O) and [B] = T(I), I = (a, b + w)");
  m.def("verify_text", &verify_text, py::arg("text"), py::arg("bound") = kDefaultStabilityBound);
}
