#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minmod/document.hpp"
#include "minmod/errors.hpp"
#include "minmod/extension.hpp"
#include "minmod/verify.hpp"

namespace py = pybind11;
using namespace minmod;

namespace {

py::object to_fraction(const Rational& x) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_fraction_string(x));
}

std::vector<py::object> fractions(const std::vector<Rational>& values) {
  std::vector<py::object> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(to_fraction(v));
  return out;
}

Rational rational_from(const py::handle& obj) {
  return parse_fraction(py::str(obj).cast<std::string>());
}

KacLabel kac_from(const std::pair<int, int>& rs) { return KacLabel{rs.first, rs.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact modular data of Virasoro minimal models and admissible-level affine sl2";

  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<NotClosedError>(m, "NotClosedError", PyExc_ValueError);

  py::class_<Cyclotomic>(m, "Cyclotomic")
      .def(py::init([](const py::object& value) { return Cyclotomic(rational_from(value)); }),
           py::arg("value"))
      .def_static("root_of_unity", &Cyclotomic::root_of_unity, py::arg("order"),
                  py::arg("exponent"))
      .def_property_readonly("order", &Cyclotomic::order)
      .def("coeffs",
           [](const Cyclotomic& self) {
             py::dict out;
             const auto& c = self.coefficients();
             for (std::size_t k = 0; k < c.size(); ++k) {
               if (c[k] != 0) out[py::int_(k)] = to_fraction(c[k]);
             }
             return out;
           })
      .def("is_zero", &Cyclotomic::is_zero)
      .def("is_one", &Cyclotomic::is_one)
      .def("is_rational", &Cyclotomic::is_rational)
      .def("conjugate", &Cyclotomic::conjugate)
      .def("inverse", &Cyclotomic::inverse)
      .def("__complex__", &Cyclotomic::approx)
      .def("__eq__", [](const Cyclotomic& a, const Cyclotomic& b) { return a == b; })
      .def("__mul__", [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; })
      .def("__add__", [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; })
      .def("__sub__", [](const Cyclotomic& a, const Cyclotomic& b) { return a - b; })
      .def("__neg__", [](const Cyclotomic& a) { return -a; })
      .def("__repr__", [](const Cyclotomic& self) {
        const auto z = self.approx();
        return "Cyclotomic(order=" + std::to_string(self.order()) + ", ~" +
               std::to_string(z.real()) + (z.imag() < 0 ? "-" : "+") +
               std::to_string(std::abs(z.imag())) + "j)";
      });

  m.def("sin_pi", &sin_pi, py::arg("m"), py::arg("n"), "exact sin(pi*m/n)");
  m.def("cos_pi", &cos_pi, py::arg("m"), py::arg("n"), "exact cos(pi*m/n)");

  py::class_<FusionRing>(m, "FusionRing")
      .def_property_readonly("labels", [](const FusionRing& r) { return r.labels; })
      .def_property_readonly("unit", [](const FusionRing& r) { return r.unit; })
      .def_property_readonly("dual", [](const FusionRing& r) { return r.dual; })
      .def_property_readonly("rank", &FusionRing::rank)
      .def("n", [](const FusionRing& r, std::size_t i, std::size_t j, std::size_t k) {
        if (i >= r.rank() || j >= r.rank() || k >= r.rank()) {
          throw py::index_error("fusion index out of range");
        }
        return r.n(i, j, k);
      })
      .def("fuse", [](const FusionRing& r, std::size_t i, std::size_t j) {
        return fuse(r, i, j);
      });

  m.def("verify_axioms", [](const FusionRing& ring) {
    const AxiomReport report = verify_axioms(ring);
    py::dict out;
    for (const AxiomCheck& check : report.checks) {
      out[py::str(check.name)] = py::make_tuple(check.pass, check.counterexample);
    }
    return out;
  });
  m.def("verlinde_eigencheck", &verlinde_eigencheck);

  py::class_<ModularDatum>(m, "ModularDatum")
      .def_property_readonly("ring", [](const ModularDatum& d) { return d.ring; })
      .def_property_readonly("h", [](const ModularDatum& d) { return fractions(d.h); })
      .def_property_readonly("twist_exponents",
                             [](const ModularDatum& d) { return fractions(d.twist_exponent); })
      .def("sratio",
           [](const ModularDatum& d, std::size_t i, std::size_t j) {
             if (i >= d.ring.rank() || j >= d.ring.rank()) {
               throw py::index_error("label index out of range");
             }
             return d.sratio[i][j];
           })
      .def("qdim",
           [](const ModularDatum& d, std::size_t i) {
             if (i >= d.ring.rank()) throw py::index_error("label index out of range");
             return d.qdim[i];
           })
      .def("is_modular", [](const ModularDatum& d) { return is_modular(d); })
      .def("transparent_objects", [](const ModularDatum& d) { return transparent_objects(d); })
      .def("balancing_check", [](const ModularDatum& d) { return balancing_check(d); });

  py::class_<MinimalModel>(m, "MinimalModel")
      .def(py::init<int, int>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &MinimalModel::a)
      .def_property_readonly("b", &MinimalModel::b)
      .def_property_readonly("central_charge",
                             [](const MinimalModel& mdl) { return to_fraction(mdl.central_charge()); })
      .def("labels",
           [](const MinimalModel& mdl) {
             std::vector<std::pair<int, int>> out;
             for (const KacLabel& l : mdl.labels()) out.emplace_back(l.r, l.s);
             return out;
           })
      .def("canonical",
           [](const MinimalModel& mdl, const std::pair<int, int>& rs) {
             const KacLabel c = mdl.canonical(kac_from(rs));
             return std::make_pair(c.r, c.s);
           })
      .def("conformal_weight",
           [](const MinimalModel& mdl, const std::pair<int, int>& rs) {
             return to_fraction(mdl.conformal_weight(kac_from(rs)));
           })
      .def("fusion_coefficient",
           [](const MinimalModel& mdl, const std::pair<int, int>& x,
              const std::pair<int, int>& y, const std::pair<int, int>& z) {
             return mdl.fusion_coefficient(kac_from(x), kac_from(y), kac_from(z));
           })
      .def("sratio", [](const MinimalModel& mdl, const std::pair<int, int>& x,
                        const std::pair<int, int>& y) {
        return mdl.sratio(kac_from(x), kac_from(y));
      });

  m.def("minimal_model", [](int a, int b) { return MinimalModel(a, b); }, py::arg("a"),
        py::arg("b"));
  m.def("modular_datum", [](const MinimalModel& mdl) { return modular_datum(mdl); });
  m.def("subcategory_ca", [](const MinimalModel& mdl) { return subcategory_ca(mdl); });

  py::class_<AdmissibleLevel>(m, "AdmissibleLevel")
      .def_readonly("a", &AdmissibleLevel::a)
      .def_readonly("b", &AdmissibleLevel::b)
      .def_property_readonly("level",
                             [](const AdmissibleLevel& l) { return to_fraction(l.level()); });

  py::class_<AffineCategory>(m, "AffineCategory")
      .def_readonly("level", &AffineCategory::level)
      .def_readonly("datum", &AffineCategory::datum);

  m.def("affine_category", &affine_category, py::arg("a"), py::arg("b"));
  m.def("simple_current_row", &simple_current_row);
  m.def("affine_is_modular", &affine_is_modular, py::arg("a"), py::arg("b"));
  m.def("cg_bound", &cg_bound, py::arg("r"), py::arg("r1"), py::arg("r2"));
  m.def("affine_weight", [](int a, int b, int r) { return to_fraction(affine_weight(a, b, r)); });

  py::class_<BranchingEntry>(m, "BranchingEntry")
      .def_readonly("s", &BranchingEntry::s)
      .def_property_readonly("kac", [](const BranchingEntry& e) {
        return std::make_pair(e.kac.r, e.kac.s);
      });

  py::class_<InducedLabel>(m, "InducedLabel")
      .def_readonly("affine_r", &InducedLabel::affine_r)
      .def_readonly("parity", &InducedLabel::parity);

  py::class_<CosetSetup>(m, "CosetSetup")
      .def(py::init<int, int>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &CosetSetup::a)
      .def_property_readonly("b", &CosetSetup::b)
      .def_property_readonly("base", &CosetSetup::base)
      .def_property_readonly("shifted", &CosetSetup::shifted)
      .def_property_readonly("vir", &CosetSetup::vir);

  m.def("coset_setup", [](int a, int b) { return CosetSetup(a, b); });
  m.def("branching", &branching, py::arg("setup"), py::arg("r"), py::arg("t"));
  m.def("induce", &induce, py::arg("setup"), py::arg("r"));
  m.def("check_locality", &check_locality, py::arg("setup"), py::arg("r"));
  m.def("verify_weight_congruence", [](const CosetSetup& setup) {
    std::vector<std::tuple<int, int, int>> out;
    for (const CongruenceViolation& v : verify_weight_congruence(setup)) {
      out.emplace_back(v.r, v.t, v.s);
    }
    return out;
  });
  m.def("verify_ring_hom", &verify_ring_hom);
  m.def("verify_twist_relation", &verify_twist_relation);

  m.def("document_json", [](const std::string& kind, int a, int b, const ModularDatum& datum) {
    return to_json_string(make_document(kind, a, b, datum));
  });
  m.def("run_verification", [](int amax, int bmax) {
    py::list out;
    for (const CheckResult& c : run_verification(amax, bmax).checks) {
      out.append(py::make_tuple(c.name, c.pass, c.fail, c.first_failure));
    }
    return out;
  });
}
