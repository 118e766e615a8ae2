// Python bindings for the ball-geometry, Fock-truncation, group-orbit and
// spectral-membership operations.  Points travel as sequences of complex
// numbers, matrices as numpy arrays, reports as small result classes.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncball/sampling.hpp"
#include "ncball/serialize.hpp"

namespace py = pybind11;
using namespace ncball;

namespace {

Point as_point(const std::vector<Complex>& coords) {
  Vec v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = coords[i];
  return Point(std::move(v));
}

std::vector<Complex> from_point(const Point& p) {
  return {p.coords().data(), p.coords().data() + p.dim()};
}

std::vector<Point> as_points(const std::vector<std::vector<Complex>>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(as_point(p));
  return out;
}

NcPoly as_poly(int n, const std::vector<std::pair<Word, Complex>>& terms) {
  NcPoly p(n);
  for (const auto& [w, c] : terms) p.add_term(w, c);
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "hyperbolic geometry of the complex unit ball and truncated "
            "Fock-space calculus";

  py::class_<MoebiusMap>(m, "MoebiusMap")
      .def(py::init([](const Mat& mat) { return MoebiusMap(mat); }), py::arg("matrix"))
      .def_static("identity", &MoebiusMap::identity, py::arg("n"))
      .def_static("from_unitary", &MoebiusMap::from_unitary, py::arg("u"))
      .def_property_readonly("dim", &MoebiusMap::dim)
      .def_property_readonly("matrix",
                             [](const MoebiusMap& self) { return self.matrix(); })
      .def("form_defect", &MoebiusMap::form_defect)
      .def("apply",
           [](const MoebiusMap& self, const std::vector<Complex>& z) {
             return from_point(apply(self, as_point(z)));
           },
           py::arg("z"))
      .def("inverse", [](const MoebiusMap& self) { return inverse(self); })
      .def("compose",
           [](const MoebiusMap& self, const MoebiusMap& other) {
             return compose(self, other);
           },
           py::arg("other"))
      .def("__repr__", [](const MoebiusMap& self) {
        return "<MoebiusMap dim=" + std::to_string(self.dim()) + ">";
      });

  py::class_<BallFunction>(m, "BallFunction")
      .def_static("linear",
                  [](const std::vector<Complex>& coeffs) {
                    Vec v(static_cast<Eigen::Index>(coeffs.size()));
                    for (std::size_t i = 0; i < coeffs.size(); ++i)
                      v(static_cast<Eigen::Index>(i)) = coeffs[i];
                    return BallFunction::linear(std::move(v));
                  },
                  py::arg("coeffs"))
      .def_static("one", &BallFunction::one, py::arg("n"))
      .def_static("product", &BallFunction::product, py::arg("factors"))
      .def("precompose", &BallFunction::precompose, py::arg("map"))
      .def("scaled", &BallFunction::scaled, py::arg("scalar"))
      .def_property_readonly("dim", &BallFunction::dim)
      .def("__call__",
           [](const BallFunction& self, const std::vector<Complex>& z) {
             return self.evaluate(as_point(z));
           },
           py::arg("z"))
      .def("to_json",
           [](const BallFunction& self) { return ball_function_to_json(self).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return ball_function_from_json(json::parse(text));
      });

  m.def("involution_at",
        [](const std::vector<Complex>& a) { return involution_at(as_point(a)); },
        py::arg("a"));
  m.def("pseudo_distance",
        [](const std::vector<Complex>& z, const std::vector<Complex>& w) {
          return pseudo_distance(as_point(z), as_point(w));
        },
        py::arg("z"), py::arg("w"));
  m.def("extremal_distance",
        [](const std::vector<Complex>& z, const std::vector<Complex>& w) {
          auto r = extremal_distance(as_point(z), as_point(w));
          return py::make_tuple(r.value, r.witness);
        },
        py::arg("z"), py::arg("w"));
  m.def("comparability_factor",
        [](const std::vector<Complex>& a, const std::vector<Complex>& z) {
          return comparability_factor(as_point(a), as_point(z));
        },
        py::arg("a"), py::arg("z"));

  // Fock truncation.
  m.def("creation_matrix",
        [](int j, int n, int d) {
          return creation(j, TruncatedFockBasis(n, d)).matrix();
        },
        py::arg("j"), py::arg("n"), py::arg("d"));
  m.def("op_norm",
        [](int n, int d, const std::vector<std::pair<Word, Complex>>& terms) {
          return op_norm(poly_to_operator(as_poly(n, terms), TruncatedFockBasis(n, d)));
        },
        py::arg("n"), py::arg("d"), py::arg("terms"));
  m.def("coeff_l2",
        [](int n, const std::vector<std::pair<Word, Complex>>& terms) {
          return coeff_l2(as_poly(n, terms));
        },
        py::arg("n"), py::arg("terms"));
  m.def("eval_scalar",
        [](int n, const std::vector<std::pair<Word, Complex>>& terms,
           const std::vector<Complex>& lam) {
          return eval_scalar(as_poly(n, terms), as_point(lam));
        },
        py::arg("n"), py::arg("terms"), py::arg("lam"));
  m.def("popescu_apply",
        [](int n, const std::vector<std::pair<Word, Complex>>& terms,
           const std::vector<Mat>& tuple) {
          return popescu_apply(as_poly(n, terms), tuple);
        },
        py::arg("n"), py::arg("terms"), py::arg("tuple"));
  m.def("row_norm",
        [](const std::vector<Mat>& tuple) { return row_norm(tuple); },
        py::arg("tuple"));

  // Group dynamics.
  py::class_<GroupElement>(m, "GroupElement")
      .def_readonly("word", &GroupElement::word)
      .def_readonly("map", &GroupElement::map)
      .def_readonly("shell", &GroupElement::shell);

  py::class_<EnumerationResult>(m, "EnumerationResult")
      .def_readonly("elements", &EnumerationResult::elements)
      .def_readonly("alphabet", &EnumerationResult::alphabet)
      .def_readonly("collisions", &EnumerationResult::collisions)
      .def_readonly("exhausted", &EnumerationResult::exhausted);

  py::class_<Orbit>(m, "Orbit")
      .def_property_readonly("points",
                             [](const Orbit& self) {
                               std::vector<std::vector<Complex>> out;
                               for (const auto& p : self.points)
                                 out.push_back(from_point(p));
                               return out;
                             })
      .def_readonly("shells", &Orbit::shells)
      .def("max_radius", &Orbit::max_radius);

  m.def("enumerate_elements",
        [](int n, const std::vector<MoebiusMap>& generators, int max_len,
           double dedup_tol) {
          return enumerate_elements(GroupPresentation{n, generators}, max_len, dedup_tol);
        },
        py::arg("n"), py::arg("generators"), py::arg("max_len"),
        py::arg("dedup_tol") = kDedupTol);
  m.def("orbit_of_origin",
        [](const EnumerationResult& e, double dedup_tol) {
          return orbit_of_origin(e.elements, dedup_tol);
        },
        py::arg("enumeration"), py::arg("dedup_tol") = kDedupTol);
  m.def("blaschke_report",
        [](const EnumerationResult& e, double margin) {
          return py::module_::import("json").attr("loads")(
              blaschke_to_json(blaschke_report(e, margin)).dump());
        },
        py::arg("enumeration"), py::arg("margin") = kBlaschkeFitMargin);
  m.def("stabilizer_check",
        [](const MoebiusMap& candidate, const Orbit& orbit, double core_radius,
           double tol) {
          return check_name(stabilizer_check(candidate, orbit, core_radius, tol));
        },
        py::arg("candidate"), py::arg("orbit"), py::arg("core_radius"),
        py::arg("tol") = kDedupTol);
  m.def("default_core_radius", &default_core_radius, py::arg("orbit"));
  m.def("dual_action_eval",
        [](const MoebiusMap& gamma, int n,
           const std::vector<std::pair<Word, Complex>>& terms,
           const std::vector<Complex>& lam) {
          return dual_action_eval(gamma, as_poly(n, terms), as_point(lam));
        },
        py::arg("gamma"), py::arg("n"), py::arg("terms"), py::arg("lam"));

  // Spectral closures.
  py::class_<VanishingProduct>(m, "VanishingProduct")
      .def_readonly("value_at_probe", &VanishingProduct::value_at_probe)
      .def_property_readonly("witness",
                             [](const VanishingProduct& self) { return self.witness; })
      .def("__call__",
           [](const VanishingProduct& self, const std::vector<Complex>& z) {
             return self.evaluate(as_point(z));
           })
      .def("to_json",
           [](const VanishingProduct& self) { return witness_to_json(self).dump(); });

  m.def("vanishing_witness",
        [](const std::vector<std::vector<Complex>>& delta,
           const std::vector<Complex>& z) {
          return vanishing_witness(as_points(delta), as_point(z));
        },
        py::arg("delta"), py::arg("z"));

  py::class_<MembershipVerdict>(m, "MembershipVerdict")
      .def_property_readonly("status",
                             [](const MembershipVerdict& self) {
                               return membership_name(self.status);
                             })
      .def_readonly("witness_value", &MembershipVerdict::witness_value)
      .def_readonly("truncation", &MembershipVerdict::truncation)
      .def_readonly("threshold", &MembershipVerdict::threshold);

  m.def("spectral_membership",
        [](const std::vector<std::vector<Complex>>& delta,
           const std::vector<Complex>& z, double threshold, double in_tol) {
          return spectral_membership(as_points(delta), as_point(z), threshold, in_tol);
        },
        py::arg("delta"), py::arg("z"),
        py::arg("threshold") = kMembershipOutThreshold,
        py::arg("in_tol") = kMembershipInTol);

  py::class_<ErgodicityReport>(m, "ErgodicityReport")
      .def_readonly("invariance_defect", &ErgodicityReport::invariance_defect)
      .def_readonly("constancy_defect", &ErgodicityReport::constancy_defect)
      .def_readonly("implication_holds", &ErgodicityReport::implication_holds)
      .def_readonly("n_elements", &ErgodicityReport::n_elements)
      .def_readonly("n_orbit_points", &ErgodicityReport::n_orbit_points);

  m.def("ergodicity_certificate",
        [](const EnumerationResult& e, int n,
           const std::vector<std::pair<Word, Complex>>& terms, double tol) {
          return ergodicity_certificate(e.elements, as_poly(n, terms), tol);
        },
        py::arg("enumeration"), py::arg("n"), py::arg("terms"), py::arg("tol"));

  m.def("quotient_automorphism_check",
        [](const MoebiusMap& gamma, const std::vector<std::vector<Complex>>& delta,
           double tol) {
          return check_name(quotient_automorphism_check(gamma, as_points(delta), tol));
        },
        py::arg("gamma"), py::arg("delta"), py::arg("tol") = kDedupTol);

  m.def("reduce_dimension",
        [](const std::vector<std::vector<Complex>>& delta, double rank_tol) {
          auto r = reduce_dimension(as_points(delta), rank_tol);
          return py::make_tuple(r.unitary, r.rank);
        },
        py::arg("delta"), py::arg("rank_tol") = 1e-10);

  m.attr("__version__") = "0.1.0";
}
