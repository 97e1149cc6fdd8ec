#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "salem/analysis.hpp"
#include "salem/ifs.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace salem;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Permutation-modified Salem functions over weighted digit systems";

  py::register_exception<Error>(m, "SalemError");

  py::class_<SalemSystem>(m, "SalemSystem")
      .def_readonly("q", &SalemSystem::q)
      .def_readonly("p", &SalemSystem::p)
      .def_readonly("beta", &SalemSystem::beta)
      .def("max_p", &SalemSystem::max_p)
      .def("min_p", &SalemSystem::min_p)
      .def("__repr__", [](const SalemSystem& s) {
        return "SalemSystem(q=" + std::to_string(s.q) + ")";
      });

  py::class_<DigitPermutation>(m, "DigitPermutation")
      .def_readonly("map", &DigitPermutation::map)
      .def("is_identity", &DigitPermutation::is_identity)
      .def("is_reversal", &DigitPermutation::is_reversal)
      .def("__call__", &DigitPermutation::operator());

  py::class_<DigitString>(m, "DigitString")
      .def_readonly("prefix", &DigitString::prefix)
      .def_readonly("period", &DigitString::period)
      .def_readonly("canonical", &DigitString::canonical)
      .def("digit_at", &DigitString::digit_at)
      .def("has_period", &DigitString::has_period);

  py::class_<Cylinder>(m, "Cylinder")
      .def(py::init<std::vector<int>>(), "base"_a)
      .def_readonly("base", &Cylinder::base);

  py::class_<CylinderBounds>(m, "CylinderBounds")
      .def_readonly("inf", &CylinderBounds::inf)
      .def_readonly("sup", &CylinderBounds::sup)
      .def_readonly("length", &CylinderBounds::length);

  py::class_<ModifiedSalem>(m, "ModifiedSalem")
      .def_readonly("system", &ModifiedSalem::system)
      .def_readonly("theta", &ModifiedSalem::theta);

  py::class_<JumpReport>(m, "JumpReport")
      .def_readonly("x0", &JumpReport::x0)
      .def_readonly("left_limit", &JumpReport::left_limit)
      .def_readonly("right_limit", &JumpReport::right_limit)
      .def_readonly("jump", &JumpReport::jump);

  py::class_<IncrementResult>(m, "IncrementResult")
      .def_readonly("mu", &IncrementResult::mu)
      .def_readonly("length", &IncrementResult::length)
      .def_readonly("ratio", &IncrementResult::ratio);

  py::class_<FrequencyTable>(m, "FrequencyTable")
      .def_readonly("counts", &FrequencyTable::counts)
      .def_readonly("r", &FrequencyTable::r)
      .def_readonly("freqs", &FrequencyTable::freqs);

  py::class_<MoranResult>(m, "MoranResult")
      .def_readonly("digit_set", &MoranResult::digit_set)
      .def_readonly("alpha", &MoranResult::alpha)
      .def_readonly("residual", &MoranResult::residual);

  py::class_<DimensionBounds>(m, "DimensionBounds")
      .def_readonly("a", &DimensionBounds::a)
      .def_readonly("b", &DimensionBounds::b)
      .def_readonly("alpha1", &DimensionBounds::alpha1)
      .def_readonly("alpha2", &DimensionBounds::alpha2)
      .def_readonly("lo", &DimensionBounds::lo)
      .def_readonly("hi", &DimensionBounds::hi);

  py::class_<IntegralResult>(m, "IntegralResult")
      .def_readonly("value", &IntegralResult::value)
      .def_readonly("numerator", &IntegralResult::numerator)
      .def_readonly("denominator", &IntegralResult::denominator);

  py::enum_<FixedSetKind>(m, "FixedSetKind")
      .value("Empty", FixedSetKind::Empty)
      .value("Singleton", FixedSetKind::Singleton)
      .value("Interval", FixedSetKind::Interval)
      .value("Fractal", FixedSetKind::Fractal);

  py::class_<FixedSetClass>(m, "FixedSetClass")
      .def_readonly("kind", &FixedSetClass::kind)
      .def_readonly("fixed_digits", &FixedSetClass::fixed_digits)
      .def_readonly("point", &FixedSetClass::point)
      .def_readonly("dimension", &FixedSetClass::dimension);

  py::class_<MonotonicityWitness>(m, "MonotonicityWitness")
      .def_readonly("x1", &MonotonicityWitness::x1)
      .def_readonly("x2", &MonotonicityWitness::x2)
      .def_readonly("f1", &MonotonicityWitness::f1)
      .def_readonly("f2", &MonotonicityWitness::f2)
      .def_readonly("rank", &MonotonicityWitness::rank);

  py::class_<AffinePair>(m, "AffinePair")
      .def_readonly("digit", &AffinePair::digit)
      .def_readonly("x_scale", &AffinePair::x_scale)
      .def_readonly("x_offset", &AffinePair::x_offset)
      .def_readonly("y_scale", &AffinePair::y_scale)
      .def_readonly("y_offset", &AffinePair::y_offset);

  py::class_<GraphPoint>(m, "GraphPoint")
      .def(py::init<double, double>(), "x"_a, "y"_a)
      .def_readonly("x", &GraphPoint::x)
      .def_readonly("y", &GraphPoint::y);

  py::class_<GraphCloud>(m, "GraphCloud")
      .def_property_readonly("points",
                             [](const GraphCloud& c) {
                               std::vector<std::pair<double, double>> pts;
                               pts.reserve(c.points.size());
                               for (const auto& p : c.points)
                                 pts.emplace_back(p.x, p.y);
                               return pts;
                             })
      .def("__len__", [](const GraphCloud& c) { return c.points.size(); });

  py::class_<SelfAffinityReport>(m, "SelfAffinityReport")
      .def_readonly("max_deviation", &SelfAffinityReport::max_deviation)
      .def_readonly("failure_count", &SelfAffinityReport::failure_count)
      .def_readonly("checks", &SelfAffinityReport::checks);

  py::class_<CoverReport>(m, "CoverReport")
      .def_readonly("L1", &CoverReport::L1)
      .def_readonly("rank", &CoverReport::rank)
      .def_readonly("total_area", &CoverReport::total_area);

  py::class_<BoxCountReport>(m, "BoxCountReport")
      .def_readonly("levels", &BoxCountReport::levels)
      .def_readonly("counts", &BoxCountReport::counts)
      .def_readonly("slope", &BoxCountReport::slope);

  m.def("validate_system", &validate_system, "q"_a, "p"_a,
        "Build a digit system from q weights summing to 1");
  m.def("make_permutation", &make_permutation, "map"_a);
  m.def("identity_permutation", &identity_permutation, "q"_a);
  m.def("reversal_permutation", &reversal_permutation, "q"_a);
  m.def("make_modified_salem", &make_modified_salem, "system"_a, "theta"_a);
  m.def("make_digit_string", &make_digit_string, "system"_a, "prefix"_a,
        "period"_a = std::vector<int>{});
  m.def("default_depth", &default_depth, "system"_a);
  m.def("encode", &encode, "system"_a, "x"_a, "depth"_a);
  m.def("decode", &decode, "system"_a, "digits"_a);
  m.def("canonicalize", &salem::canonicalize, "system"_a, "digits"_a);
  m.def("shift", &salem::shift, "system"_a, "digits"_a, "n"_a);
  m.def("truncate", &salem::truncate, "system"_a, "digits"_a, "n"_a);
  m.def("cylinder_bounds", &cylinder_bounds, "system"_a, "cylinder"_a);

  m.def("apply_permutation", &apply_permutation, "f"_a, "digits"_a);
  m.def("eval_on_digits", &eval_on_digits, "f"_a, "digits"_a);
  m.def("eval_f", py::overload_cast<const ModifiedSalem&, double, int>(&eval_f),
        "f"_a, "x"_a, "depth"_a);
  m.def("eval_f", py::overload_cast<const ModifiedSalem&, double>(&eval_f),
        "f"_a, "x"_a);
  m.def("classic_salem", &classic_salem, "system"_a, "qary_digits"_a);
  m.def("functional_eq_residual", &functional_eq_residual, "f"_a, "digits"_a,
        "n"_a, "depth"_a);
  m.def("one_sided_limits", &one_sided_limits, "f"_a, "rational"_a);

  m.def("constant_tail_value", &constant_tail_value, "system"_a, "digit"_a);
  m.def("increment_on_cylinder", &increment_on_cylinder, "f"_a, "cylinder"_a);
  m.def("derivative_ratio_sequence", &derivative_ratio_sequence, "f"_a,
        "digits"_a, "max_rank"_a);
  m.def("singularity_rate", &singularity_rate, "f"_a);
  m.def("digit_frequencies", &digit_frequencies, "system"_a, "digits"_a, "r"_a);
  m.def("integral_closed_form", &integral_closed_form, "f"_a);
  m.def("integral_riemann", &integral_riemann, "f"_a, "rank"_a);
  m.def("moran_dimension", &moran_dimension, "system"_a, "digit_set"_a);
  m.def("fixed_point_set", &fixed_point_set, "f"_a);
  m.def("graph_dimension_bounds", &graph_dimension_bounds, "f"_a);
  m.def("monotonicity_witness", &monotonicity_witness, "f"_a, "search_rank"_a);
  m.def("sample_digits", &sample_digits, "system"_a, "length"_a, "seed"_a);

  m.def("ifs_maps", &ifs_maps, "f"_a);
  m.def("attractor_deterministic", &attractor_deterministic, "f"_a, "depth"_a);
  m.def("attractor_chaos", &attractor_chaos, "f"_a, "n"_a, "seed"_a);
  m.def("cloud_from_points",
        [](const std::vector<std::pair<double, double>>& pts) {
          std::vector<GraphPoint> v;
          v.reserve(pts.size());
          for (const auto& [x, y] : pts) v.push_back(GraphPoint{x, y});
          return cloud_from_points(std::move(v));
        },
        "points"_a);
  m.def("verify_self_affinity", &verify_self_affinity, "f"_a, "cloud"_a,
        "tol"_a);
  m.def("cover_area", &cover_area, "f"_a, "rank"_a);
  m.def("box_count", &box_count, "cloud"_a, "levels"_a);
}
