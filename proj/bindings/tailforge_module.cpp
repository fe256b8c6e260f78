// Python bindings for the tailforge core: entropy functionals, perturbation
// oracles, tail bounds, matrix ensembles, and the Monte Carlo tail reports.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "tailforge/delta.hpp"
#include "tailforge/entropy.hpp"
#include "tailforge/errors.hpp"
#include "tailforge/montecarlo.hpp"
#include "tailforge/mp_law.hpp"
#include "tailforge/product_space.hpp"
#include "tailforge/random_tables.hpp"
#include "tailforge/rng.hpp"
#include "tailforge/serialization.hpp"
#include "tailforge/spectra.hpp"

namespace py = pybind11;
using namespace tailforge;

namespace {

CoordinateSpace make_coordinate_space(const py::list& points, std::vector<double> weights) {
  std::vector<CoordinatePoint> parsed;
  parsed.reserve(points.size());
  for (const auto& item : points) {
    if (py::isinstance<py::float_>(item) || py::isinstance<py::int_>(item)) {
      parsed.push_back(CoordinatePoint::of(item.cast<double>()));
    } else {
      parsed.push_back(CoordinatePoint::of(item.cast<std::vector<double>>()));
    }
  }
  return CoordinateSpace(std::move(parsed), std::move(weights));
}

double log_sobolev_gap_list(const FunctionTable& z, double lambda,
                            const std::vector<FunctionTable>& zk_tables) {
  return log_sobolev_gap(z, lambda, std::span<const FunctionTable>(zk_tables));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entropy-method tail bound toolkit: exact entropy functionals on finite "
            "product spaces, perturbation oracles, and Monte Carlo eigenvalue tails.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<SeedTag>(m, "SeedTag")
      .def(py::init<std::uint64_t, std::uint64_t, std::uint64_t>(), py::arg("base") = 0,
           py::arg("stream") = 0, py::arg("index") = 0)
      .def_readwrite("base", &SeedTag::base)
      .def_readwrite("stream", &SeedTag::stream)
      .def_readwrite("index", &SeedTag::index)
      .def("__repr__", &SeedTag::to_string);

  py::class_<CoordinateSpace>(m, "CoordinateSpace")
      .def(py::init(&make_coordinate_space), py::arg("points"), py::arg("weights"))
      .def_static("uniform", &CoordinateSpace::uniform, py::arg("points"))
      .def_property_readonly("size", &CoordinateSpace::size)
      .def_property_readonly("weights", &CoordinateSpace::weights);

  py::class_<ProductSpace>(m, "ProductSpace")
      .def(py::init<std::vector<CoordinateSpace>, std::uint64_t>(), py::arg("coordinates"),
           py::arg("point_cap") = ProductSpace::kDefaultPointCap)
      .def_property_readonly("num_coordinates", &ProductSpace::num_coordinates)
      .def_property_readonly("total_points", &ProductSpace::total_points)
      .def("weight", &ProductSpace::weight, py::arg("flat_index"));

  py::class_<FunctionTable>(m, "FunctionTable")
      .def(py::init<ProductSpace, std::vector<double>, bool>(), py::arg("space"),
           py::arg("values"), py::arg("positive"))
      .def_static("constant", &FunctionTable::constant, py::arg("space"), py::arg("value"))
      .def_property_readonly("space", &FunctionTable::space)
      .def_property_readonly("values", &FunctionTable::values)
      .def_property_readonly("positive", &FunctionTable::positive)
      .def("expectation", &FunctionTable::expectation);

  py::enum_<TailSide>(m, "TailSide")
      .value("RIGHT", TailSide::kRight)
      .value("LEFT", TailSide::kLeft);

  m.def("entropy", &entropy, py::arg("g"));
  m.def("partial_entropy", &partial_entropy, py::arg("g"), py::arg("k"),
        "Partial entropy over coordinate k (0-based); a table over the remaining coordinates.");
  m.def("duality_value", &duality_value, py::arg("g"), py::arg("t"));
  m.def("variation_value", &variation_value, py::arg("g"), py::arg("c"));
  m.def("tensorization_gap", &tensorization_gap, py::arg("g"));
  m.def("log_sobolev_gap", &log_sobolev_gap_list, py::arg("z"), py::arg("lambda_"),
        py::arg("zk_tables"));
  m.def("herbst_mgf_check", &herbst_mgf_check, py::arg("z"), py::arg("lambda_"),
        py::arg("sup_delta"), py::arg("side"));

  py::enum_<PerturbationChoice>(m, "PerturbationChoice")
      .value("MAURER_INF", PerturbationChoice::kMaurerInf)
      .value("LEFT_SUP", PerturbationChoice::kLeftSup);

  py::class_<DeltaReport>(m, "DeltaReport")
      .def_readonly("choice", &DeltaReport::choice)
      .def_readonly("perturbed", &DeltaReport::perturbed)
      .def_readonly("delta_sq", &DeltaReport::delta_sq)
      .def_readonly("sup_norm", &DeltaReport::sup_norm);

  m.def("perturbed_values", &perturbed_values, py::arg("z"), py::arg("k"), py::arg("choice"));
  m.def("delta_squared", &delta_squared, py::arg("z"), py::arg("choice"));
  m.def("tail_bound", &tail_bound, py::arg("t"), py::arg("sup_norm"), py::arg("side"));
  m.def("maurer_eig_bounds", &maurer_eig_bounds, py::arg("k"), py::arg("t"),
        "Returns the (right, left) eigenvalue tail bounds for a bounded symmetric ensemble.");

  py::enum_<EntryDistribution>(m, "EntryDistribution")
      .value("RADEMACHER", EntryDistribution::kRademacher)
      .value("UNIFORM_REAL", EntryDistribution::kUniformReal)
      .value("COMPLEX_RADEMACHER", EntryDistribution::kComplexRademacher)
      .value("COMPLEX_DISK", EntryDistribution::kComplexDisk);

  py::enum_<MatrixShape>(m, "MatrixShape")
      .value("SYMMETRIC", MatrixShape::kSymmetric)
      .value("RECTANGULAR", MatrixShape::kRectangular);

  py::class_<MatrixSample>(m, "MatrixSample")
      .def_readonly("shape", &MatrixSample::shape)
      .def_readonly("entries", &MatrixSample::entries)
      .def_readonly("seed_tag", &MatrixSample::seed_tag);

  py::enum_<SpectrumScaling>(m, "SpectrumScaling")
      .value("COVARIANCE", SpectrumScaling::kCovariance)
      .value("UNNORMALIZED", SpectrumScaling::kUnnormalized);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &Spectrum::eigenvalues)
      .def_readonly("scaling", &Spectrum::scaling)
      .def("lambda_", &Spectrum::lambda, py::arg("k"), "k-th largest eigenvalue (1-based)");

  m.def("sample_rectangular", &sample_rectangular, py::arg("n"), py::arg("cols"), py::arg("dist"),
        py::arg("seed_tag"));
  m.def("sample_symmetric", &sample_symmetric, py::arg("n"), py::arg("dist"), py::arg("seed_tag"));
  m.def("sample_hermitian", &sample_hermitian, py::arg("n"), py::arg("dist"), py::arg("seed_tag"));
  m.def("covariance_spectrum", &covariance_spectrum, py::arg("sample"));
  m.def("symmetric_spectrum", &symmetric_spectrum, py::arg("sample"));
  m.def("column_perturbation_extreme", &column_perturbation_extreme, py::arg("sample"),
        py::arg("t0"), py::arg("k"), py::arg("choice"), py::arg("candidates"),
        py::arg("candidate_cap") = kDefaultCandidateCap);

  py::class_<ColumnDeltaRow>(m, "ColumnDeltaRow")
      .def_readonly("column", &ColumnDeltaRow::column)
      .def_readonly("z", &ColumnDeltaRow::z)
      .def_readonly("z_inf", &ColumnDeltaRow::z_inf)
      .def_readonly("z_sup", &ColumnDeltaRow::z_sup);

  py::class_<ColumnDeltaViolation>(m, "ColumnDeltaViolation")
      .def_readonly("column", &ColumnDeltaViolation::column)
      .def_readonly("description", &ColumnDeltaViolation::description);

  py::class_<ColumnDeltaReport>(m, "ColumnDeltaReport")
      .def_readonly("k", &ColumnDeltaReport::k)
      .def_readonly("n", &ColumnDeltaReport::n)
      .def_readonly("cols", &ColumnDeltaReport::cols)
      .def_readonly("step_bound", &ColumnDeltaReport::step_bound)
      .def_readonly("delta_bound", &ColumnDeltaReport::delta_bound)
      .def_readonly("delta_inf_sq", &ColumnDeltaReport::delta_inf_sq)
      .def_readonly("delta_sup_sq", &ColumnDeltaReport::delta_sup_sq)
      .def_readonly("rows", &ColumnDeltaReport::rows)
      .def_readonly("violations", &ColumnDeltaReport::violations)
      .def_readonly("all_ok", &ColumnDeltaReport::all_ok);

  m.def("column_delta_check", &column_delta_check, py::arg("sample"), py::arg("k"),
        py::arg("candidates"), py::arg("tolerance") = 1e-9,
        py::arg("candidate_cap") = kDefaultCandidateCap);
  m.def("rademacher_columns", &rademacher_columns, py::arg("n"));

  m.def("mp_support", &mp_support, py::arg("c"));
  m.def("mp_density", &mp_density, py::arg("x"), py::arg("c"));
  m.def("mp_cdf", &mp_cdf, py::arg("x"), py::arg("c"));
  m.def("mp_distance", &mp_distance, py::arg("spectra"), py::arg("c"));

  py::enum_<EnsembleKind>(m, "EnsembleKind")
      .value("COVARIANCE", EnsembleKind::kCovariance)
      .value("SYMMETRIC", EnsembleKind::kSymmetric);

  py::enum_<Centering>(m, "Centering")
      .value("PILOT_MEAN", Centering::kPilotMean)
      .value("POOLED_MEAN", Centering::kPooledMean);

  py::class_<SimulationConfig>(m, "SimulationConfig")
      .def(py::init<>())
      .def_readwrite("ensemble", &SimulationConfig::ensemble)
      .def_readwrite("n", &SimulationConfig::n)
      .def_readwrite("cols", &SimulationConfig::cols)
      .def_readwrite("k", &SimulationConfig::k)
      .def_readwrite("dist", &SimulationConfig::dist)
      .def_readwrite("samples", &SimulationConfig::samples)
      .def_readwrite("pilot_samples", &SimulationConfig::pilot_samples)
      .def_readwrite("t_grid", &SimulationConfig::t_grid)
      .def_readwrite("base_seed", &SimulationConfig::base_seed)
      .def_readwrite("centering", &SimulationConfig::centering)
      .def("validate", &SimulationConfig::validate);

  py::class_<CenterEstimate>(m, "CenterEstimate")
      .def_readonly("mean", &CenterEstimate::mean)
      .def_readonly("std_error", &CenterEstimate::std_error);

  py::class_<TailRow>(m, "TailRow")
      .def_readonly("t", &TailRow::t)
      .def_readonly("emp_right", &TailRow::emp_right)
      .def_readonly("emp_left", &TailRow::emp_left)
      .def_readonly("ci_half_right", &TailRow::ci_half_right)
      .def_readonly("ci_half_left", &TailRow::ci_half_left)
      .def_readonly("bound_right", &TailRow::bound_right)
      .def_readonly("bound_left", &TailRow::bound_left)
      .def_readonly("pass_right", &TailRow::pass_right)
      .def_readonly("pass_left", &TailRow::pass_left);

  py::class_<TailReport>(m, "TailReport")
      .def_readonly("config", &TailReport::config)
      .def_readonly("center", &TailReport::center)
      .def_readonly("rows", &TailReport::rows);

  py::class_<CompareResult>(m, "CompareResult")
      .def_readonly("ok", &CompareResult::ok)
      .def_readonly("summary", &CompareResult::summary);

  m.def("clopper_pearson", &clopper_pearson, py::arg("successes"), py::arg("trials"),
        py::arg("confidence") = 0.99);
  m.def("theoretical_bounds", &theoretical_bounds, py::arg("config"), py::arg("t"));
  m.def("estimate_center", &estimate_center, py::arg("config"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("tail_estimate", &tail_estimate, py::arg("config"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("compare_report", &compare_report, py::arg("report"));

  m.def("table_to_json", [](const FunctionTable& table) { return table_to_json(table).dump(2); },
        py::arg("table"));
  m.def("table_from_json",
        [](const std::string& text) { return table_from_json(nlohmann::json::parse(text)); },
        py::arg("text"));
  m.def("tail_report_to_csv", &tail_report_to_csv, py::arg("report"));
  m.def("tail_report_to_json",
        [](const TailReport& report) { return tail_report_to_json(report).dump(2); },
        py::arg("report"));
}
