#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starfan/arrangement.hpp"
#include "starfan/datagen.hpp"
#include "starfan/optim.hpp"

namespace py = pybind11;
using namespace starfan;

PYBIND11_MODULE(_core, m) {
  m.doc() = "star-shaped set classifiers on complete simplicial fans";

  py::register_exception<Error>(m, "StarfanError");

  py::class_<Fan>(m, "Fan")
      .def_property_readonly("dim", &Fan::dim)
      .def_property_readonly("num_rays", &Fan::num_rays)
      .def_property_readonly("num_cones", &Fan::num_cones)
      .def_property_readonly("name", &Fan::name)
      .def("ray", &Fan::ray)
      .def("cone", &Fan::cone)
      .def("coords", [](const Fan& f, const Vector& x) {
        const CoefficientVector c = f.coords(x);
        return py::make_tuple(c.entries, c.support, c.cone_id);
      });

  m.def("kite_fan", &kite_fan, py::arg("d"));
  m.def("type_b_fan", &type_b_fan, py::arg("d"), py::arg("max_dim") = 6);
  m.def("fan_by_name", &fan_by_name, py::arg("spec"));
  m.def("read_fan_json", &read_fan_json);
  m.def("write_fan_json", &write_fan_json);

  py::class_<ParamVector>(m, "ParamVector")
      .def(py::init<Vector>())
      .def_readonly("a", &ParamVector::a)
      .def("degenerate_indices", &ParamVector::degenerate_indices);

  m.def("evaluate", &evaluate, py::arg("fan"), py::arg("a"), py::arg("x"));
  m.def("classify", &classify, py::arg("fan"), py::arg("a"), py::arg("x"));
  m.def("star_vertices", &star_vertices);
  m.def("shatter_params", &shatter_params, py::arg("fan"), py::arg("labels"),
        py::arg("eps") = 0.5);
  m.def("translation_membership", &translation_membership);

  py::class_<LabeledDataset>(m, "LabeledDataset")
      .def(py::init<>())
      .def_readwrite("points", &LabeledDataset::points)
      .def_readwrite("labels", &LabeledDataset::labels)
      .def("__len__", &LabeledDataset::size);

  py::class_<DataMatrix>(m, "DataMatrix")
      .def("dense", &DataMatrix::dense)
      .def("__len__", &DataMatrix::size)
      .def_readonly("n", &DataMatrix::n);

  py::class_<LossReport>(m, "LossReport")
      .def_readonly("fp", &LossReport::fp)
      .def_readonly("fn", &LossReport::fn)
      .def_readonly("err", &LossReport::err)
      .def_readonly("per_point", &LossReport::per_point);

  m.def("data_matrix", &data_matrix);
  m.def("zero_one_loss", &zero_one_loss);
  m.def("log_likelihood", &log_likelihood);
  m.def("log_likelihood_grad", &log_likelihood_grad);
  m.def("translational_zero_one_loss", &translational_zero_one_loss);

  py::class_<FitOptions>(m, "FitOptions")
      .def(py::init<>())
      .def_readwrite("tol", &FitOptions::tol)
      .def_readwrite("max_iter", &FitOptions::max_iter)
      .def_readwrite("floor", &FitOptions::floor)
      .def_readwrite("radius", &FitOptions::radius);

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("a_star", &FitResult::a_star)
      .def_readonly("objective", &FitResult::objective)
      .def_readonly("iterations", &FitResult::iterations)
      .def_readonly("grad_norm", &FitResult::grad_norm)
      .def_readonly("degenerate_rays", &FitResult::degenerate_rays)
      .def_property_readonly("status",
                             [](const FitResult& r) { return fit_status_name(r.status); });

  m.def("fit_mle", &fit_mle, py::arg("A"), py::arg("labels"), py::arg("lambda"),
        py::arg("opts") = FitOptions{}, py::arg("warm_start") = Vector());

  py::class_<UniquenessCertificate>(m, "UniquenessCertificate")
      .def_readonly("rank_pos", &UniquenessCertificate::rank_pos)
      .def_readonly("rank_neg", &UniquenessCertificate::rank_neg)
      .def_readonly("strictly_concave", &UniquenessCertificate::strictly_concave)
      .def_readonly("unique_max", &UniquenessCertificate::unique_max);
  m.def("uniqueness_certificate", &uniqueness_certificate);

  py::class_<SweepEntry>(m, "SweepEntry")
      .def_readonly("lambda_", &SweepEntry::lambda)
      .def_readonly("fit", &SweepEntry::fit)
      .def_readonly("report", &SweepEntry::report)
      .def_readonly("error", &SweepEntry::error);
  m.def("lambda_sweep", &lambda_sweep, py::arg("A"), py::arg("labels"), py::arg("lambdas"),
        py::arg("opts") = FitOptions{});

  py::class_<Box>(m, "Box")
      .def(py::init<>())
      .def_readwrite("lo", &Box::lo)
      .def_readwrite("hi", &Box::hi);

  py::class_<Chamber>(m, "Chamber")
      .def_readonly("sign_vector", &Chamber::sign_vector)
      .def_readonly("witness", &Chamber::witness)
      .def_readonly("report", &Chamber::report)
      .def_readonly("margin", &Chamber::margin);
  m.def("enumerate_chambers", &enumerate_chambers, py::arg("A"), py::arg("labels"),
        py::arg("box"), py::arg("max_points") = 20, py::arg("strict_eps") = 1e-9);
  m.def("level_set_summary", &level_set_summary);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("x0", &GridSpec::x0)
      .def_readwrite("y0", &GridSpec::y0)
      .def_readwrite("step", &GridSpec::step)
      .def_readwrite("nx", &GridSpec::nx)
      .def_readwrite("ny", &GridSpec::ny);

  py::class_<TranslationalGrid>(m, "TranslationalGrid")
      .def_readonly("err", &TranslationalGrid::err)
      .def_readonly("signature", &TranslationalGrid::signature);
  m.def("translational_grid", &translational_grid);
  m.def("count_zero_components", &count_zero_components);

  py::class_<GenSpec>(m, "GenSpec")
      .def(py::init<>())
      .def_readwrite("fan_name", &GenSpec::fan_name)
      .def_readwrite("a_true", &GenSpec::a_true)
      .def_readwrite("count", &GenSpec::count)
      .def_readwrite("noise", &GenSpec::noise)
      .def_readwrite("seed", &GenSpec::seed);
  m.def("sample_star_dataset", &sample_star_dataset);
  m.def("read_csv", &read_csv);
  m.def("write_csv", &write_csv);
  m.def("line_dataset_1d", &line_dataset_1d, py::arg("variant") = "listed");
  m.def("diagonal_dataset_2d", &diagonal_dataset_2d);
}
