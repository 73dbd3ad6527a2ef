// starfan: train, evaluate and explore star-shaped set classifiers
// supported on a complete simplicial fan.
//
// Exit codes: 0 success, 2 usage, 3 data error, 4 solver non-convergence.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "starfan/arrangement.hpp"
#include "starfan/datagen.hpp"
#include "starfan/optim.hpp"
#include "starfan/svg.hpp"

using json = nlohmann::json;
using namespace starfan;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitSolver = 4;

Vector parse_vector(const std::string& csv) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    size_t pos = 0;
    double v;
    try {
      v = std::stod(cell, &pos);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad number '" + cell + "' in '" + csv + "'");
    }
    if (pos != cell.size())
      throw Error(Errc::ParseError, "bad number '" + cell + "' in '" + csv + "'");
    vals.push_back(v);
  }
  Vector out(int(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) out[int(i)] = vals[i];
  return out;
}

// Dataset source shared by the evaluating subcommands: a CSV path, or the
// builtin names "line8" (1-D eight-point set, label variant applies)
// and "diagonal" (3-point planar set).
LabeledDataset load_dataset(const std::string& data, const std::string& labels_variant) {
  if (data.empty()) throw Error(Errc::ParseError, "--data is required");
  if (data == "line8") return line_dataset_1d(labels_variant);
  if (data == "diagonal") return diagonal_dataset_2d();
  return read_csv(data);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << text;
}

json fit_to_json(const FitResult& fit) {
  json j;
  j["status"] = fit_status_name(fit.status);
  j["a_star"] = std::vector<double>(fit.a_star.a.data(), fit.a_star.a.data() + fit.a_star.size());
  j["objective"] = fit.objective;
  j["iterations"] = fit.iterations;
  j["grad_norm"] = fit.grad_norm;
  j["degenerate_rays"] = fit.degenerate_rays;
  j["no_positive_mass"] = fit.no_positive_mass;
  return j;
}

json report_to_json(const LossReport& r) {
  return json{{"fp", r.fp}, {"fn", r.fn}, {"err", r.err}};
}

json certificate_to_json(const UniquenessCertificate& c) {
  return json{{"rank_pos", c.rank_pos},
              {"rank_neg", c.rank_neg},
              {"n", c.n},
              {"strictly_concave", c.strictly_concave},
              {"unique_max", c.unique_max}};
}

void emit_json(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text(out_path, text);
}

struct SolverFlags {
  FitOptions opts;
  void attach(CLI::App* cmd) {
    cmd->add_option("--tol", opts.tol, "gradient max-norm convergence tolerance");
    cmd->add_option("--max-iter", opts.max_iter, "iteration cap");
    cmd->add_option("--floor", opts.floor, "positivity floor for the parameters");
    cmd->add_option("--radius", opts.radius, "parameter radius treated as a nonfinite maximum");
  }
};

int run(int argc, char** argv) {
  CLI::App app{"star-shaped set classifiers on a fixed complete simplicial fan"};
  app.require_subcommand(1);

  std::string fan_spec = "kite:2";
  std::string data_path;
  std::string labels_variant = "listed";
  std::string out_path;
  uint64_t seed = 1;

  auto add_shared = [&](CLI::App* cmd, bool with_data) {
    cmd->add_option("--fan", fan_spec, "fan: kite:d | typeb:d | rays2d:<path> | <fan.json>");
    if (with_data)
      cmd->add_option("--data", data_path, "dataset CSV, or builtin 'line8' / 'diagonal'");
    cmd->add_option("--labels-variant", labels_variant, "line8 labels: listed | complemented")
        ->check(CLI::IsMember({"listed", "complemented"}));
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--out", out_path, "output file (stdout for reports if omitted)");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "sample a labeled dataset from a true star");
  std::string a_csv;
  int count = 500;
  double noise = 0.9;
  add_shared(gen, false);
  gen->add_option("--a", a_csv, "true parameter vector (comma separated; default all ones)");
  gen->add_option("--count", count, "number of points")->check(CLI::PositiveNumber);
  gen->add_option("--noise", noise, "label-correctness probability, in (0.5, 1]")
      ->check(CLI::Range(std::nextafter(0.5, 1.0), 1.0));
  gen->callback([&] {
    const Fan fan = fan_by_name(fan_spec);
    GenSpec spec;
    spec.fan_name = fan_spec;
    spec.count = count;
    spec.noise = noise;
    spec.seed = seed;
    spec.a_true = a_csv.empty() ? ParamVector(Vector::Ones(fan.num_rays()).eval())
                                : ParamVector(parse_vector(a_csv));
    const LabeledDataset data = sample_star_dataset(fan, spec);
    if (out_path.empty()) throw Error(Errc::ParseError, "gen requires --out <csv>");
    write_csv(data, out_path);
    int pos = 0;
    for (int y : data.labels) pos += y;
    std::cout << "wrote " << data.size() << " points to " << out_path << " (" << pos
              << " positive, " << data.size() - pos << " negative)\n";
  });

  // train
  auto* train = app.add_subcommand("train", "maximum-likelihood fit at one lambda");
  double lambda = 1.0;
  SolverFlags train_solver;
  add_shared(train, true);
  train->add_option("--lambda", lambda, "rate parameter")->check(CLI::PositiveNumber);
  train_solver.attach(train);
  int train_exit = 0;
  train->callback([&] {
    const Fan fan = fan_by_name(fan_spec);
    const LabeledDataset data = load_dataset(data_path, labels_variant);
    const DataMatrix A = data_matrix(fan, data);
    const FitResult fit = fit_mle(A, data.labels, lambda, train_solver.opts);
    json j;
    j["schema"] = 1;
    j["command"] = "train";
    j["fan"] = fan_spec;
    j["lambda"] = lambda;
    j["fit"] = fit_to_json(fit);
    j["train_loss"] = report_to_json(zero_one_loss(A, data.labels, fit.a_star));
    j["uniqueness"] = certificate_to_json(uniqueness_certificate(A, data.labels));
    emit_json(j, out_path);
    if (fit.status == FitStatus::MaxIterations) train_exit = kExitSolver;
  });

  // eval
  auto* eval = app.add_subcommand("eval", "0/1 loss (and likelihood) of a given parameter");
  std::string eval_a;
  std::string eval_t;
  double eval_lambda = 0.0;
  add_shared(eval, true);
  eval->add_option("--a", eval_a, "parameter vector (comma separated)")->required();
  eval->add_option("--t", eval_t, "translation vector (comma separated)");
  eval->add_option("--lambda", eval_lambda, "also report the log-likelihood at this rate");
  eval->callback([&] {
    const Fan fan = fan_by_name(fan_spec);
    const LabeledDataset data = load_dataset(data_path, labels_variant);
    const ParamVector a(parse_vector(eval_a));
    json j;
    j["schema"] = 1;
    j["command"] = "eval";
    j["fan"] = fan_spec;
    if (eval_t.empty()) {
      const DataMatrix A = data_matrix(fan, data);
      const LossReport r = zero_one_loss(A, data.labels, a);
      j["loss"] = report_to_json(r);
      j["per_point"] = r.per_point;
      if (eval_lambda > 0.0)
        j["log_likelihood"] = log_likelihood(A, data.labels, a, eval_lambda);
    } else {
      const Vector t = parse_vector(eval_t);
      const LossReport r = translational_zero_one_loss(fan, data, a, t);
      j["loss"] = report_to_json(r);
      j["per_point"] = r.per_point;
      if (eval_lambda > 0.0)
        j["log_likelihood"] = translational_log_likelihood(fan, data, a, t, eval_lambda);
    }
    emit_json(j, out_path);
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "maximum-likelihood fits over a lambda grid");
  std::string lambdas_csv;
  double lmin = 0.1, lmax = 10.0;
  int lsteps = 20;
  std::string sweep_svg;
  SolverFlags sweep_solver;
  add_shared(sweep, true);
  sweep->add_option("--lambdas", lambdas_csv, "explicit comma-separated lambda list");
  sweep->add_option("--lambda-min", lmin, "log-grid start")->check(CLI::PositiveNumber);
  sweep->add_option("--lambda-max", lmax, "log-grid end")->check(CLI::PositiveNumber);
  sweep->add_option("--lambda-steps", lsteps, "log-grid size")->check(CLI::PositiveNumber);
  sweep->add_option("--svg", sweep_svg, "optional accuracy-vs-lambda chart");
  sweep_solver.attach(sweep);
  sweep->callback([&] {
    const Fan fan = fan_by_name(fan_spec);
    const LabeledDataset data = load_dataset(data_path, labels_variant);
    const DataMatrix A = data_matrix(fan, data);
    std::vector<double> lambdas;
    if (!lambdas_csv.empty()) {
      const Vector v = parse_vector(lambdas_csv);
      lambdas.assign(v.data(), v.data() + v.size());
    } else {
      for (int k = 0; k < lsteps; ++k) {
        const double u = lsteps > 1 ? double(k) / double(lsteps - 1) : 0.0;
        lambdas.push_back(lmin * std::pow(lmax / lmin, u));
      }
    }
    const auto entries = lambda_sweep(A, data.labels, lambdas, sweep_solver.opts);
    json j;
    j["schema"] = 1;
    j["command"] = "sweep";
    j["fan"] = fan_spec;
    j["entries"] = json::array();
    double best_acc = -1.0, best_lambda = 0.0;
    std::vector<double> xs, ys;
    for (const auto& e : entries) {
      json je;
      je["lambda"] = e.lambda;
      if (e.error.empty()) {
        je["fit"] = fit_to_json(e.fit);
        je["loss"] = report_to_json(e.report);
        const double acc = 1.0 - double(e.report.err) / double(data.size());
        je["accuracy"] = acc;
        if (acc > best_acc) {
          best_acc = acc;
          best_lambda = e.lambda;
        }
        xs.push_back(e.lambda);
        ys.push_back(acc);
      } else {
        je["error"] = e.error;
      }
      j["entries"].push_back(je);
    }
    j["best"] = json{{"lambda", best_lambda}, {"accuracy", best_acc}};
    emit_json(j, out_path);
    if (!sweep_svg.empty())
      write_text(sweep_svg, render_series_chart(xs, ys, "lambda", "accuracy"));
  });

  // chambers
  auto* chambers = app.add_subcommand("chambers", "enumerate half-open chambers in a box");
  double box_lo = 1e-6, box_hi = 1.2;
  add_shared(chambers, true);
  chambers->add_option("--box-lo", box_lo, "lower box bound (per coordinate, > 0)");
  chambers->add_option("--box-hi", box_hi, "upper box bound (per coordinate)");
  chambers->callback([&] {
    const Fan fan = fan_by_name(fan_spec);
    const LabeledDataset data = load_dataset(data_path, labels_variant);
    const DataMatrix A = data_matrix(fan, data);
    Box box;
    box.lo = Vector::Constant(A.n, box_lo);
    box.hi = Vector::Constant(A.n, box_hi);
    const auto list = enumerate_chambers(A, data.labels, box);
    std::ostringstream csv;
    csv << "signs,";
    for (int j = 0; j < A.n; ++j) csv << "a" << (j + 1) << ",";
    csv << "fp,fn,err,margin\n";
    char buf[40];
    for (const auto& ch : list) {
      for (int s : ch.sign_vector) csv << s;
      csv << ",";
      for (int j = 0; j < A.n; ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", ch.witness.a[j]);
        csv << buf << ",";
      }
      std::snprintf(buf, sizeof buf, "%.17g", ch.margin);
      csv << ch.report.fp << "," << ch.report.fn << "," << ch.report.err << "," << buf << "\n";
    }
    if (out_path.empty())
      std::cout << csv.str();
    else
      write_text(out_path, csv.str());
    std::cout << list.size() << " chambers; err histogram:";
    for (const auto& [err, n] : level_set_summary(list)) std::cout << " " << err << ":" << n;
    std::cout << "\n";
  });

  // landscape
  auto* landscape = app.add_subcommand("landscape", "grid scan of a 2-D loss landscape");
  std::string mode = "err-param";
  std::string land_a;
  double land_lambda = 1.0;
  GridSpec gspec;
  gspec.x0 = gspec.y0 = 0.05;
  gspec.step = 0.05;
  gspec.nx = gspec.ny = 40;
  std::string land_svg;
  add_shared(landscape, true);
  landscape->add_option("--mode", mode, "err-param | lambda-likelihood | err-translation")
      ->check(CLI::IsMember({"err-param", "lambda-likelihood", "err-translation"}));
  landscape->add_option("--a", land_a, "fixed parameter vector (translation mode)");
  landscape->add_option("--lambda", land_lambda, "rate (likelihood mode)");
  landscape->add_option("--x0", gspec.x0, "grid origin x");
  landscape->add_option("--y0", gspec.y0, "grid origin y");
  landscape->add_option("--step", gspec.step, "grid step")->check(CLI::PositiveNumber);
  landscape->add_option("--nx", gspec.nx, "grid columns")->check(CLI::PositiveNumber);
  landscape->add_option("--ny", gspec.ny, "grid rows")->check(CLI::PositiveNumber);
  landscape->add_option("--svg", land_svg, "optional SVG heatmap path");
  landscape->callback([&] {
    const Fan fan = fan_by_name(fan_spec);
    const LabeledDataset data = load_dataset(data_path, labels_variant);
    std::ostringstream csv;
    char buf[40];
    if (mode == "err-translation") {
      if (land_a.empty())
        throw Error(Errc::ParseError, "translation mode requires --a");
      const ParamVector a(parse_vector(land_a));
      const TranslationalGrid grid = translational_grid(fan, data, a, gspec);
      for (int iy = 0; iy < gspec.ny; ++iy) {
        for (int ix = 0; ix < gspec.nx; ++ix)
          csv << grid.err[iy][ix] << (ix + 1 < gspec.nx ? "," : "");
        csv << "\n";
      }
      std::cout << "zero components (4-neighbor proxy): " << count_zero_components(grid)
                << "\n";
      if (!land_svg.empty())
        write_text(land_svg, render_translation_heatmap(fan, data, a, grid));
    } else {
      const DataMatrix A = data_matrix(fan, data);
      if (A.n != 2)
        throw Error(Errc::DimensionError, "parameter grids need a fan with exactly 2 rays");
      std::vector<double> xs, ys;
      for (int iy = 0; iy < gspec.ny; ++iy) {
        for (int ix = 0; ix < gspec.nx; ++ix) {
          Vector a(2);
          a[0] = gspec.x0 + ix * gspec.step;
          a[1] = gspec.y0 + iy * gspec.step;
          if (mode == "err-param") {
            csv << zero_one_loss(A, data.labels, ParamVector(a)).err;
          } else {
            double L;
            try {
              L = log_likelihood(A, data.labels, ParamVector(a), land_lambda);
            } catch (const Error&) {
              L = std::numeric_limits<double>::quiet_NaN();
            }
            std::snprintf(buf, sizeof buf, "%.17g", L);
            csv << buf;
          }
          csv << (ix + 1 < gspec.nx ? "," : "");
        }
        csv << "\n";
      }
      if (!land_svg.empty()) write_text(land_svg, "");
    }
    if (out_path.empty())
      std::cout << csv.str();
    else
      write_text(out_path, csv.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return train_exit;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::LabelError:
      case Errc::DimensionError:
      case Errc::TooManyPoints:
      case Errc::InfeasibleBox:
        return kExitData;
      default:
        return kExitData;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
