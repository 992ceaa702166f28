#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxplus/io.hpp"
#include "maxplus/oracle.hpp"
#include "maxplus/svg.hpp"

// Command-line front end: `solve` runs the location solvers and prints a
// JSON report, `eig` exposes the spectral core directly. Reports go to
// stdout (or --out), diagnostics go to stderr. Exit codes: 0 on success,
// 2 on validation errors, 3 when an oracle limit is exceeded.

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw maxplus::error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw maxplus::error("cannot write file: " + path);
  out << content;
}

struct solve_options {
  std::string input;
  std::string out_path;
  std::string svg_path;
  bool csv = false;
  bool constrained = false;
  bool oracle = false;
  std::size_t samples = 5;
  double grid_step = 0.25;
};

int run_solve(const solve_options& opt) {
  const std::string text = read_file(opt.input);
  const maxplus::location_instance inst =
      opt.csv ? maxplus::parse_instance_csv(text, opt.constrained)
              : maxplus::parse_instance_json(text);
  if (opt.constrained && !inst.caps)
    throw maxplus::missing_caps_error("--constrained requires caps in the instance");
  if (!opt.svg_path.empty() && inst.dim() != 2)
    throw maxplus::error("--svg requires a 2D instance");

  const maxplus::solve_report report = opt.constrained
                                           ? maxplus::solve_constrained(inst)
                                           : maxplus::solve_unconstrained(inst);
  const auto samples = maxplus::sample_family(report.family, opt.samples);

  maxplus::report_doc doc;
  doc.lambda = report.family.lambda;
  if (report.parts) doc.lambda0 = report.parts->lambda0;
  for (std::size_t i = 0; i < report.family.dim(); ++i) {
    doc.p.push_back(report.family.p[i].value());
    doc.q.push_back(report.family.q[i].value());
  }
  doc.exact = report.exact;
  for (const auto& s : samples) {
    maxplus::sample_row row{s.alpha, s.x, maxplus::objective(inst, s.x), std::nullopt};
    if (inst.caps) row.feasible = maxplus::is_feasible(inst, s.x);
    doc.samples.push_back(std::move(row));
  }
  if (opt.oracle) {
    const auto grid = maxplus::default_grid(inst, opt.grid_step);
    const auto best = maxplus::grid_minimize(inst, grid, opt.constrained);
    const double reported = opt.constrained ? doc.samples.front().objective
                                            : report.family.lambda;
    doc.oracle = std::make_pair(best.value, std::abs(best.value - reported));
  }

  const std::string rendered = maxplus::write_report(doc);
  if (opt.out_path.empty())
    std::cout << rendered;
  else
    write_file(opt.out_path, rendered);
  if (!opt.svg_path.empty()) write_file(opt.svg_path, maxplus::render_svg(inst, report));
  return 0;
}

struct eig_options {
  std::string matrix;
  bool oracle = false;
};

int run_eig(const eig_options& opt) {
  const maxplus::mat a = maxplus::parse_matrix_json(read_file(opt.matrix));
  if (!a.is_square()) throw maxplus::error("matrix must be square");
  if (const auto pair = maxplus::unreachable_pair(a)) {
    std::cerr << "reducible: no path " << pair->first + 1 << "->" << pair->second + 1
              << "\n";
    return 2;
  }
  const maxplus::eigen_result eig = maxplus::eigenbasis(a);
  maxplus::eig_doc doc;
  doc.lambda = eig.lambda.value();
  for (const auto& column : eig.basis) {
    std::vector<double> row;
    for (std::size_t i = 0; i < column.size(); ++i) row.push_back(column[i].value());
    doc.basis.push_back(std::move(row));
  }
  if (opt.oracle) {
    const double mcm = maxplus::max_cycle_mean(a).value();
    doc.oracle = std::make_pair(mcm, std::abs(mcm - doc.lambda));
  }
  std::cout << maxplus::write_eig_report(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-plus algebra and Chebyshev minimax location toolkit"};
  app.require_subcommand(1);

  solve_options sopt;
  CLI::App* solve = app.add_subcommand("solve", "solve a location instance");
  solve->add_option("--input", sopt.input, "instance file (JSON, or CSV with --csv)")
      ->required();
  solve->add_flag("--csv", sopt.csv, "parse the input as CSV rows x1,...,xn,w[,d]");
  solve->add_flag("--constrained", sopt.constrained, "apply the distance caps");
  solve->add_option("--samples", sopt.samples, "number of uniform family samples")
      ->check(CLI::PositiveNumber);
  solve->add_option("--svg", sopt.svg_path, "write an SVG drawing (2D only)");
  solve->add_flag("--oracle", sopt.oracle, "cross-check against the grid oracle");
  solve->add_option("--grid-step", sopt.grid_step, "oracle grid step")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", sopt.out_path, "write the report here instead of stdout");

  eig_options eopt;
  CLI::App* eig = app.add_subcommand("eig", "eigenvalue and eigenbasis of a matrix");
  eig->add_option("--matrix", eopt.matrix, "matrix file (JSON, null is the zero element)")
      ->required();
  eig->add_flag("--oracle", eopt.oracle, "cross-check against the cycle-mean oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(sopt);
    return run_eig(eopt);
  } catch (const maxplus::oracle_limit_error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
