#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "maxplus/linalg.hpp"
#include "maxplus/location.hpp"

// Independent brute-force verifiers. These deliberately avoid the library's
// production paths: the cycle-mean oracle enumerates simple cycles instead
// of evaluating the trace formula, and the grid oracle minimizes the raw
// objective pointwise instead of using the closed form.

namespace maxplus {

inline constexpr std::size_t cycle_oracle_limit = 8;
inline constexpr std::size_t grid_point_limit = 10'000'000;

namespace detail {

struct cycle_search {
  const mat& a;
  std::size_t start = 0;
  std::vector<bool> on_path;
  double best = -std::numeric_limits<double>::infinity();
  bool found = false;

  explicit cycle_search(const mat& m) : a(m), on_path(m.rows(), false) {}

  // Simple cycles whose smallest vertex is `start`; this visits each cycle
  // exactly once across all starts.
  void extend(std::size_t u, std::size_t depth, double weight) {
    for (std::size_t v = start; v < a.rows(); ++v) {
      if (a(u, v).is_zero()) continue;
      const double w = weight + a(u, v).value();
      if (v == start) {
        best = std::max(best, w / static_cast<double>(depth));
        found = true;
      } else if (!on_path[v]) {
        on_path[v] = true;
        extend(v, depth + 1, w);
        on_path[v] = false;
      }
    }
  }
};

}  // namespace detail

// Maximum over all directed cycles of (cycle weight) / (cycle length),
// by exhaustive enumeration of simple cycles.
inline scalar max_cycle_mean(const mat& a) {
  if (!a.is_square()) throw not_square_error("max_cycle_mean: matrix must be square");
  if (a.rows() > cycle_oracle_limit)
    throw oracle_limit_error("max_cycle_mean: matrix too large for the cycle oracle");
  detail::cycle_search search(a);
  for (std::size_t s = 0; s < a.rows(); ++s) {
    search.start = s;
    search.on_path[s] = true;
    search.extend(s, 1, 0.0);
    search.on_path[s] = false;
  }
  if (!search.found) throw no_finite_cycle_error("max_cycle_mean: the digraph is acyclic");
  return scalar(search.best);
}

struct grid_spec {
  std::vector<double> lower, upper;  // per-coordinate bounds
  double step;

  grid_spec(std::vector<double> lo, std::vector<double> hi, double h)
      : lower(std::move(lo)), upper(std::move(hi)), step(h) {
    if (lower.size() != upper.size() || lower.empty())
      throw dimension_error("grid_spec: bounds must be nonempty and equal length");
    if (!(step > 0.0) || !std::isfinite(step))
      throw value_error("grid_spec: step must be a positive real");
    std::size_t total = 1;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) || lower[i] > upper[i])
        throw value_error("grid_spec: bounds must be finite with lower <= upper");
      const std::size_t count = axis_count(i);
      if (count > grid_point_limit / total)
        throw oracle_limit_error("grid_spec: grid exceeds the point limit");
      total *= count;
    }
  }

  std::size_t dim() const noexcept { return lower.size(); }

  std::size_t axis_count(std::size_t i) const {
    return static_cast<std::size_t>(
               std::floor((upper[i] - lower[i]) / step + 1e-9)) + 1;
  }

  std::size_t point_count() const {
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim(); ++i) total *= axis_count(i);
    return total;
  }
};

// Bounding box of the demand points, expanded on each side by the largest
// addend magnitude plus the largest cap magnitude. Guaranteed to contain
// the optimum.
inline grid_spec default_grid(const location_instance& inst, double step) {
  double pad = 0.0;
  for (double w : inst.weights) pad = std::max(pad, std::abs(w));
  if (inst.caps) {
    double dmax = 0.0;
    for (double d : *inst.caps) dmax = std::max(dmax, std::abs(d));
    pad += dmax;
  }
  std::vector<double> lo(inst.dim()), hi(inst.dim());
  for (std::size_t i = 0; i < inst.dim(); ++i) {
    lo[i] = inst.points[0][i];
    hi[i] = inst.points[0][i];
    for (std::size_t k = 1; k < inst.count(); ++k) {
      lo[i] = std::min(lo[i], inst.points[k][i]);
      hi[i] = std::max(hi[i], inst.points[k][i]);
    }
    lo[i] -= pad;
    hi[i] += pad;
  }
  return grid_spec(std::move(lo), std::move(hi), step);
}

struct grid_result {
  double value;
  std::vector<std::vector<double>> argmins;  // all grid points within 1e-9 of value
};

// Exhaustive minimization of the objective over the grid, in lexicographic
// point order. With `constrained` set, infeasible points are skipped and an
// entirely infeasible grid is an error.
inline grid_result grid_minimize(const location_instance& inst, const grid_spec& grid,
                                 bool constrained) {
  if (grid.dim() != inst.dim()) throw dimension_error("grid_minimize: dimension mismatch");
  if (constrained && !inst.caps)
    throw missing_caps_error("grid_minimize: constrained search needs caps");
  const std::size_t n = grid.dim();
  std::vector<std::size_t> counts(n);
  for (std::size_t i = 0; i < n; ++i) counts[i] = grid.axis_count(i);

  grid_result out{std::numeric_limits<double>::infinity(), {}};
  std::vector<std::size_t> index(n, 0);
  std::vector<double> x(n);
  bool any_feasible = false;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i)
      x[i] = grid.lower[i] + static_cast<double>(index[i]) * grid.step;
    if (!constrained || is_feasible(inst, x)) {
      any_feasible = true;
      const double v = objective(inst, x);
      if (v < out.value - 1e-9) {
        out.value = v;
        out.argmins.clear();
        out.argmins.push_back(x);
      } else if (v <= out.value + 1e-9) {
        if (v < out.value) out.value = v;
        out.argmins.push_back(x);
      }
    }
    std::size_t axis = n;
    while (axis > 0) {
      --axis;
      if (++index[axis] < counts[axis]) break;
      index[axis] = 0;
      if (axis == 0) {
        if (constrained && !any_feasible)
          throw empty_feasible_grid_error("grid_minimize: no feasible grid point");
        // Final sweep: keep only argmins within tolerance of the settled minimum.
        std::erase_if(out.argmins, [&](const std::vector<double>& p) {
          return objective(inst, p) > out.value + 1e-9;
        });
        return out;
      }
    }
  }
}

}  // namespace maxplus
