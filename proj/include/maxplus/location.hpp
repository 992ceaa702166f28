#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "maxplus/spectral.hpp"

// Minimax single-facility location under the Chebyshev metric, with one
// additive constant per demand point and optional per-point distance caps.
//
// The closed form works on two envelope vectors,
//
//     p_i = max_k (r_{ik} + w_k),     q_i = min_k (r_{ik} - w_k),
//
// giving the optimum lambda = max_i (p_i - q_i) / 2 and the solution family
//
//     x_i(alpha) = alpha_i (p_i - lambda) + (1 - alpha_i) (q_i + lambda),
//
// one alpha per coordinate in [0, 1]. Distance caps are folded in by
// normalizing the objective and taking envelopes with the constraint
// vectors; the combined optimum is 0 exactly when the caps admit an exact
// solution, and positive values measure the best compromise.
//
// Every solve also reruns the computation through the tropical and spectral
// routes (the conjugate product (q⁻ p)^{1/2} and the eigenvalue of the
// bordered (n+1)-matrix) and reports all three values, so transcription
// bugs in any one path surface as a disagreement.

namespace maxplus {

inline constexpr double feasibility_tolerance = 1e-9;

struct location_instance {
  std::vector<std::vector<double>> points;   // m rows of n coordinates
  std::vector<double> weights;               // m addends
  std::optional<std::vector<double>> caps;   // m distance caps

  location_instance(std::vector<std::vector<double>> pts,
                    std::vector<double> w = {},
                    std::optional<std::vector<double>> d = std::nullopt)
      : points(std::move(pts)), weights(std::move(w)), caps(std::move(d)) {
    if (points.empty()) throw dimension_error("instance: needs at least one point");
    const std::size_t n = points.front().size();
    if (n == 0) throw dimension_error("instance: points need at least one coordinate");
    for (const auto& r : points) {
      if (r.size() != n) throw dimension_error("instance: ragged point rows");
      for (double c : r)
        if (!std::isfinite(c)) throw value_error("instance: coordinates must be finite");
    }
    if (weights.empty()) weights.assign(points.size(), 0.0);
    if (weights.size() != points.size())
      throw dimension_error("instance: weights length must match point count");
    for (double w0 : weights)
      if (!std::isfinite(w0)) throw value_error("instance: weights must be finite");
    if (caps) {
      if (caps->size() != points.size())
        throw dimension_error("instance: caps length must match point count");
      for (double d0 : *caps)
        if (!std::isfinite(d0)) throw value_error("instance: caps must be finite");
    }
  }

  std::size_t count() const noexcept { return points.size(); }
  std::size_t dim() const noexcept { return points.front().size(); }
};

inline double chebyshev(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw dimension_error("chebyshev: length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// max_i (distance to point i + addend i).
inline double objective(const location_instance& inst, std::span<const double> x) {
  if (x.size() != inst.dim()) throw dimension_error("objective: dimension mismatch");
  double v = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < inst.count(); ++i)
    v = std::max(v, chebyshev(inst.points[i], x) + inst.weights[i]);
  return v;
}

inline bool is_feasible(const location_instance& inst, std::span<const double> x) {
  if (!inst.caps) throw missing_caps_error("is_feasible: instance has no caps");
  if (x.size() != inst.dim()) throw dimension_error("is_feasible: dimension mismatch");
  for (std::size_t i = 0; i < inst.count(); ++i)
    if (chebyshev(inst.points[i], x) > (*inst.caps)[i] + feasibility_tolerance) return false;
  return true;
}

struct pq_vectors {
  vec p;  // componentwise max of points shifted up by the addends
  vec q;  // componentwise min of points shifted down by the addends
};

inline pq_vectors build_pq(const location_instance& inst) {
  const std::size_t n = inst.dim();
  vec p(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    double hi = inst.points[0][i] + inst.weights[0];
    double lo = inst.points[0][i] - inst.weights[0];
    for (std::size_t k = 1; k < inst.count(); ++k) {
      hi = std::max(hi, inst.points[k][i] + inst.weights[k]);
      lo = std::min(lo, inst.points[k][i] - inst.weights[k]);
    }
    p[i] = scalar(hi);
    q[i] = scalar(lo);
  }
  return pq_vectors{std::move(p), std::move(q)};
}

// The alpha-parameterized optimal set: lambda plus the envelope vectors it
// was derived from.
struct solution_family {
  double lambda;
  vec p, q;

  std::size_t dim() const noexcept { return p.size(); }

  std::vector<double> point_at(std::span<const double> alphas) const {
    if (alphas.size() != dim()) throw dimension_error("point_at: alpha length mismatch");
    std::vector<double> x(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!(alphas[i] >= 0.0 && alphas[i] <= 1.0))
        throw bad_alpha_error("point_at: alphas must lie in [0, 1]");
      x[i] = alphas[i] * (p[i].value() - lambda) + (1.0 - alphas[i]) * (q[i].value() + lambda);
    }
    return x;
  }
};

struct family_sample {
  std::vector<double> alpha;
  std::vector<double> x;
};

// Deterministic sample of the family: k uniform alphas (the midpoint when
// k == 1), then the 2^n corner blends for n <= 4, duplicates removed.
inline std::vector<family_sample> sample_family(const solution_family& family, std::size_t k) {
  if (k == 0) throw value_error("sample_family: sample count must be positive");
  const std::size_t n = family.dim();
  std::vector<family_sample> out;
  auto push_unique = [&](std::vector<double> alpha) {
    std::vector<double> x = family.point_at(alpha);
    for (const family_sample& s : out)
      if (s.x == x) return;
    out.push_back(family_sample{std::move(alpha), std::move(x)});
  };
  if (k == 1) {
    push_unique(std::vector<double>(n, 0.5));
    return out;
  }
  for (std::size_t i = 0; i < k; ++i)
    push_unique(std::vector<double>(n, static_cast<double>(i) / static_cast<double>(k - 1)));
  if (n <= 4) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<double> alpha(n);
      for (std::size_t i = 0; i < n; ++i) alpha[i] = (mask >> i) & 1 ? 1.0 : 0.0;
      push_unique(std::move(alpha));
    }
  }
  return out;
}

// The bordered (n+1)-matrix [[zero, q⁻], [p, zero]] whose eigenvalue equals
// the location optimum.
inline mat augmented_matrix(const vec& p, const vec& q) {
  if (p.size() != q.size()) throw dimension_error("augmented_matrix: length mismatch");
  const vec qconj = conjugate(q);
  mat a(p.size() + 1, p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    a(0, i + 1) = qconj[i];
    a(i + 1, 0) = p[i];
  }
  return a;
}

// The same optimum computed three ways; they agree up to rounding and the
// acceptance suite pins them together.
struct lambda_paths {
  double closed_form;  // max_i (p_i - q_i) / 2
  double tropical;     // (q⁻ p)^{1/2}
  double spectral;     // eigenvalue of the bordered matrix
};

namespace detail {

inline lambda_paths crosscheck_lambda(const vec& p, const vec& q) {
  double closed = (p[0].value() - q[0].value()) / 2.0;
  for (std::size_t i = 1; i < p.size(); ++i)
    closed = std::max(closed, (p[i].value() - q[i].value()) / 2.0);
  const scalar product = conjugate(q) * p;
  const double tropical = pow(product, 0.5).value();
  const double spectral = eigenvalue(augmented_matrix(p, q)).value();
  return lambda_paths{closed, tropical, spectral};
}

}  // namespace detail

struct constrained_parts {
  vec p0, q0;      // envelopes of the cap-free problem
  double lambda0;  // its optimum
  vec p1, q1;      // envelopes of the cap constraints
};

struct solve_report {
  solution_family family;
  bool exact;  // constrained solves: combined lambda is zero; otherwise true
  lambda_paths check;
  std::optional<constrained_parts> parts;  // present for constrained solves
};

inline solve_report solve_unconstrained(const location_instance& inst) {
  pq_vectors pq = build_pq(inst);
  lambda_paths check = detail::crosscheck_lambda(pq.p, pq.q);
  solution_family family{check.closed_form, std::move(pq.p), std::move(pq.q)};
  return solve_report{std::move(family), true, check, std::nullopt};
}

// Cap-constrained solve in the normalized scale: the reported lambda is 0
// exactly when some family point satisfies every cap, and otherwise measures
// both the worst cap violation and the excess over the cap-free optimum.
inline solve_report solve_constrained(const location_instance& inst) {
  if (!inst.caps) throw missing_caps_error("solve_constrained: instance has no caps");
  const std::size_t n = inst.dim();
  pq_vectors pq0 = build_pq(inst);
  double lambda0 = (pq0.p[0].value() - pq0.q[0].value()) / 2.0;
  for (std::size_t i = 1; i < n; ++i)
    lambda0 = std::max(lambda0, (pq0.p[i].value() - pq0.q[i].value()) / 2.0);

  vec p1(n), q1(n);
  const std::vector<double>& caps = *inst.caps;
  for (std::size_t i = 0; i < n; ++i) {
    double hi = inst.points[0][i] - caps[0];
    double lo = inst.points[0][i] + caps[0];
    for (std::size_t k = 1; k < inst.count(); ++k) {
      hi = std::max(hi, inst.points[k][i] - caps[k]);
      lo = std::min(lo, inst.points[k][i] + caps[k]);
    }
    p1[i] = scalar(hi);
    q1[i] = scalar(lo);
  }

  vec p(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = scalar(std::max(pq0.p[i].value() - lambda0, p1[i].value()));
    q[i] = scalar(std::min(pq0.q[i].value() + lambda0, q1[i].value()));
  }

  lambda_paths check = detail::crosscheck_lambda(p, q);
  solution_family family{check.closed_form, std::move(p), std::move(q)};
  const bool exact = std::abs(family.lambda) <= feasibility_tolerance;
  constrained_parts parts{std::move(pq0.p), std::move(pq0.q), lambda0,
                          std::move(p1), std::move(q1)};
  return solve_report{std::move(family), exact, check, std::move(parts)};
}

}  // namespace maxplus
