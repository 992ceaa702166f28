#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "maxplus/linalg.hpp"

// Spectral theory for irreducible matrices. The eigenvalue comes from the
// trace formula
//
//     lambda = (+)_{m=1..n} tr(A^m)^{1/m},
//
// which equals the maximum cycle mean of the weighted support digraph. The
// eigenvectors are read off the matrix
//
//     Astar = (lambda⁻¹ A) (+) ... (+) (lambda⁻¹ A)^n :
//
// the columns whose diagonal entry is the identity span the eigenspace, and
// dropping the linearly dependent ones yields a basis.
//
// On top of that sits the extremal machinery: phi(x) = x⁻ A x has minimum
// lambda over positive x, and the minimizer set is closed under addition,
// scaling, conjugate-addition and coordinate blends (the latter only for
// arrow-shaped matrices).

namespace maxplus {

// Absolute tolerance used for membership-style floating comparisons. All
// core operations are max/plus/negate, so drift only enters through the
// 1/m powers in the eigenvalue.
inline constexpr double spectral_tolerance = 1e-9;

namespace detail {

inline void require_irreducible(const mat& a, const char* who) {
  if (!is_irreducible(a)) throw reducible_error(std::string(who) + ": matrix is reducible");
}

inline bool approx_one(scalar s) {
  return s.is_finite() && std::abs(s.value()) <= spectral_tolerance;
}

}  // namespace detail

// The unique eigenvalue of an irreducible matrix.
inline scalar eigenvalue(const mat& a) {
  detail::require_irreducible(a, "eigenvalue");
  const std::size_t n = a.rows();
  scalar best = scalar::zero();
  mat power = mat::identity(n);
  for (std::size_t m = 1; m <= n; ++m) {
    power = power * a;
    scalar t = trace(power);
    if (t.is_finite()) best += pow(t, 1.0 / static_cast<double>(m));
  }
  // An irreducible matrix always carries a finite cycle; an all-zero trace
  // sequence therefore signals a bug upstream, not a legitimate spectrum.
  if (best.is_zero())
    throw degenerate_spectrum_error("eigenvalue: no finite cycle found");
  return best;
}

// Linear dependence test by residuation: the best coefficients are
// c_j = min_i (y_i - x_{j,i}), and y is dependent iff (+)_j c_j x_j
// reproduces y. All vectors must be positive columns of equal length.
inline bool is_dependent(const vec& y, const std::vector<vec>& basis) {
  if (!y.all_finite()) throw zero_entry_error("is_dependent: vector has a zero entry");
  if (basis.empty()) return false;
  const std::size_t n = y.size();
  vec combo(n);
  for (const vec& x : basis) {
    if (!x.all_finite()) throw zero_entry_error("is_dependent: basis vector has a zero entry");
    if (x.size() != n) throw dimension_error("is_dependent: length mismatch");
    double c = y[0].value() - x[0].value();
    for (std::size_t i = 1; i < n; ++i) c = std::min(c, y[i].value() - x[i].value());
    combo = combo + scalar(c) * x;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (combo[i].is_zero()) return false;
    if (std::abs(combo[i].value() - y[i].value()) > spectral_tolerance) return false;
  }
  return true;
}

struct eigen_result {
  scalar lambda;
  std::vector<vec> basis;  // independent columns of Astar with identity diagonal
};

// Eigenvalue plus a basis of the eigenspace. Column reduction is greedy
// left to right: a column is kept iff it is not dependent on the columns
// already kept.
inline eigen_result eigenbasis(const mat& a) {
  detail::require_irreducible(a, "eigenbasis");
  const std::size_t n = a.rows();
  const scalar lambda = eigenvalue(a);
  const mat scaled = inv(lambda) * a;
  mat astar = scaled;
  mat power = scaled;
  for (std::size_t m = 2; m <= n; ++m) {
    power = power * scaled;
    astar = astar + power;
  }
  eigen_result r{lambda, {}};
  for (std::size_t j = 0; j < n; ++j) {
    if (!detail::approx_one(astar(j, j))) continue;
    vec column = astar.column(j);
    if (!is_dependent(column, r.basis)) r.basis.push_back(std::move(column));
  }
  // Every irreducible matrix has a critical node, so an empty basis means
  // the eigenvalue itself is off.
  if (r.basis.empty())
    throw degenerate_spectrum_error("eigenbasis: no column with identity diagonal");
  return r;
}

// phi(x) = x⁻ A x for positive x.
inline scalar phi(const mat& a, const vec& x) {
  if (!a.is_square()) throw not_square_error("phi: matrix must be square");
  if (a.cols() != x.size()) throw dimension_error("phi: shape mismatch");
  if (!x.all_finite()) throw zero_entry_error("phi: vector has a zero entry");
  return conjugate(x) * (a * x);
}

struct phi_minimizers {
  scalar lambda;  // the minimum of phi over positive vectors
  vec primal;     // an eigenvector of A
  vec dual;       // (v⁻)ᵀ for v an eigenvector of Aᵀ
};

// The minimum of phi and two canonical vectors attaining it: the first
// basis column of A, and the conjugate-transposed first basis column of Aᵀ.
inline phi_minimizers minimize_phi(const mat& a) {
  eigen_result primal = eigenbasis(a);
  eigen_result dual = eigenbasis(transpose(a));
  return phi_minimizers{primal.lambda, primal.basis.front(),
                        conjugate(dual.basis.front()).transposed()};
}

// The arrow pattern: nonzero first row and first column, zero elsewhere.
// Stored as the two tails; embeds as the full n x n matrix on demand.
class arrow_matrix {
 public:
  // col_tail holds entries a(2,1)..a(n,1), row_tail holds a(1,2)..a(1,n).
  arrow_matrix(vec col_tail, vec row_tail)
      : col_tail_(std::move(col_tail)), row_tail_(std::move(row_tail)) {
    if (col_tail_.size() != row_tail_.size())
      throw dimension_error("arrow_matrix: tails must have equal length");
    if (!col_tail_.all_finite() || !row_tail_.all_finite())
      throw zero_entry_error("arrow_matrix: tail entries must be nonzero");
  }

  std::size_t size() const noexcept { return col_tail_.size() + 1; }
  const vec& col_tail() const noexcept { return col_tail_; }
  const vec& row_tail() const noexcept { return row_tail_; }

  mat to_matrix() const {
    mat a(size(), size());
    for (std::size_t j = 1; j < size(); ++j) {
      a(0, j) = row_tail_[j - 1];
      a(j, 0) = col_tail_[j - 1];
    }
    return a;
  }

 private:
  vec col_tail_;
  vec row_tail_;
};

namespace detail {

inline void require_member(const mat& a, scalar lambda, const vec& x, const char* who) {
  scalar value = phi(a, x);
  if (std::abs(value.value() - lambda.value()) > spectral_tolerance)
    throw not_minimizer_error(std::string(who) + ": vector does not minimize phi");
}

}  // namespace detail

// Coordinatewise blend z_i = x_i^{alpha_i} (*) y_i^{1-alpha_i} of two
// minimizers of phi for an arrow matrix. The result stays a minimizer;
// for general matrices that is false, which is why this operation is tied
// to the arrow shape.
inline vec blend_members(const arrow_matrix& a, const vec& x, const vec& y,
                         std::span<const double> alphas) {
  const mat m = a.to_matrix();
  if (x.size() != m.rows() || y.size() != m.rows() || alphas.size() != m.rows())
    throw dimension_error("blend_members: size mismatch");
  for (double alpha : alphas)
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw bad_alpha_error("blend_members: alphas must lie in [0, 1]");
  const scalar lambda = eigenvalue(m);
  detail::require_member(m, lambda, x, "blend_members");
  detail::require_member(m, lambda, y, "blend_members");
  vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    z[i] = pow(x[i], alphas[i]) * pow(y[i], 1.0 - alphas[i]);
  return z;
}

struct closure_triple {
  vec scaled;    // c (*) x
  vec sum;       // x (+) y
  vec conj_sum;  // (x⁻ (+) y⁻)⁻
};

// The three combinations under which the minimizer set of phi is closed.
inline closure_triple closure_members(const vec& x, const vec& y, scalar c) {
  if (!x.all_finite() || !y.all_finite())
    throw zero_entry_error("closure_members: vectors must be positive");
  return closure_triple{c * x, x + y, conjugate(conjugate(x) + conjugate(y))};
}

}  // namespace maxplus
