#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "maxplus/semiring.hpp"

// Vectors and matrices over the semifield: semimodule operations, the
// conjugate row vector, matrix product/power/trace, and irreducibility.
// Storage is dense row-major; sizes here are desk scale.

namespace maxplus {

enum class orient { col, row };

// A dense vector carrying an orientation flag, so that a conjugate (a row)
// cannot silently stand in for a column operand in a product.
class vec {
 public:
  explicit vec(std::size_t n, scalar fill = scalar::zero(), orient o = orient::col)
      : e_(check_size(n), fill), o_(o) {}

  vec(std::initializer_list<scalar> xs, orient o = orient::col) : e_(xs), o_(o) {
    check_size(e_.size());
  }

  std::size_t size() const noexcept { return e_.size(); }
  orient orientation() const noexcept { return o_; }

  scalar& operator[](std::size_t i) { return e_[i]; }
  scalar operator[](std::size_t i) const { return e_[i]; }

  // "Nonzero vector": at least one entry differs from the zero element.
  bool any_finite() const noexcept {
    for (scalar s : e_)
      if (s.is_finite()) return true;
    return false;
  }

  // "Positive vector": no entry equals the zero element.
  bool all_finite() const noexcept {
    for (scalar s : e_)
      if (s.is_zero()) return false;
    return true;
  }

  vec transposed() const {
    vec r = *this;
    r.o_ = o_ == orient::col ? orient::row : orient::col;
    return r;
  }

  friend bool operator==(const vec& x, const vec& y) noexcept {
    if (x.o_ != y.o_ || x.e_.size() != y.e_.size()) return false;
    for (std::size_t i = 0; i < x.e_.size(); ++i)
      if (x.e_[i] != y.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const vec& x, const vec& y) noexcept { return !(x == y); }

 private:
  static std::size_t check_size(std::size_t n) {
    if (n == 0) throw dimension_error("vec: length must be at least 1");
    return n;
  }

  std::vector<scalar> e_;
  orient o_;
};

inline vec operator+(const vec& x, const vec& y) {
  if (x.size() != y.size() || x.orientation() != y.orientation())
    throw dimension_error("vec add: operands must share length and orientation");
  vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

inline vec operator*(scalar c, const vec& x) {
  vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * r[i];
  return r;
}

// The conjugate x⁻: elementwise inverses with flipped orientation.
// Defined only for positive vectors.
inline vec conjugate(const vec& x) {
  vec r = x.transposed();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) throw zero_entry_error("conjugate: vector has a zero entry");
    r[i] = inv(r[i]);
  }
  return r;
}

// Inner product row * col.
inline scalar operator*(const vec& x, const vec& y) {
  if (x.orientation() != orient::row || y.orientation() != orient::col)
    throw dimension_error("vec product: expected row * col");
  if (x.size() != y.size()) throw dimension_error("vec product: length mismatch");
  scalar acc = scalar::zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

class mat {
 public:
  mat(std::size_t rows, std::size_t cols, scalar fill = scalar::zero())
      : rows_(rows), cols_(cols), e_(check_shape(rows, cols), fill) {}

  mat(std::initializer_list<std::initializer_list<scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    check_shape(rows_, cols_);
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw dimension_error("mat: ragged initializer");
      e_.insert(e_.end(), r.begin(), r.end());
    }
  }

  static mat identity(std::size_t n) {
    mat r(n, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = scalar::one();
    return r;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  scalar operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  vec column(std::size_t j) const {
    vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
  }

  friend bool operator==(const mat& a, const mat& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const mat& a, const mat& b) noexcept { return !(a == b); }

 private:
  static std::size_t check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw dimension_error("mat: shape must be at least 1x1");
    return rows * cols;
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<scalar> e_;
};

inline mat operator+(const mat& a, const mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("mat add: shape mismatch");
  mat r = a;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

inline mat operator*(const mat& a, const mat& b) {
  if (a.cols() != b.rows()) throw dimension_error("mat product: shape mismatch");
  mat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      scalar aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline mat operator*(scalar c, const mat& a) {
  mat r = a;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = c * r(i, j);
  return r;
}

inline vec operator*(const mat& a, const vec& x) {
  if (x.orientation() != orient::col)
    throw dimension_error("mat * vec: right operand must be a column");
  if (a.cols() != x.size()) throw dimension_error("mat * vec: shape mismatch");
  vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    scalar acc = scalar::zero();
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    r[i] = acc;
  }
  return r;
}

inline vec operator*(const vec& x, const mat& a) {
  if (x.orientation() != orient::row)
    throw dimension_error("vec * mat: left operand must be a row");
  if (x.size() != a.rows()) throw dimension_error("vec * mat: shape mismatch");
  vec r(a.cols(), scalar::zero(), orient::row);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    scalar acc = scalar::zero();
    for (std::size_t i = 0; i < a.rows(); ++i) acc += x[i] * a(i, j);
    r[j] = acc;
  }
  return r;
}

// Outer product col * row.
inline mat outer(const vec& x, const vec& y) {
  if (x.orientation() != orient::col || y.orientation() != orient::row)
    throw dimension_error("outer: expected col * row");
  mat r(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r(i, j) = x[i] * y[j];
  return r;
}

inline mat transpose(const mat& a) {
  mat r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

inline mat pow(const mat& a, unsigned p) {
  if (!a.is_square()) throw not_square_error("mat pow: matrix must be square");
  mat r = mat::identity(a.rows());
  for (unsigned i = 0; i < p; ++i) r = r * a;
  return r;
}

inline scalar trace(const mat& a) {
  if (!a.is_square()) throw not_square_error("trace: matrix must be square");
  scalar acc = scalar::zero();
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

namespace detail {

// Tarjan over the support digraph (edge i->j iff a(i,j) is finite).
struct scc_state {
  const mat& a;
  std::vector<int> index, low;
  std::vector<bool> on_stack;
  std::vector<std::size_t> stack;
  int next_index = 0;
  std::size_t component_count = 0;

  explicit scc_state(const mat& m)
      : a(m), index(m.rows(), -1), low(m.rows(), 0), on_stack(m.rows(), false) {}

  void visit(std::size_t v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < a.cols(); ++w) {
      if (a(v, w).is_zero()) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      ++component_count;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
      } while (w != v);
    }
  }
};

}  // namespace detail

// True iff the support digraph is strongly connected. A 1x1 matrix is
// irreducible by convention, whatever its entry.
inline bool is_irreducible(const mat& a) {
  if (!a.is_square()) throw not_square_error("is_irreducible: matrix must be square");
  if (a.rows() == 1) return true;
  detail::scc_state s(a);
  for (std::size_t v = 0; v < a.rows(); ++v)
    if (s.index[v] < 0) s.visit(v);
  return s.component_count == 1;
}

// For a reducible matrix, the first pair (i, j) in row-major scan order with
// no path i -> j in the support digraph; nullopt for irreducible input.
// Indices are 0-based.
inline std::optional<std::pair<std::size_t, std::size_t>> unreachable_pair(const mat& a) {
  if (!a.is_square()) throw not_square_error("unreachable_pair: matrix must be square");
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> queue{s};
    reach[s][s] = true;
    while (!queue.empty()) {
      std::size_t u = queue.back();
      queue.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (!a(u, w).is_zero() && !reach[s][w]) {
          reach[s][w] = true;
          queue.push_back(w);
        }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !reach[i][j]) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace maxplus
