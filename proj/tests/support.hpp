#pragma once

#include <cctype>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "maxplus/location.hpp"
#include "maxplus/spectral.hpp"

// Shared helpers for the test suites: approximate comparisons and
// deterministic random generators. Strong connectivity is re-derived here
// with plain BFS so that generator rejection does not depend on the
// library's own irreducibility test.

namespace testutil {

using maxplus::mat;
using maxplus::scalar;
using maxplus::vec;

inline bool approx(scalar a, scalar b, double tol = 1e-9) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return std::abs(a.value() - b.value()) <= tol;
}

inline bool approx(const vec& a, const vec& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approx(a[i], b[i], tol)) return false;
  return true;
}

inline bool approx(const mat& a, const mat& b, double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!approx(a(i, j), b(i, j), tol)) return false;
  return true;
}

inline bool strongly_connected(const mat& a) {
  const std::size_t n = a.rows();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.back();
      queue.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (!a(u, v).is_zero() && !seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
    }
    for (bool b : seen)
      if (!b) return false;
  }
  return true;
}

inline double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Square matrix with entries uniform in [-10, 10], each independently
// replaced by the zero element with probability zero_prob; resampled until
// the support digraph is strongly connected.
inline mat random_irreducible(std::mt19937& rng, std::size_t n, double zero_prob = 0.4) {
  for (;;) {
    mat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (uniform(rng, 0.0, 1.0) >= zero_prob) a(i, j) = scalar(uniform(rng, -10.0, 10.0));
    if (strongly_connected(a)) return a;
  }
}

inline vec random_positive_vec(std::mt19937& rng, std::size_t n) {
  vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = scalar(uniform(rng, -10.0, 10.0));
  return x;
}

inline maxplus::arrow_matrix random_arrow(std::mt19937& rng, std::size_t n) {
  vec col(n - 1), row(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    col[i] = scalar(uniform(rng, -10.0, 10.0));
    row[i] = scalar(uniform(rng, -10.0, 10.0));
  }
  return maxplus::arrow_matrix(std::move(col), std::move(row));
}

inline std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

// Minimal well-formedness scan: every opened element must be closed, in
// order. Handles declarations, comments, self-closing tags, and quoted
// attribute values containing angle brackets.
inline bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    if (text.compare(pos, 2, "<?") == 0) {
      pos = text.find("?>", pos);
      if (pos == std::string::npos) return false;
      pos += 2;
      continue;
    }
    if (text.compare(pos, 4, "<!--") == 0) {
      pos = text.find("-->", pos);
      if (pos == std::string::npos) return false;
      pos += 3;
      continue;
    }
    const bool closing = text.compare(pos, 2, "</") == 0;
    std::size_t name_start = pos + (closing ? 2 : 1);
    std::size_t name_end = name_start;
    while (name_end < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[name_end])) ||
            text[name_end] == '-' || text[name_end] == ':'))
      ++name_end;
    const std::string name = text.substr(name_start, name_end - name_start);
    if (name.empty()) return false;
    std::size_t scan = name_end;
    char quote = 0;
    while (scan < text.size() && (quote || text[scan] != '>')) {
      if (quote && text[scan] == quote)
        quote = 0;
      else if (!quote && (text[scan] == '"' || text[scan] == '\''))
        quote = text[scan];
      ++scan;
    }
    if (scan >= text.size()) return false;
    const bool self_closing = text[scan - 1] == '/';
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_closing) {
      stack.push_back(name);
    }
    pos = scan + 1;
  }
  return stack.empty();
}

inline maxplus::location_instance random_instance(std::mt19937& rng, std::size_t n,
                                                  std::size_t m, bool with_caps = false) {
  std::vector<std::vector<double>> points(m, std::vector<double>(n));
  std::vector<double> weights(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i) points[k][i] = uniform(rng, -10.0, 10.0);
    weights[k] = uniform(rng, -10.0, 10.0);
  }
  if (!with_caps) return maxplus::location_instance(std::move(points), std::move(weights));
  std::vector<double> caps(m);
  for (std::size_t k = 0; k < m; ++k) caps[k] = uniform(rng, 0.0, 15.0);
  return maxplus::location_instance(std::move(points), std::move(weights), std::move(caps));
}

}  // namespace testutil
