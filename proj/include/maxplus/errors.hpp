#pragma once

#include <stdexcept>

namespace maxplus {

// Base class for everything this library throws on a contract violation.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalar-level violations.
class value_error : public error {
 public:
  using error::error;
};
class invert_zero_error : public error {
 public:
  using error::error;
};
class zero_power_error : public error {
 public:
  using error::error;
};

// Shape and entry violations on vectors/matrices.
class dimension_error : public error {
 public:
  using error::error;
};
class not_square_error : public error {
 public:
  using error::error;
};
class zero_entry_error : public error {
 public:
  using error::error;
};

// Spectral preconditions.
class reducible_error : public error {
 public:
  using error::error;
};
class degenerate_spectrum_error : public error {
 public:
  using error::error;
};
class not_minimizer_error : public error {
 public:
  using error::error;
};
class bad_alpha_error : public error {
 public:
  using error::error;
};

// Location solver preconditions.
class missing_caps_error : public error {
 public:
  using error::error;
};

// Brute-force oracle limits.
class no_finite_cycle_error : public error {
 public:
  using error::error;
};
class oracle_limit_error : public error {
 public:
  using error::error;
};
class empty_feasible_grid_error : public error {
 public:
  using error::error;
};

}  // namespace maxplus
