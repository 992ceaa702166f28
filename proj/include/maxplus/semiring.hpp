#pragma once

#include <cmath>

#include "maxplus/errors.hpp"

// Scalar arithmetic of the idempotent semifield over the reals with
// a (+) b = max(a, b) and a (*) b = a + b. The additive neutral element
// ("zero") is carried as an explicit tag rather than the IEEE -infinity,
// so expressions like zero (*) inv(zero) cannot reach double arithmetic.

namespace maxplus {

class scalar {
 public:
  // The zero element: neutral for (+), absorbing for (*), bottom of the order.
  constexpr scalar() noexcept : finite_(false), v_(0.0) {}

  // A finite element. NaN and infinities are rejected; the tagged default
  // constructor is the only representation of the zero element.
  scalar(double v) : finite_(true), v_(v) {
    if (!std::isfinite(v)) throw value_error("scalar: value must be finite");
  }

  static constexpr scalar zero() noexcept { return scalar{}; }

  // The multiplicative identity (the real 0).
  static constexpr scalar one() noexcept { return scalar(unchecked{}, 0.0); }

  constexpr bool is_zero() const noexcept { return !finite_; }
  constexpr bool is_finite() const noexcept { return finite_; }

  // Finite elements only.
  double value() const {
    if (!finite_) throw value_error("scalar: the zero element has no finite value");
    return v_;
  }

  friend constexpr scalar operator+(scalar a, scalar b) noexcept {
    if (a.finite_ && b.finite_)
      return scalar(unchecked{}, a.v_ < b.v_ ? b.v_ : a.v_);
    return a.finite_ ? a : b;
  }

  friend scalar operator*(scalar a, scalar b) {
    if (a.finite_ && b.finite_) return scalar(a.v_ + b.v_);
    return scalar{};
  }

  friend constexpr bool operator==(scalar a, scalar b) noexcept {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend constexpr bool operator!=(scalar a, scalar b) noexcept { return !(a == b); }

  scalar& operator+=(scalar o) noexcept { return *this = *this + o; }
  scalar& operator*=(scalar o) { return *this = *this * o; }

 private:
  struct unchecked {};
  constexpr scalar(unchecked, double v) noexcept : finite_(true), v_(v) {}

  bool finite_;
  double v_;
};

// Multiplicative inverse (negation of the underlying real).
inline scalar inv(scalar a) {
  if (a.is_zero()) throw invert_zero_error("inv: the zero element is not invertible");
  return scalar(-a.value());
}

// Real-exponent power: for finite a this is e * a in conventional terms.
// The zero element is only closed under positive exponents.
inline scalar pow(scalar a, double e) {
  if (!std::isfinite(e)) throw value_error("pow: exponent must be finite");
  if (a.is_zero()) {
    if (e > 0.0) return scalar::zero();
    throw zero_power_error("pow: the zero element requires a positive exponent");
  }
  return scalar(e * a.value());
}

// The order induced by idempotent addition: a <= b iff a (+) b == b.
// Coincides with the natural order on finite values; zero is below everything.
inline constexpr bool leq(scalar a, scalar b) noexcept { return a + b == b; }

}  // namespace maxplus
