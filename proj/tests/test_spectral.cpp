#include <catch2/catch.hpp>

#include "maxplus/oracle.hpp"
#include "maxplus/spectral.hpp"
#include "support.hpp"

using maxplus::mat;
using maxplus::scalar;
using maxplus::vec;
using testutil::approx;

namespace {

const scalar O = scalar::zero();

// Bordered matrix of the location reduction, used across the examples.
const mat location_matrix{{O, 0, 0}, {10, O, O}, {4, O, O}};

}  // namespace

TEST_CASE("eigenvalue of hand matrices") {
  const mat single{{7.5}};
  CHECK(maxplus::eigenvalue(single) == scalar(7.5));
  const mat cycle{{O, 4}, {2, O}};
  CHECK(maxplus::eigenvalue(cycle) == scalar(3));
  CHECK(maxplus::eigenvalue(location_matrix) == scalar(5));
}

TEST_CASE("eigenvalue preconditions") {
  const mat triangular{{O, 1}, {O, O}};
  CHECK_THROWS_AS(maxplus::eigenvalue(triangular), maxplus::reducible_error);
  // A 1x1 zero matrix is irreducible by convention but has no finite cycle.
  const mat zero_1x1{{O}};
  CHECK_THROWS_AS(maxplus::eigenvalue(zero_1x1), maxplus::degenerate_spectrum_error);
}

TEST_CASE("eigenvalue equals the cycle-mean oracle on random matrices") {
  std::mt19937 rng(20240806);
  for (int trial = 0; trial < 60; ++trial) {
    const mat a = testutil::random_irreducible(rng, 2 + trial % 5);
    CHECK(approx(maxplus::eigenvalue(a), maxplus::max_cycle_mean(a)));
  }
}

TEST_CASE("eigenbasis of hand matrices") {
  const mat cycle{{O, 4}, {2, O}};
  const auto r = maxplus::eigenbasis(cycle);
  CHECK(r.lambda == scalar(3));
  REQUIRE(r.basis.size() == 1);
  const vec expected{0, -1};
  CHECK(approx(r.basis[0], expected));

  const mat single{{-2.5}};
  const auto r1 = maxplus::eigenbasis(single);
  CHECK(r1.lambda == scalar(-2.5));
  REQUIRE(r1.basis.size() == 1);
  CHECK(approx(r1.basis[0], vec{0}));

  const auto r2 = maxplus::eigenbasis(location_matrix);
  CHECK(r2.lambda == scalar(5));
  REQUIRE(r2.basis.size() == 1);
  const vec expected2{0, 5, -1};
  CHECK(approx(r2.basis[0], expected2));
}

TEST_CASE("eigen equation and basis positivity on random matrices") {
  std::mt19937 rng(20240807);
  for (int trial = 0; trial < 60; ++trial) {
    const mat a = testutil::random_irreducible(rng, 2 + trial % 5);
    const auto r = maxplus::eigenbasis(a);
    REQUIRE(!r.basis.empty());
    for (const vec& b : r.basis) {
      CHECK(b.all_finite());
      CHECK(approx(a * b, r.lambda * b));
    }
    // No basis column is a combination of the others.
    for (std::size_t j = 0; j < r.basis.size(); ++j) {
      std::vector<vec> rest;
      for (std::size_t i = 0; i < r.basis.size(); ++i)
        if (i != j) rest.push_back(r.basis[i]);
      CHECK_FALSE(maxplus::is_dependent(r.basis[j], rest));
    }
  }
}

TEST_CASE("every critical column lies in the basis span") {
  std::mt19937 rng(20240821);
  for (int trial = 0; trial < 40; ++trial) {
    const mat a = testutil::random_irreducible(rng, 2 + trial % 5);
    const auto r = maxplus::eigenbasis(a);
    // Rebuild the closure sum and check the kept-diagonal columns it yields
    // all reduce onto the returned basis.
    const mat scaled = maxplus::inv(r.lambda) * a;
    mat astar = scaled, power = scaled;
    for (std::size_t m = 2; m <= a.rows(); ++m) {
      power = power * scaled;
      astar = astar + power;
    }
    for (std::size_t j = 0; j < a.rows(); ++j) {
      if (astar(j, j).is_zero() || std::abs(astar(j, j).value()) > 1e-9) continue;
      CHECK(maxplus::is_dependent(astar.column(j), r.basis));
    }
  }
}

TEST_CASE("dependence by residuation") {
  const vec x{1, 4};
  CHECK(maxplus::is_dependent(scalar(2) * x, {x}));
  const vec y{0, 0};
  const vec b1{0, -5};
  CHECK_FALSE(maxplus::is_dependent(y, {b1}));
  const vec y2{3, 1};
  const vec b2{0, -2}, b3{0, 1};
  CHECK(maxplus::is_dependent(y2, {b2, b3}));
  CHECK_FALSE(maxplus::is_dependent(y2, {}));
  const vec with_zero{1, O};
  CHECK_THROWS_AS(maxplus::is_dependent(with_zero, {b1}), maxplus::zero_entry_error);
}

TEST_CASE("phi evaluates x conjugate times A times x") {
  const mat a{{O, 4}, {2, O}};
  const vec x{0, -1};
  CHECK(maxplus::phi(a, x) == scalar(3));
  const vec ones{0, 0};
  CHECK(maxplus::phi(a, ones) == scalar(4));
  const mat single{{6}};
  const vec t{42.5};
  CHECK(maxplus::phi(single, t) == scalar(6));
  const vec bad{0, O};
  CHECK_THROWS_AS(maxplus::phi(a, bad), maxplus::zero_entry_error);
  const vec too_long{0, 0, 0};
  CHECK_THROWS_AS(maxplus::phi(a, too_long), maxplus::dimension_error);
}

TEST_CASE("minimize_phi returns attaining vectors") {
  const mat cycle{{O, 4}, {2, O}};
  const auto m = maxplus::minimize_phi(cycle);
  CHECK(m.lambda == scalar(3));
  const vec expected{0, -1};
  CHECK(approx(m.primal, expected));
  CHECK(approx(m.dual, expected));  // here u and (v⁻)ᵀ coincide
  CHECK(approx(maxplus::phi(cycle, m.primal), m.lambda));
  CHECK(approx(maxplus::phi(cycle, m.dual), m.lambda));

  const mat single{{-1}};
  const auto m1 = maxplus::minimize_phi(single);
  CHECK(m1.lambda == scalar(-1));
  CHECK(approx(m1.primal, vec{0}));
  CHECK(approx(m1.dual, vec{0}));

  const auto m2 = maxplus::minimize_phi(location_matrix);
  CHECK(m2.lambda == scalar(5));
  const vec expected_primal{0, 5, -1};
  const vec expected_dual{0, 5, 5};
  CHECK(approx(m2.primal, expected_primal));
  CHECK(approx(m2.dual, expected_dual));
  CHECK(approx(maxplus::phi(location_matrix, m2.primal), m2.lambda));
  CHECK(approx(maxplus::phi(location_matrix, m2.dual), m2.lambda));
}

TEST_CASE("phi is bounded below by the eigenvalue") {
  std::mt19937 rng(20240808);
  for (int trial = 0; trial < 40; ++trial) {
    const mat a = testutil::random_irreducible(rng, 2 + trial % 5);
    const double lambda = maxplus::eigenvalue(a).value();
    for (int k = 0; k < 50; ++k) {
      const vec x = testutil::random_positive_vec(rng, a.rows());
      CHECK(maxplus::phi(a, x).value() >= lambda - 1e-9);
    }
  }
}

TEST_CASE("arrow matrix embedding") {
  const vec col_tail{10, 4};
  const vec row_tail{0, 0};
  const maxplus::arrow_matrix arrow(col_tail, row_tail);
  CHECK(arrow.size() == 3);
  CHECK(arrow.to_matrix() == location_matrix);
  const vec short_tail{1};
  CHECK_THROWS_AS(maxplus::arrow_matrix(col_tail, short_tail), maxplus::dimension_error);
  const vec zero_tail{O, 1};
  CHECK_THROWS_AS(maxplus::arrow_matrix(col_tail, zero_tail), maxplus::zero_entry_error);
}

TEST_CASE("blends of minimizers stay minimizers on arrow matrices") {
  const vec col_tail{10, 4};
  const vec row_tail{0, 0};
  const maxplus::arrow_matrix arrow(col_tail, row_tail);
  const mat a = arrow.to_matrix();
  const auto m = maxplus::minimize_phi(a);

  const std::vector<double> all_one(3, 1.0), all_zero(3, 0.0);
  CHECK(approx(maxplus::blend_members(arrow, m.primal, m.dual, all_one), m.primal));
  CHECK(approx(maxplus::blend_members(arrow, m.primal, m.dual, all_zero), m.dual));

  for (double alpha : {0.25, 0.5, 0.75}) {
    const std::vector<double> uniform(3, alpha);
    const vec z = maxplus::blend_members(arrow, m.primal, m.dual, uniform);
    CHECK(approx(maxplus::phi(a, z), m.lambda));
  }

  const vec not_member{0, 0, 0};
  const std::vector<double> half(3, 0.5);
  CHECK_THROWS_AS(maxplus::blend_members(arrow, not_member, m.dual, half),
                  maxplus::not_minimizer_error);
  const std::vector<double> out_of_range{0.5, 1.5, 0.5};
  CHECK_THROWS_AS(maxplus::blend_members(arrow, m.primal, m.dual, out_of_range),
                  maxplus::bad_alpha_error);
}

TEST_CASE("uniform blends stay minimizers on general matrices") {
  std::mt19937 rng(20240820);
  for (int trial = 0; trial < 60; ++trial) {
    const mat a = testutil::random_irreducible(rng, 2 + trial % 5);
    const auto m = maxplus::minimize_phi(a);
    const double alpha = testutil::uniform(rng, 0.0, 1.0);
    vec z(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      z[i] = maxplus::pow(m.primal[i], alpha) * maxplus::pow(m.dual[i], 1.0 - alpha);
    CHECK(approx(maxplus::phi(a, z), m.lambda));
  }
}

TEST_CASE("closure combinations of minimizers") {
  const vec x{0, -1};
  const auto same = maxplus::closure_members(x, x, scalar(7));
  const vec scaled{7, 6};
  CHECK(approx(same.scaled, scaled));
  CHECK(approx(same.sum, x));
  CHECK(approx(same.conj_sum, x));

  // Two distinct members for the bordered example matrix.
  const auto m = maxplus::minimize_phi(location_matrix);
  const auto combos = maxplus::closure_members(m.primal, m.dual, scalar(2.5));
  CHECK(approx(maxplus::phi(location_matrix, combos.scaled), m.lambda));
  CHECK(approx(maxplus::phi(location_matrix, combos.sum), m.lambda));
  CHECK(approx(maxplus::phi(location_matrix, combos.conj_sum), m.lambda));

  const vec with_zero{0, O};
  CHECK_THROWS_AS(maxplus::closure_members(with_zero, x, scalar(1)),
                  maxplus::zero_entry_error);
}

// Coordinatewise blends are NOT closed for general matrices: a concrete
// non-arrow matrix where blending two minimizers coordinate by coordinate
// leaves the minimizer set. This is why blend_members insists on the arrow
// shape.
TEST_CASE("coordinatewise blends can fail off the arrow shape") {
  const mat a{{O, 4, 0}, {2, O, -9}, {0, O, O}};
  REQUIRE(maxplus::is_irreducible(a));
  const double lambda = maxplus::eigenvalue(a).value();
  CHECK(lambda == Approx(3.0));

  const vec x{0, -1, 3};   // (v⁻)ᵀ for an eigenvector v of the transpose
  const vec y{10, 9, 7};   // a scaled eigenvector of a
  CHECK(maxplus::phi(a, x).value() == Approx(lambda));
  CHECK(maxplus::phi(a, y).value() == Approx(lambda));

  vec z(3);
  const std::vector<double> alphas{1.0, 0.0, 1.0};
  for (std::size_t i = 0; i < 3; ++i)
    z[i] = maxplus::pow(x[i], alphas[i]) * maxplus::pow(y[i], 1.0 - alphas[i]);
  CHECK(maxplus::phi(a, z).value() > lambda + 1.0);

  // A randomized search over non-arrow matrices finds more such failures.
  std::mt19937 rng(20240809);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const mat g = testutil::random_irreducible(rng, 3 + trial % 3);
    const auto m = maxplus::minimize_phi(g);
    const vec u = scalar(testutil::uniform(rng, -5.0, 5.0)) * m.primal;
    vec blend(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
      const double alpha = testutil::uniform(rng, 0.0, 1.0);
      blend[i] = maxplus::pow(u[i], alpha) * maxplus::pow(m.dual[i], 1.0 - alpha);
    }
    if (maxplus::phi(g, blend).value() > m.lambda.value() + 1e-6) ++violations;
  }
  CHECK(violations > 0);
}
