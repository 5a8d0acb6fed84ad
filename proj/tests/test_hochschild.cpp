#include <doctest.h>

#include "multipath/field.hpp"
#include "multipath/hochschild.hpp"
#include "oracles.hpp"

using namespace multipath;

namespace {

template <class F>
Coefficients<F> coeffs(const F& f, const FiniteAlgebra& a) {
  return {f, a, Bimodule::regular(a)};
}

template <class F>
void check_truncated(const F& f, unsigned long p) {
  for (std::size_t m = 2; m <= 4; ++m) {
    auto dims = hh_dims(f, coeffs(f, truncated_poly(m)), m == 4 ? 4 : 5);
    for (std::size_t n = 0; n < dims.size(); ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(dims[n] == oracle::truncated_poly_hh(m, n, p));
    }
  }
}

// dual numbers on the basis 1, y = 1 + x:  y y = -1 + 2 y
FiniteAlgebra shifted_dual() { return FiniteAlgebra(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, -1}, {1, 1, 1, 2}}, {1, 0}); }

}  // namespace

TEST_CASE("ground field") {
  Rationals q;
  CHECK(hh_dims(q, coeffs(q, ground_field().first), 6) == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("truncated polynomials over Q") { check_truncated(Rationals{}, 0); }

TEST_CASE("truncated polynomials over GF(2) and GF(3)") {
  check_truncated(PrimeField(2), 2);
  check_truncated(PrimeField(3), 3);
}

TEST_CASE("b squared vanishes") {
  Rationals q;
  for (const auto& a : {truncated_poly(2), truncated_poly(3), shifted_dual()}) {
    auto co = coeffs(q, a);
    for (std::size_t n = 1; n + 1 <= 4; ++n) {
      CHECK(multiply(q, bar_boundary(q, co, n), bar_boundary(q, co, n + 1)).is_zero());
    }
  }
  CHECK_THROWS_AS(bar_boundary(q, coeffs(q, truncated_poly(2)), 0), std::invalid_argument);
}

TEST_CASE("b squared vanishes for non-commutative coefficients") {
  Rationals q;
  auto a = FiniteAlgebra(3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, {1, 0, 1});
  auto co = coeffs(q, a);
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(multiply(q, bar_boundary(q, co, n), bar_boundary(q, co, n + 1)).is_zero());
  }
  // path algebra of one arrow: HH_0 counts the vertices
  CHECK(hh_dims(q, co, 3) == std::vector<std::size_t>{2, 0, 0, 0});
}

TEST_CASE("boundary matrix shapes") {
  Rationals q;
  auto co = coeffs(q, truncated_poly(3));
  auto b1 = bar_boundary(q, co, 1);
  CHECK(b1.rows() == 3);
  CHECK(b1.cols() == 9);
  // b(m, a) = m a - a m vanishes for a commutative algebra
  CHECK(b1.is_zero());
  auto b2 = bar_boundary(q, co, 2);
  CHECK(b2.rows() == 9);
  CHECK(b2.cols() == 27);
}

TEST_CASE("a change of basis keeps the dimensions") {
  Rationals q;
  CHECK(hh_dims(q, coeffs(q, shifted_dual()), 5) == hh_dims(q, coeffs(q, truncated_poly(2)), 5));
  PrimeField f2(2);
  CHECK(hh_dims(f2, coeffs(f2, shifted_dual()), 5) == std::vector<std::size_t>(6, 2));
}

TEST_CASE("augmentation coefficients") {
  Rationals q;
  auto a = truncated_poly(2);
  Coefficients<Rationals> co(q, a, Bimodule(1, 2, {{0, 0, 0, 1}}, {{0, 0, 0, 1}}));
  CHECK(hh_dims(q, co, 5) == std::vector<std::size_t>(6, 1));
}

TEST_CASE("size caps") {
  Rationals q;
  CHECK_THROWS_AS(hh_dims(q, coeffs(q, truncated_poly(2)), 7), ValidationError);
  CHECK_THROWS_AS(hh_dims(q, coeffs(q, truncated_poly(5)), 1), ValidationError);
  CHECK_NOTHROW(hh_dims(q, coeffs(q, truncated_poly(4)), 2));
}

TEST_CASE("polygon cohomology against Hochschild homology") {
  Rationals q;
  auto k = coeffs(q, ground_field().first);
  auto p3 = check_polygon_theorem(q, k, 3);
  CHECK(p3.check.ok);
  CHECK(p3.multipath == BettiTable{{3, 1}});

  auto dual = coeffs(q, truncated_poly(2));
  auto p2 = check_polygon_theorem(q, dual, 2);
  CHECK_MESSAGE(p2.check.ok, (p2.check.failures.empty() ? "" : p2.check.failures.front()));
  CHECK(p2.hh == std::vector<std::size_t>{2, 1});
  CHECK(p2.multipath.at(2) == 2);
  CHECK(p2.multipath.at(1) == 1);

  PrimeField f2(2);
  auto p4 = check_polygon_theorem(f2, coeffs(f2, ground_field().first), 4);
  CHECK(p4.check.ok);
  CHECK(p4.multipath == BettiTable{{4, 1}});

  auto d3 = check_polygon_theorem(f2, coeffs(f2, truncated_poly(2)), 3);
  CHECK(d3.check.ok);
  CHECK(d3.hh == std::vector<std::size_t>{2, 2, 2});

  CHECK_THROWS_AS(check_polygon_theorem(q, k, 0), ValidationError);
}

TEST_CASE("polygon cohomology with non-commutative coefficients") {
  Rationals q;
  auto a = FiniteAlgebra(3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, {1, 0, 1});
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = check_polygon_theorem(q, coeffs(q, a), n);
    CHECK_MESSAGE(r.check.ok, (r.check.failures.empty() ? "" : r.check.failures.front()));
  }
}
