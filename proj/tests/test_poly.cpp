#include <doctest.h>

#include <random>

#include "pentafold/poly.hpp"

using namespace pentafold;

TEST_SUITE_BEGIN("poly");

namespace {

Poly2 random_poly(std::mt19937& mt, int max_deg) {
  std::uniform_int_distribution<int> c(-4, 4), d(0, max_deg);
  int du = d(mt), dv = d(mt);
  std::vector<Poly1> rows;
  for (int i = 0; i <= du; ++i) {
    std::vector<Rational> coeffs;
    for (int j = 0; j <= dv; ++j) coeffs.emplace_back(c(mt));
    rows.emplace_back(std::move(coeffs));
  }
  return Poly2(std::move(rows));
}

}  // namespace

TEST_CASE("univariate gcd and division") {
  // (x-1)(x+2) and (x-1)(x-3) share x-1
  Poly1 x = Poly1::var();
  Poly1 a = (x - Poly1(Rational(1))) * (x + Poly1(Rational(2)));
  Poly1 b = (x - Poly1(Rational(1))) * (x - Poly1(Rational(3)));
  Poly1 g = Poly1::gcd(a, b);
  CHECK(g.degree() == 1);
  CHECK(g.eval(Rational(1)).is_zero());
  CHECK(a.div_exact(g) * g == a);
  CHECK_THROWS(a.div_exact(x - Poly1(Rational(5))));
}

TEST_CASE("bivariate gcd pulls out shared factors") {
  Poly2 U = Poly2::u(), V = Poly2::v(), two = Poly2::constant(2);
  Poly2 g = Poly2::gcd(U * (two - V), U * V);
  CHECK(g.degree_u() == 1);
  CHECK(g.eval(Rational(5), Rational(9)) == Rational(5));  // g = u up to sign

  Poly2 shared = (U - V) * (U + V * V);
  Poly2 g2 = Poly2::gcd(shared * (two - V), shared * U * V);
  CHECK(g2.div_exact(Poly2::normalize(shared)) == Poly2::constant(1));
}

TEST_CASE("gcd of coprime polynomials is a unit") {
  Poly2 U = Poly2::u(), V = Poly2::v();
  Poly2 g = Poly2::gcd(U + V, U - V);
  CHECK(g.degree_u() == 0);
  CHECK(g == Poly2::constant(1));
}

TEST_CASE("product-then-divide round-trips on random polynomials") {
  std::mt19937 mt(23);
  for (int it = 0; it < 60; ++it) {
    Poly2 a = random_poly(mt, 3), b = random_poly(mt, 3);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).div_exact(b) == a);
    Poly2 g = Poly2::gcd(a * b, b);
    // b divides the gcd of (ab, b)
    CHECK_NOTHROW(Poly2::normalize(b).div_exact(g));
  }
}

TEST_CASE("evaluation matches composition") {
  std::mt19937 mt(29);
  for (int it = 0; it < 40; ++it) {
    Poly2 a = random_poly(mt, 3), b = random_poly(mt, 3);
    Rational u(3, 7), v(-2, 5);
    CHECK((a * b).eval(u, v) == a.eval(u, v) * b.eval(u, v));
    CHECK((a + b).eval(u, v) == a.eval(u, v) + b.eval(u, v));
  }
}

TEST_SUITE_END();
