#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "melon/errors.hpp"
#include "melon/laurent_poly.hpp"
#include "melon/poly_matrix.hpp"
#include "melon/serialize.hpp"
#include "oracles.hpp"

using namespace melon;
using testing_helpers::coeffs;
using testing_helpers::poly;
using testing_helpers::q;

TEST_CASE("addition") {
  CHECK(poly({{0, 1}, {1, 1}}) + poly({{0, 1}, {1, -1}}) == LaurentPoly(2));
  const auto p = poly({{-3, 4}, {2, 7}});
  CHECK(p + LaurentPoly() == p);
  const auto s = q(-1) + q(1);
  CHECK(s.term_count() == 2);
  CHECK(s.min_exp() == -1);
  CHECK(s.max_exp() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).term_count() == 0);
}

TEST_CASE("multiplication") {
  CHECK(coeffs({1, 1}) * coeffs({1, -1}) == coeffs({1, 0, -1}));
  CHECK(coeffs({1, 1}) * coeffs({1, 0, 1}) == coeffs({1, 1, 1, 1}));
  CHECK(q(-1) * q(1) == LaurentPoly(1));
  CHECK((LaurentPoly() * coeffs({1, 2})).is_zero());
}

TEST_CASE("multiplication with wide spans and big coefficients") {
  const auto a = q(-1000) + LaurentPoly::monomial(BigInt("123456789012345678901234567890"), 1000);
  const auto b = q(5) - q(-5);
  const auto expected = q(-995) - q(-1005) + LaurentPoly::monomial(BigInt("123456789012345678901234567890"), 1005) -
                        LaurentPoly::monomial(BigInt("123456789012345678901234567890"), 995);
  CHECK(a * b == expected);
}

TEST_CASE("exact division") {
  CHECK(exact_div(coeffs({1, 0, 0, 0, -1}), coeffs({1, -1})) == coeffs({1, 1, 1, 1}));
  CHECK(exact_div(coeffs({1, 0, -1}), coeffs({1, -1})) == coeffs({1, 1}));
  CHECK_THROWS_AS(exact_div(coeffs({1, 1}), coeffs({1, -1})), NotDivisible);
  CHECK_THROWS_AS(exact_div(coeffs({1}), LaurentPoly()), NotDivisible);
  CHECK(exact_div(LaurentPoly(), coeffs({1, 1})).is_zero());
  CHECK(exact_div(q(3) - q(-2), q(-2)) == q(5) - LaurentPoly(1));
  CHECK_THROWS_AS(exact_div(LaurentPoly(3), LaurentPoly(2)), NotDivisible);
}

TEST_CASE("eval_at_one") {
  CHECK(eval_at_one(coeffs({1, 1, 1})) == 3);
  CHECK(eval_at_one(LaurentPoly()) == 0);
  CHECK(eval_at_one(q(-1) + q(1)) == 2);
}

TEST_CASE("canonical form and printing") {
  const auto p = LaurentPoly::from_terms({{2, -3}, {-1, 1}, {0, 2}, {2, 0}, {0, 0}});
  CHECK(p.to_string() == "q^-1 + 2 - 3*q^2");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::from_terms({{1, 2}, {1, -2}}).is_zero());
  CHECK(coeffs({1, 2, 1}).is_palindromic());
  CHECK_FALSE(coeffs({1, 2}).is_palindromic());
}

TEST_CASE("ring axioms on seeded random polynomials") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = oracle::random_poly(rng);
    const auto b = oracle::random_poly(rng);
    const auto c = oracle::random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    CHECK(oracle::to_map(a * b) == oracle::naive_mul(oracle::to_map(a), oracle::to_map(b)));
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("small determinants") {
  PolyMatrix m = PolyMatrix::generate(2, 2, [](std::size_t r, std::size_t c) { return r == c ? LaurentPoly(1) : q(); });
  CHECK(det_fraction_free(m) == coeffs({1, 0, -1}));
  CHECK(det_fraction_free(PolyMatrix::generate(3, 3, [](std::size_t r, std::size_t c) {
          return LaurentPoly(r == c ? 1L : 0L);
        })) == LaurentPoly(1));
  CHECK(det_fraction_free(PolyMatrix::generate(2, 2, [](std::size_t, std::size_t) { return LaurentPoly(1); }))
            .is_zero());
  CHECK(det_fraction_free(PolyMatrix(0, 0)) == LaurentPoly(1));
  CHECK_THROWS_AS(det_fraction_free(PolyMatrix(2, 3)), PreconditionError);
}

TEST_CASE("determinant needs a row swap") {
  // Zero in the first pivot position.
  PolyMatrix m = PolyMatrix::generate(3, 3, [](std::size_t r, std::size_t c) {
    const long v[3][3] = {{0, 1, 2}, {1, 0, 3}, {4, 5, 0}};
    return LaurentPoly(v[r][c]);
  });
  CHECK(det_fraction_free(m) == LaurentPoly(22));
}

TEST_CASE("fraction-free determinant against cofactor expansion") {
  std::mt19937_64 rng(77);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::vector<LaurentPoly>> rows(n, std::vector<LaurentPoly>(n));
      std::uniform_int_distribution<int> zero(0, 3);
      for (auto& row : rows) {
        for (auto& e : row) e = zero(rng) == 0 ? LaurentPoly() : oracle::random_poly(rng, 3, 2, 4);
      }
      const auto m = PolyMatrix::generate(n, n, [&](std::size_t r, std::size_t c) { return rows[r][c]; });
      CHECK(det_fraction_free(m) == oracle::laplace_det(rows));

      std::vector<std::vector<BigInt>> ints(n, std::vector<BigInt>(n));
      std::uniform_int_distribution<int> small(-5, 5);
      for (auto& row : ints) {
        for (auto& e : row) e = small(rng);
      }
      const auto im = IntMatrix::generate(n, n, [&](std::size_t r, std::size_t c) { return ints[r][c]; });
      CHECK(det_fraction_free(im) == oracle::laplace_det(ints));
    }
  }
}

TEST_CASE("vandermonde") {
  const std::vector<Exponent> a01{0, 1};
  CHECK(vandermonde(a01) == q() - LaurentPoly(1));
  const std::vector<Exponent> a012{0, 1, 2};
  CHECK(vandermonde(a012) == (q() - LaurentPoly(1)) * (q(2) - LaurentPoly(1)) * (q(2) - q()));
  const std::vector<Exponent> a00{0, 0};
  CHECK(vandermonde(a00).is_zero());
  CHECK(vandermonde(std::vector<Exponent>{}) == LaurentPoly(1));
}

TEST_CASE("vandermonde against the power determinant") {
  // det(x_j^{N-k}) with x_j = q^{a_j} equals (-1)^{N(N-1)/2} prod_{m<l}(x_l - x_m).
  const std::vector<std::vector<Exponent>> points{{3}, {0, 1}, {2, -1}, {0, 1, 2}, {-2, 5, 1}, {0, 4, -3, 7}};
  for (const auto& a : points) {
    const std::size_t n = a.size();
    std::vector<std::vector<LaurentPoly>> rows(n, std::vector<LaurentPoly>(n));
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) rows[k][j] = q(a[j] * static_cast<Exponent>(n - 1 - k));
    }
    const auto det = oracle::laplace_det(rows);
    const bool flip = (n * (n - 1) / 2) % 2 == 1;
    CHECK(vandermonde(a) == (flip ? -det : det));
    CHECK(alternant_vandermonde(a) == det);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("polynomial wire format") {
  const auto p = q(-2) * LaurentPoly(-3) + LaurentPoly(1) + LaurentPoly::monomial(BigInt("98765432109876543210"), 4);
  const std::string text = serialize_poly(p);
  CHECK(text == R"([[-2,"-3"],[0,"1"],[4,"98765432109876543210"]])");
  CHECK(parse_poly(text) == p);
  CHECK(serialize_poly(LaurentPoly()) == "[]");
  CHECK(parse_poly("[]").is_zero());
  CHECK_THROWS_AS(parse_poly(R"([[1,"2"],[0,"1"]])"), ParseError);
  CHECK_THROWS_AS(parse_poly(R"([[0,"1"],[0,"1"]])"), ParseError);
  CHECK_THROWS_AS(parse_poly(R"([[0,"0"]])"), ParseError);
  CHECK_THROWS_AS(parse_poly(R"([[0,"01"]])"), ParseError);
  CHECK_THROWS_AS(parse_poly(R"([[0,"1x"]])"), ParseError);
  CHECK_THROWS_AS(parse_poly(R"([[0,1]])"), ParseError);
  CHECK_THROWS_AS(parse_poly("{"), ParseError);
}

TEST_CASE("serialization round-trips bit-exactly") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_poly(rng, 8, 50, 1000);
    p *= LaurentPoly::monomial(BigInt("1000000000000000000000"), 0) + LaurentPoly(trial);
    const std::string text = serialize_poly(p);
    const auto back = parse_poly(text);
    CHECK(back == p);
    CHECK(serialize_poly(back) == text);
  }
}
