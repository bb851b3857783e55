#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "melon/errors.hpp"
#include "melon/paths.hpp"
#include "melon/schur.hpp"
#include "melon/serialize.hpp"
#include "oracles.hpp"

using namespace melon;
using testing_helpers::coeffs;

namespace {

std::vector<Watermelon> all_watermelons(std::size_t n, int m, std::size_t k) {
  std::vector<Watermelon> out;
  WatermelonStream stream(n, m, k);
  while (auto w = stream.next()) out.push_back(*w);
  return out;
}

std::vector<int> nonzero(const Partition& lambda) {
  std::vector<int> out;
  for (int v : lambda.parts()) {
    if (v > 0) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("C-nest of a single cell") {
  const auto nest = nest_from_tableau(Tableau{{{1}}}, 2);
  CHECK(nest.line_steps() == std::vector<int>{0, 1});
  CHECK(nest.volume() == 1);
  CHECK(nest.weighted_volume() == 2);
  const auto empty = nest_from_tableau(Tableau{}, 3);
  CHECK(empty.line_steps() == std::vector<int>{0, 0, 0});
  CHECK(empty.volume() == 0);
}

TEST_CASE("C-nest of a six-row tableau") {
  const Tableau t{{{1, 1, 2, 3, 3}, {2, 2, 3, 4, 6}, {3, 4, 4}, {4, 5}, {5, 6}}};
  REQUIRE(t.is_semistandard(1, 6));
  const auto nest = nest_from_tableau(t, 6);
  CHECK(nest.shape == Partition({5, 5, 3, 2, 2, 0}));
  // Letter e sits on line x_{7-e}: letters 1..6 occur 2,3,4,4,2,2 times.
  CHECK(nest.line_steps() == std::vector<int>{2, 2, 4, 4, 3, 2});
  CHECK(nest.path_steps[0] == std::vector<int>{0, 0, 0, 2, 1, 2});
  CHECK(tableau_from_nest(nest) == t);
  CHECK_THROWS_AS(nest_from_tableau(t, 5), PreconditionError);
}

TEST_CASE("nests and tableaux are in bijection") {
  for (const auto& lambda : partitions_in_box(3, 3)) {
    const auto tableaux = ssyt_list(lambda, 1, 3);
    std::set<std::vector<std::vector<int>>> nests;
    for (const auto& t : tableaux) {
      const auto nest = nest_from_tableau(t, 3);
      CHECK(tableau_from_nest(nest) == t);
      CHECK(nest.weighted_volume() == nest.volume() + lambda.weight());
      nests.insert(nest.path_steps);
    }
    CHECK(nests.size() == tableaux.size());
    CHECK(static_cast<long>(tableaux.size()) == oracle::ssyt_count(nonzero(lambda), 3));
  }
}

TEST_CASE("complement tableau") {
  const Tableau t{{{1, 1}, {2}}};
  const auto c = complement_tableau(t, 3, 2);
  CHECK(c.shape() == Partition({2, 1, 0}).complement(3, 2));
  CHECK(c.is_semistandard(1, 3));
  CHECK(complement_tableau(c, 3, 2) == t);
  for (const auto& lambda : partitions_in_box(3, 3)) {
    for (const auto& tab : ssyt_list(lambda, 1, 3)) {
      const auto comp = complement_tableau(tab, 3, 3);
      CHECK(comp.shape() == lambda.complement(3, 3));
      CHECK(comp.is_semistandard(1, 3));
      CHECK(complement_tableau(comp, 3, 3) == tab);
      const auto a = tab.content(3);
      const auto b = comp.content(3);
      for (std::size_t e = 0; e < 3; ++e) CHECK(a[e] + b[e] == 3);
    }
  }
}

TEST_CASE("B-nests") {
  const Partition lambda({2, 1, 0});
  for (const auto& tc : ssyt_list(lambda.complement(3, 2), 1, 3)) {
    const auto nest = bnest_from_tableau(tc, lambda, 3, 2);
    CHECK(tableau_from_bnest(nest) == tc);
    for (std::size_t i = 0; i < 3; ++i) {
      int north = 0;
      for (int s : nest.path_steps[i]) north += s;
      CHECK(north == 2 - lambda[i]);
      for (std::size_t j = i + 1; j < 3; ++j) CHECK(nest.path_steps[i][j] == 0);
    }
  }
  CHECK_THROWS_AS(bnest_from_tableau(Tableau{{{1}}}, lambda, 3, 2), PreconditionError);
}

TEST_CASE("watermelon enumeration examples") {
  const auto one = all_watermelons(1, 1, 0);
  REQUIRE(one.size() == 2);
  CHECK(one[0].lambda.parts() == std::vector<int>{0});
  CHECK(one[1].lambda.parts() == std::vector<int>{1});
  CHECK(all_watermelons(2, 2, 0).size() == 20);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto empty = all_watermelons(n, 0, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].volume() == 0);
  }
}

TEST_CASE("watermelons are valid and distinct") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (std::size_t k = 0; k <= n; ++k) {
        std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
        long minimum = -1;
        for (const auto& w : all_watermelons(n, m, k)) {
          CHECK(w.is_valid());
          CHECK(w.volume() == w.c_nest().weighted_volume() + w.b_nest().volume());
          for (std::size_t j = n - k; j < n; ++j) CHECK(w.lambda[j] == 0);
          const auto l = w.c_nest().line_steps();
          for (std::size_t j = n - k; j < n; ++j) CHECK(l[j] == 0);
          seen.insert({w.c_tableau.rows, w.b_tableau.rows});
          if (minimum < 0 || w.volume() < minimum) minimum = w.volume();
        }
        CHECK(static_cast<BigInt>(static_cast<unsigned long>(seen.size())) ==
              count_deviation(static_cast<long>(n), static_cast<long>(n - k), m));
        CHECK(minimum == 0);
      }
    }
  }
}

TEST_CASE("invalid watermelons are rejected") {
  auto w = all_watermelons(3, 2, 1).back();
  CHECK(w.is_valid());
  auto bad_letter = w;
  bad_letter.c_tableau.rows[0][0] = 1;  // letter below k+1
  CHECK_FALSE(bad_letter.is_valid());
  auto bad_shape = w;
  bad_shape.b_tableau.rows.push_back({3});
  CHECK_FALSE(bad_shape.is_valid());
}

TEST_CASE("watermelon paths are non-intersecting lattice paths") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (std::size_t k = 0; k <= n; ++k) {
        const auto starts = watermelon_starts(n);
        const auto ends = watermelon_ends(n, m);
        std::set<std::vector<std::vector<std::pair<int, int>>>> drawn;
        for (const auto& w : all_watermelons(n, m, k)) {
          const auto paths = lattice_paths(w);
          CHECK(oracle::valid_family(paths, starts, ends));
          std::vector<std::vector<std::pair<int, int>>> key;
          for (const auto& p : paths) key.push_back(oracle::as_pairs(p));
          drawn.insert(std::move(key));
        }
        // Every non-intersecting family with no north steps left of column k
        // is drawn by exactly one watermelon.
        CHECK(drawn == oracle::nonintersecting_families(starts, ends, static_cast<int>(k)));
      }
    }
  }
}

TEST_CASE("endpoints") {
  const auto starts = watermelon_starts(3);
  CHECK(starts[0] == LatticePoint{0, 2});
  CHECK(starts[2] == LatticePoint{2, 0});
  const auto shifted = watermelon_deviation_starts(3, 2);
  CHECK(shifted[0] == LatticePoint{2, 2});
  const auto ends = watermelon_ends(3, 2);
  CHECK(ends[0] == LatticePoint{3, 4});
  CHECK(ends[2] == LatticePoint{5, 2});
}

TEST_CASE("horizontal reading has a constant offset") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (const auto& w : all_watermelons(n, m, k)) {
          const auto reading = w.horizontal_reading();
          REQUIRE(reading.size() == n + static_cast<std::size_t>(m));
          long east = 0;
          long weighted = 0;
          for (std::size_t j = 0; j < reading.size(); ++j) {
            east += reading[j];
            weighted += static_cast<long>(j) * reading[j];
          }
          CHECK(east == static_cast<long>(n * n));
          CHECK(weighted - w.volume() == static_cast<long>(n * n * (n - 1) / 2));
        }
      }
    }
  }
}

TEST_CASE("generating function examples") {
  CHECK(watermelon_genfunc(1, 1, 0) == coeffs({1, 1}));
  for (int m = 0; m <= 5; ++m) {
    LaurentPoly expected;
    for (int e = 0; e <= m; ++e) expected += testing_helpers::q(e);
    CHECK(watermelon_genfunc(1, m, 0) == expected);
  }
  CHECK(watermelon_genfunc(3, 0, 1) == LaurentPoly(1));
  CHECK(closed_genfunc(1, 1, 1) == coeffs({1, 1}));
  const auto w222 = closed_genfunc(2, 2, 2);
  CHECK(eval_at_one(w222) == 20);
  CHECK(w222.max_exp() == 8);
  CHECK(closed_genfunc(3, 0, 3) == LaurentPoly(1));
}

TEST_CASE("generating function matches the Schur sum") {
  // sum_{lambda} q^{|lambda|} S_lambda(1..q^{N-1})^2
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      LaurentPoly sum;
      const auto pt = GeometricPoint::arithmetic(n);
      for (const auto& lambda : partitions_in_box(n, m)) {
        const auto s = schur_bialternant(lambda, pt);
        sum += (s * s).shifted(lambda.weight());
      }
      CHECK(watermelon_genfunc(n, m, 0) == sum);
    }
  }
}

TEST_CASE("generating function against closed product and counts") {
  for (long n = 1; n <= 3; ++n) {
    for (long m = 0; m <= 3; ++m) {
      for (long k = 0; k <= n; ++k) {
        const long l = n - k;
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        const auto w = watermelon_genfunc(static_cast<std::size_t>(n), static_cast<int>(m), static_cast<std::size_t>(k));
        const auto closed = closed_genfunc(n, l, m);
        CHECK(w == closed);
        CHECK(closed.max_exp() == n * l * m);
        CHECK(closed.is_palindromic());
        const BigInt count = count_deviation(n, l, m);
        CHECK(eval_at_one(w) == count);
        CHECK(count_deviation_det(n, l, m, 1) == count);
        CHECK(count_deviation_det(n, l, m, 2) == count);
        CHECK(genfunc_det_forms(n, l, m, 1) == closed);
        CHECK(genfunc_det_forms(n, l, m, 2) == closed);
      }
    }
  }
}

TEST_CASE("counts") {
  for (long l = 0; l <= 4; ++l) {
    for (long m = 0; m <= 4; ++m) {
      CHECK(count_deviation(1, l, m) == binomial(l + m, m));
      CHECK(count_deviation_det(1, l, m, 1) == binomial(l + m, m));
      CHECK(count_deviation_det(1, l, m, 2) == binomial(l + m, m));
    }
  }
  CHECK(count_deviation(2, 2, 2) == 20);
  CHECK(count_deviation(1, 1, 1) == 2);
  CHECK(count_deviation(3, 3, 3) == 980);
  CHECK(count_deviation_det(2, 2, 2, 1) == 20);
  CHECK(count_deviation_det(2, 2, 2, 2) == 20);
  CHECK(genfunc_det_forms(1, 1, 1, 2) == coeffs({1, 1}));
  CHECK(genfunc_det_forms(2, 0, 2, 1) == LaurentPoly(1));
  CHECK(genfunc_det_forms(2, 0, 2, 2) == LaurentPoly(1));
  CHECK(det_form_offset(3, 2) == 6);
}

TEST_CASE("Gessel-Viennot counts") {
  CHECK(gv_count(Partition({1}), 2) == 2);
  CHECK(gv_count(Partition({2, 1}), 3) == 8);
  CHECK(gv_count(Partition(), 3) == 1);
  for (const auto& lambda : partitions_in_box(3, 3)) {
    CHECK(gv_count(lambda, 3) == oracle::ssyt_count(nonzero(lambda), 3));
    CHECK(gv_count(lambda, 3) == eval_at_one(schur_tableau_sum(lambda, GeometricPoint::arithmetic(3))));
  }
}

TEST_CASE("watermelon JSON") {
  for (const auto& w : all_watermelons(3, 2, 1)) {
    const Json j = watermelon_to_json(w);
    CHECK(j["volume"] == w.volume());
    CHECK(watermelon_from_json(j) == w);
    CHECK(watermelon_from_json(Json::parse(j.dump())) == w);
  }
  const auto minimal = all_watermelons(2, 1, 0).front();
  Json j = watermelon_to_json(minimal);
  CHECK(j.dump() ==
        R"({"N":2,"M":1,"k":0,"lambda":[0,0],"c_steps":[0,0],"b_steps":[1,1],"volume":0,"c_tableau":[],"b_tableau":[[1],[2]]})");
  // Step counts alone are enough when the tableau pair is unique.
  Json bare = j;
  bare.erase("c_tableau");
  bare.erase("b_tableau");
  CHECK(watermelon_from_json(bare) == minimal);
  Json wrong_volume = j;
  wrong_volume["volume"] = 3;
  CHECK_THROWS_AS(watermelon_from_json(wrong_volume), ParseError);
  Json wrong_steps = bare;
  wrong_steps["c_steps"] = Json::array({1, 0});
  CHECK_THROWS_AS(watermelon_from_json(wrong_steps), ParseError);
  CHECK_THROWS_AS(watermelon_from_json(Json::parse(R"({"N":2})")), ParseError);
}
