#include <random>

#include "doctest.h"
#include "richmult/local.hpp"
#include "richmult/quadric.hpp"

using namespace richmult;

namespace {

QuadricPoint point(std::initializer_list<long> xs) {
  QuadricPoint x;
  for (long c : xs) x.push_back(Rational(c));
  return x;
}

// A random point of the cell of e_i: x_i = 1, later coordinates zero, Q(x) = 0.
QuadricPoint random_cell_point(const QuadricShape& s, int i, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  QuadricPoint x(static_cast<std::size_t>(s.size()), 0);
  for (int c = 1; c < i; ++c) x[static_cast<std::size_t>(c - 1)] = Rational(num(rng), den(rng));
  x[static_cast<std::size_t>(i - 1)] = 1;
  if (i > s.n() + 1) {
    int p = 2 * s.n() + 2 - i;  // x_p appears in Q only through 2 x_p x_i
    x[static_cast<std::size_t>(p - 1)] = 0;
    x[static_cast<std::size_t>(p - 1)] = -q_eval(s, x) / 2;
  }
  for (auto& c : x) c.canonicalize();
  return x;
}

}  // namespace

TEST_CASE("index n+1 is not a Schubert index") {
  QuadricShape s(2);
  CHECK_THROWS_AS(SchubertIndex(s, 3), Error);
  CHECK_THROWS_AS(SchubertIndex(s, 0), Error);
  CHECK_THROWS_AS(SchubertIndex(s, 6), Error);
  CHECK_NOTHROW(SchubertIndex(s, 5));
  CHECK_THROWS_AS(QuadricShape(0), Error);
}

TEST_CASE("closed forms in P^4") {
  QuadricShape s(2);
  SchubertIndex i4(s, 4), i5(s, 5), j1(s, 1), j2(s, 2);
  auto e1 = point({1, 0, 0, 0, 0});
  auto e5 = point({0, 0, 0, 0, 1});
  CHECK(q_eval(s, point({1, 1, 0, 0, 0})) == 0);
  CHECK(q_eval(s, point({0, 0, 1, 0, 0})) == 1);
  CHECK(mult_schubert_quadric(s, i4, e1) == 2);  // vertex of the cone x_3^2 + 2 x_2 x_4 = 0
  CHECK(mult_schubert_quadric(s, i4, point({0, 1, 0, 0, 0})) == 1);
  CHECK(mult_schubert_quadric(s, i5, e1) == 1);
  CHECK(mult_opposite_quadric(s, j2, e5) == 2);
  CHECK(mult_opposite_quadric(s, j1, e5) == 1);
  CHECK(richardson_mult_quadric(s, i4, j1, e1) == 2);
  CHECK_THROWS_AS(mult_schubert_quadric(s, i4, e5), Error);
  CHECK_THROWS_AS(mult_schubert_quadric(s, i5, point({0, 0, 1, 0, 0})), Error);
  CHECK(singular_locus_index(s, i4) == 1);
  CHECK(!singular_locus_index(s, i5));
  CHECK(opposite_singular_locus_index(s, j2) == 5);
  CHECK(!opposite_singular_locus_index(s, j1));
}

TEST_CASE("chart ideal of the quadric cone at its vertex") {
  QuadricShape s(2);
  PolyIdeal I = quadric_chart_ideal(s, 1, 4, point({1, 0, 0, 0, 0}));
  CHECK(I.num_vars == 3);
  CHECK(multiplicity_at_origin(I) == 2);
  CHECK(quadric_jacobian_singular(s, 1, 4, point({1, 0, 0, 0, 0})));
  PolyIdeal lin = quadric_chart_ideal(s, 1, 2, point({1, 1, 0, 0, 0}));
  CHECK(lin.is_zero());
  CHECK_THROWS_AS(quadric_chart_ideal(s, 1, 4, point({0, 0, 1, 0, 0})), Error);
}

TEST_CASE("closed forms agree with the oracle and the Jacobian criterion") {
  const std::vector<Rational> grid{-1, 0, 1};
  for (int n : {1, 2, 3}) {
    QuadricShape s(n);
    for (int iv = 1; iv <= s.size(); ++iv) {
      if (iv == n + 1) continue;
      SchubertIndex i(s, iv);
      for (const auto& x : quadric_grid_points(s, 1, iv, grid)) {
        int mu = mult_schubert_quadric(s, i, x);
        CHECK(multiplicity_at_origin(quadric_chart_ideal(s, 1, iv, x)) == mu);
        bool singular = quadric_jacobian_singular(s, 1, iv, x);
        CHECK(singular == (mu == 2));
        auto sing = singular_locus_index(s, i);
        bool in_sing = sing && schubert_member(s, SchubertIndex(s, *sing), x);
        CHECK(in_sing == singular);
      }
      SchubertIndex j(s, iv);
      for (const auto& x : quadric_grid_points(s, iv, s.size(), grid)) {
        int mu = mult_opposite_quadric(s, j, x);
        CHECK(multiplicity_at_origin(quadric_chart_ideal(s, iv, s.size(), x)) == mu);
        bool singular = quadric_jacobian_singular(s, iv, s.size(), x);
        CHECK(singular == (mu == 2));
        auto sing = opposite_singular_locus_index(s, j);
        bool in_sing = false;
        if (sing) {
          in_sing = true;
          for (int c = 1; c < *sing; ++c)
            if (x[static_cast<std::size_t>(c - 1)] != 0) in_sing = false;
        }
        CHECK(in_sing == singular);
      }
    }
  }
}

TEST_CASE("b matrices") {
  std::mt19937 rng(3);
  for (int n : {1, 2, 3}) {
    QuadricShape s(n);
    for (int iv = 1; iv <= s.size(); ++iv) {
      if (iv == n + 1) continue;
      for (int trial = 0; trial < 10; ++trial) {
        QuadricPoint x = random_cell_point(s, iv, rng);
        REQUIRE(q_eval(s, x) == 0);
        RationalMatrix b = b_matrix(s, SchubertIndex(s, iv), x);
        CHECK(check_b_matrix(s, SchubertIndex(s, iv), x, b).all());
      }
    }
  }
  QuadricShape s(2);
  CHECK_THROWS_AS(b_matrix(s, SchubertIndex(s, 4), point({1, 0, 0, 0, 0})), Error);
  CHECK_THROWS_AS(b_matrix(s, SchubertIndex(s, 4), point({0, 1, 0, 1, 0})), Error);
}

TEST_CASE("singular loci of X_i and X^j never meet") {
  const std::vector<Rational> grid{-1, 0, 1};
  for (int n : {1, 2, 3}) {
    QuadricShape s(n);
    for (int iv = 1; iv <= s.size(); ++iv)
      for (int jv = 1; jv <= iv; ++jv) {
        if (iv == n + 1 || jv == n + 1) continue;
        CHECK(verify_disjoint_sing(s, SchubertIndex(s, iv), SchubertIndex(s, jv), grid));
      }
  }
}

TEST_CASE("quadric sweep") {
  QuadricShape s(2);
  std::vector<Rational> grid{-1, 0, 1};
  SweepResult r = quadric_sweep(s, grid, 100000, 2);
  CHECK(r.checked() > 0);
  CHECK(r.failed() == 0);
  for (const auto& rep : r.reports) {
    CHECK(rep.family == "quadric");
    CHECK(rep.dimension_ok);
    CHECK(rep.mu_wv_oracle != 4);
  }
}
