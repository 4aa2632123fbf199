#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "richmult/chart.hpp"
#include "richmult/groebner.hpp"
#include "richmult/local.hpp"
#include "richmult/report.hpp"

using namespace richmult;

namespace {

std::vector<std::string> lines(const PolyIdeal& I, const Chart& chart, const char* prefix) {
  std::vector<std::string> out;
  auto names = chart.variable_names(prefix);
  for (const auto& g : I.generators) out.push_back(to_string(g, names));
  return out;
}

// Determinant by cofactor expansion along the first row.
Polynomial det(const std::vector<std::vector<Polynomial>>& m) {
  if (m.size() == 1) return m[0][0];
  Polynomial sum;
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Polynomial term = m[0][c] * det(minor);
    if (c % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

void subsets(int n, int k, std::vector<int>& cur, int start, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == k) return f(cur);
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, f);
    cur.pop_back();
  }
}

// All (r+1)-minors of the given rows, r the allowed rank.
void add_minors(const Chart& chart, const std::vector<int>& rows, int r, std::vector<Polynomial>& out) {
  const int d = chart.shape().d();
  if (r >= d || r >= static_cast<int>(rows.size())) return;
  std::vector<int> rs, cs;
  subsets(static_cast<int>(rows.size()), r + 1, rs, 0, [&](const std::vector<int>& rsel) {
    subsets(d, r + 1, cs, 0, [&](const std::vector<int>& csel) {
      std::vector<std::vector<Polynomial>> m;
      for (int a : rsel) {
        std::vector<Polynomial> row;
        for (int b : csel) row.push_back(chart.entry_polynomial(rows[static_cast<std::size_t>(a)], b));
        m.push_back(row);
      }
      out.push_back(det(m));
    });
  });
}

// Every rank condition at every position, with no pruning.
std::vector<Polynomial> all_schubert_minors(const Chart& chart, const CosetRep& w) {
  const int n = chart.shape().n(), d = chart.shape().d();
  std::vector<Polynomial> out;
  for (int j = 1; j < n; ++j) {
    std::vector<int> rows;
    for (int q = j + 1; q <= n; ++q) rows.push_back(q);
    add_minors(chart, rows, d - w.count_at_most(j), out);
  }
  return out;
}

std::vector<Polynomial> all_opposite_minors(const Chart& chart, const CosetRep& v) {
  const int n = chart.shape().n(), d = chart.shape().d();
  std::vector<Polynomial> out;
  for (int j = 2; j <= n; ++j) {
    std::vector<int> rows;
    for (int q = 1; q < j; ++q) rows.push_back(q);
    add_minors(chart, rows, d - v.count_at_least(j), out);
  }
  return out;
}

std::vector<AffinePoint> grid_points(std::size_t vars, const std::vector<Rational>& grid) {
  std::vector<AffinePoint> out;
  std::vector<std::size_t> digit(vars, 0);
  for (;;) {
    AffinePoint p = AffinePoint::zeros(vars);
    for (std::size_t k = 0; k < vars; ++k) p[k] = grid[digit[k]];
    out.push_back(p);
    std::size_t k = vars;
    while (k > 0 && ++digit[k - 1] == grid.size()) digit[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("example chart: equations of the Schubert and opposite Schubert varieties") {
  GrassShape s(3, 7);
  CosetRep tau(s, {2, 5, 6}), w(s, {3, 5, 6}), v(s, {1, 2, 5});
  Chart chart(s, tau);
  CHECK(lines(schubert_ideal(chart, w), chart, "x") ==
        std::vector<std::string>{"x_7_6", "x_7_5", "x_7_2", "x_4_2"});
  CHECK(lines(opposite_ideal(chart, v), chart, "x") ==
        std::vector<std::string>{"x_3_6*x_4_5 - x_3_5*x_4_6", "x_1_6*x_4_5 - x_1_5*x_4_6", "x_1_6*x_3_5 - x_1_5*x_3_6"});

  std::vector<std::pair<RootIndex, Rational>> coords{{{1, 2}, 1}, {{1, 6}, 1}, {{3, 6}, -1}};
  AffinePoint m = chart.point(coords);
  CHECK(richardson_ideal(chart, w, v).vanishes_at(m.coords()));
  CHECK(lines(translate_to_origin(opposite_ideal(chart, v), m), chart, "y") ==
        std::vector<std::string>{"y_3_6*y_4_5 - y_3_5*y_4_6 - y_4_5", "y_1_6*y_4_5 - y_1_5*y_4_6 + y_4_5",
                                 "y_1_6*y_3_5 - y_1_5*y_3_6 + y_1_5 + y_3_5"});
}

TEST_CASE("the 3-minor on rows 1, 3, 4 is redundant for the opposite variety") {
  GrassShape s(3, 7);
  Chart chart(s, CosetRep(s, {2, 5, 6}));
  PolyIdeal I = opposite_ideal(chart, CosetRep(s, {1, 2, 5}));
  auto gb = groebner_basis(I.generators);
  std::vector<std::vector<Polynomial>> m;
  for (int row : {1, 3, 4}) {
    std::vector<Polynomial> r;
    for (int slot = 0; slot < 3; ++slot) r.push_back(chart.entry_polynomial(row, slot));
    m.push_back(r);
  }
  CHECK(normal_form(det(m), gb).is_zero());
}

TEST_CASE("essential rank conditions generate the same ideal as all rank conditions") {
  for (auto [d, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
    GrassShape s(d, n);
    for (const auto& tau : all_coset_reps(s)) {
      Chart chart(s, tau);
      for (const auto& w : all_coset_reps(s)) {
        if (!bruhat_leq(tau, w)) {
          CHECK(schubert_ideal(chart, w).is_unit());
          continue;
        }
        auto full = interreduce(all_schubert_minors(chart, w));
        CHECK(schubert_ideal(chart, w).generators == full);
      }
      for (const auto& v : all_coset_reps(s)) {
        if (!bruhat_leq(v, tau)) {
          CHECK(opposite_ideal(chart, v).is_unit());
          continue;
        }
        auto full = interreduce(all_opposite_minors(chart, v));
        CHECK(opposite_ideal(chart, v).generators == full);
      }
    }
  }
}

TEST_CASE("chart ideals vanish exactly on the rank-table members") {
  const std::vector<Rational> grid{-1, 0, 1};
  for (auto [d, n] : {std::pair{2, 4}, std::pair{2, 5}}) {
    GrassShape s(d, n);
    for (const auto& tau : all_coset_reps(s)) {
      Chart chart(s, tau);
      auto points = grid_points(chart.num_vars(), grid);
      for (const auto& w : all_coset_reps(s)) {
        PolyIdeal I = schubert_ideal(chart, w);
        PolyIdeal J = opposite_ideal(chart, w);
        for (const auto& x : points) {
          auto m = oracle::chart_matrix(chart, x);
          CHECK(I.vanishes_at(x.coords()) == oracle::in_schubert(m, w.entries()));
          CHECK(J.vanishes_at(x.coords()) == oracle::in_opposite(m, w.entries()));
        }
      }
    }
  }
}

TEST_CASE("chart ideals at e_tau: dimensions and cones") {
  for (auto [d, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
    GrassShape s(d, n);
    for (const auto& tau : all_coset_reps(s)) {
      Chart chart(s, tau);
      for (const auto& w : all_coset_reps(s)) {
        if (bruhat_leq(tau, w)) {
          PolyIdeal I = schubert_ideal(chart, w);
          CHECK(local_data_at_origin(I).dimension == w.length());
          CHECK(is_cone_over_origin(I));
        }
        if (bruhat_leq(w, tau)) {
          PolyIdeal J = opposite_ideal(chart, w);
          CHECK(local_data_at_origin(J).dimension == s.dimension() - w.length());
          CHECK(is_cone_over_origin(J));
        }
      }
    }
  }
}

TEST_CASE("cell of a point and chart coordinates") {
  GrassShape s(2, 5);
  for (const auto& tau : all_coset_reps(s)) {
    Chart chart(s, tau);
    for (const auto& x : grid_points(chart.num_vars(), {-1, 0, 2})) {
      RationalMatrix m = chart.matrix_at(x);
      RationalMatrix g({{2, 1}, {1, 1}});
      CHECK(chart_coordinates(chart, m * g) == x);
      if (in_cell(chart, x)) CHECK(cell_of_point(s, m * g) == tau);
    }
  }
}

TEST_CASE("translation and the additive group action") {
  GrassShape s(2, 5);
  CosetRep tau(s, {2, 4});
  Chart chart(s, tau);
  AffinePoint x = AffinePoint(std::vector<Rational>{1, 2, -1, Rational(1, 2), 0, 3});
  AffinePoint m = AffinePoint(std::vector<Rational>{0, 1, 0, 2, -1, 0});
  CHECK(c_action(0, x, m) == x);
  CHECK(c_action(2, c_action(3, x, m), m) == c_action(5, x, m));
  CHECK(c_action(1, m, m) == chart.origin());
  CHECK(scale_action(1, x) == x);

  PolyIdeal I = schubert_ideal(chart, CosetRep(s, {3, 5}));
  for (const auto& p : grid_points(chart.num_vars(), {-1, 0, 1})) {
    if (!in_cell(chart, p)) continue;
    PolyIdeal T = translate_to_origin(I, p);
    CHECK(T.vanishes_at(chart.origin().coords()) == I.vanishes_at(p.coords()));
  }
  CHECK(translate_to_origin(I, chart.origin()) == I);
}

TEST_CASE("Richardson ideal is the union of both generator sets") {
  GrassShape s(2, 4);
  CosetRep w(s, {2, 4}), v(s, {1, 3}), tau(s, {2, 3});
  Chart chart(s, tau);
  PolyIdeal R = richardson_ideal(chart, w, v);
  for (const auto& g : schubert_ideal(chart, w).generators) CHECK(normal_form(g, groebner_basis(R.generators)).is_zero());
  for (const auto& g : opposite_ideal(chart, v).generators) CHECK(normal_form(g, groebner_basis(R.generators)).is_zero());
  CHECK(richardson_ideal(Chart(s, CosetRep(s, {3, 4})), w, v).is_unit());
}

TEST_CASE("charts beyond the variable budget are rejected") {
  CHECK_THROWS_AS(Chart(GrassShape(4, 8), CosetRep(GrassShape(4, 8), {1, 2, 3, 4})), Error);
}
