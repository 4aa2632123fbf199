#include "richmult/local.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "richmult/groebner.hpp"
#include "richmult/hilbert.hpp"
#include "richmult/linalg.hpp"

namespace richmult {

namespace {

void require_origin(const PolyIdeal& ideal) {
  for (const auto& g : ideal.generators)
    if (g.constant_term() != 0) throw Error("origin does not lie on the variety");
}

}  // namespace

PolyIdeal tangent_cone(const PolyIdeal& ideal) {
  require_origin(ideal);
  if (ideal.num_vars + 1 > kMaxVars) throw Error("too many variables for homogenization");
  const std::size_t h = ideal.num_vars;
  MonomialOrder order;
  order.homogenizer = h;
  std::vector<Polynomial> homogenized;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) homogenized.push_back(g.homogenize(h));
  auto basis = groebner_basis(homogenized, order);
  std::vector<Polynomial> forms;
  for (const auto& b : basis) forms.push_back(b.specialize(h, 1).lowest_form());
  return {ideal.num_vars, canonical_generators(std::move(forms)), {}};
}

LocalData local_data_at_origin(const PolyIdeal& ideal) {
  PolyIdeal cone = tangent_cone(ideal);
  HilbertData data = homogeneous_hilbert_data(cone);
  return {data.degree, data.dimension};
}

std::int64_t multiplicity_at_origin(const PolyIdeal& ideal) { return local_data_at_origin(ideal).multiplicity; }

bool is_homogeneous_ideal(const PolyIdeal& ideal) {
  if (ideal.is_unit()) throw Error("unit ideal: empty variety has no cone structure");
  auto basis = groebner_basis(ideal.generators);
  for (const auto& b : basis) {
    if (b.is_homogeneous()) continue;
    for (unsigned d = b.lowest_degree(); d <= b.total_degree(); ++d) {
      Polynomial part = b.homogeneous_component(d);
      if (!part.is_zero() && !normal_form(part, basis).is_zero()) return false;
    }
  }
  return true;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

class MonomialIndex {
 public:
  MonomialIndex(std::size_t num_vars, int below_degree) : counts_(static_cast<std::size_t>(below_degree), 0) {
    Monomial m;
    for (int d = 0; d < below_degree; ++d) enumerate(m, 0, num_vars, static_cast<unsigned>(d), d);
  }

  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  std::size_t index(const Monomial& m) const { return index_.at(m); }
  const std::vector<std::size_t>& degree_counts() const { return counts_; }

  /// All monomials of degree < bound.
  std::span<const Monomial> below(int bound) const {
    std::size_t n = 0;
    for (int d = 0; d < bound && d < static_cast<int>(counts_.size()); ++d) n += counts_[d];
    return {monomials_.data(), n};
  }

 private:
  void enumerate(Monomial& m, std::size_t var, std::size_t num_vars, unsigned left, int degree) {
    if (var + 1 >= num_vars) {
      if (num_vars == 0) {
        if (left != 0) return;
      } else {
        m.set(var, left);
      }
      index_.emplace(m, monomials_.size());
      monomials_.push_back(m);
      ++counts_[static_cast<std::size_t>(degree)];
      if (num_vars != 0) m.set(var, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(var, e);
      enumerate(m, var + 1, num_vars, left - e, degree);
    }
    m.set(var, 0);
  }

  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<std::size_t> counts_;
};

// row -= factor * pivot (both sorted by column).
SparseRow sub_row(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> hilbert_samuel_oracle(const PolyIdeal& ideal, int k_max) {
  if (k_max < 1) throw Error("k_max must be at least 1");
  require_origin(ideal);
  const std::size_t n = ideal.num_vars;
  for (const auto& g : ideal.generators)
    if (g.support_end() > n) throw Error("generator outside the ring");
  MonomialIndex cols(n, k_max);

  std::unordered_map<std::size_t, SparseRow> pivots;  // column -> row with leading entry 1
  std::vector<std::size_t> pivot_count_by_degree(k_max, 0);

  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    int low = static_cast<int>(g.lowest_degree());
    if (low >= k_max) continue;
    for (const Monomial& shift : cols.below(k_max - low)) {
      SparseRow row;
      for (const auto& t : g.terms()) {
        Monomial m = t.monomial * shift;
        if (static_cast<int>(m.degree()) >= k_max) continue;
        row.emplace_back(cols.index(m), t.coeff);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      while (!row.empty()) {
        auto it = pivots.find(row.front().first);
        if (it == pivots.end()) break;
        Rational f = row.front().second;
        row = sub_row(row, f, it->second);
      }
      if (row.empty()) continue;
      Rational inv = 1 / row.front().second;
      for (auto& [c, v] : row) v *= inv;
      std::size_t lead = row.front().first;
      ++pivot_count_by_degree[cols[lead].degree()];
      pivots.emplace(lead, std::move(row));
    }
  }

  // Columns are ordered by ascending degree, so a vector of the span killed by
  // truncation below degree k is a combination of rows with pivot degree >= k.
  std::vector<std::int64_t> values;
  std::int64_t monomials = 0, pivots_below = 0;
  const auto& counts = cols.degree_counts();
  for (int k = 1; k <= k_max; ++k) {
    monomials += static_cast<std::int64_t>(counts[k - 1]);
    pivots_below += static_cast<std::int64_t>(pivot_count_by_degree[k - 1]);
    values.push_back(monomials - pivots_below);
  }
  return values;
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Polynomial truncate_below(const Polynomial& p, int k) {
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (static_cast<int>(t.monomial.degree()) < k) kept.push_back(t);
  return Polynomial::from_terms(std::move(kept));
}

// Generators equivalent to the input modulo m^k, in which no generator has a
// linear part. A generator u + h (u linear, h of order >= 2, after a linear
// change of coordinates) is dropped and u is replaced everywhere by the
// truncated power series solving u = -h.
std::vector<Polynomial> eliminate_linear_parts(std::vector<Polynomial> gens, int k, std::size_t& eliminated) {
  eliminated = 0;
  for (auto& g : gens) g = truncate_below(g, k);
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  for (;;) {
    std::size_t pick = gens.size();
    for (std::size_t i = 0; i < gens.size() && pick == gens.size(); ++i)
      if (!gens[i].homogeneous_component(1).is_zero()) pick = i;
    if (pick == gens.size()) return gens;

    Polynomial linear = gens[pick].homogeneous_component(1);
    // Prefer the variable with the largest index; any works.
    const Term& lead = linear.terms().back();
    std::size_t v = 0;
    while (lead.monomial[v] == 0) ++v;
    Rational c = lead.coeff;
    // x_v = (u - (linear - c x_v)) / c, with u stored in slot v.
    Polynomial change = (Polynomial::variable(v) - (linear - c * Polynomial::variable(v))) * (1 / c);
    for (auto& g : gens) g = truncate_below(g.substitute(v, change), k);

    Polynomial h = gens[pick] - Polynomial::variable(v);
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pick));
    ++eliminated;
    Polynomial phi;
    for (int step = 0; step <= k; ++step) {
      Polynomial next = truncate_below(-h.substitute(v, phi), k);
      if (next == phi) break;
      phi = std::move(next);
    }
    for (auto& g : gens) g = truncate_below(g.substitute(v, phi), k);
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  }
}

}  // namespace

SamuelFit fit_samuel_multiplicity(const PolyIdeal& ideal, int local_dimension, const SamuelBudget& budget) {
  require_origin(ideal);
  if (local_dimension < 0) throw Error("local dimension must be non-negative");
  SamuelFit fit;
  for (int k_max = 2; k_max <= budget.max_k; ++k_max) {
    std::size_t eliminated = 0;
    std::vector<Polynomial> gens = eliminate_linear_parts(ideal.generators, k_max, eliminated);
    std::vector<std::size_t> relabel(ideal.num_vars, 0);
    std::size_t used = 0;
    for (std::size_t v = 0; v < ideal.num_vars; ++v)
      if (std::any_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g.uses_variable(v); }))
        relabel[v] = used++;
    // Each variable that no longer occurs contributes a smooth factor: it
    // lowers the order of the top finite difference by one.
    const int delta = local_dimension - static_cast<int>(ideal.num_vars - used - eliminated);
    // At small bounds truncation can hide a variable; wait for a larger bound.
    if (delta < 0 || k_max < delta + 2) continue;
    if (static_cast<std::size_t>(binomial(static_cast<std::int64_t>(used) + k_max - 1, k_max - 1)) >
        budget.max_columns)
      break;
    PolyIdeal reduced{used, {}, {}};
    for (const auto& g : gens) reduced.generators.push_back(g.relabel(relabel));

    std::vector<std::int64_t> chi{0};
    auto vals = hilbert_samuel_oracle(reduced, k_max);
    chi.insert(chi.end(), vals.begin(), vals.end());
    auto top_difference = [&](int k) {
      std::int64_t s = 0;
      for (int i = 0; i <= delta; ++i) s += (i % 2 ? -1 : 1) * binomial(delta, i) * chi[k - i];
      return s;
    };
    fit.reduced_vars = used;
    fit.reduced_dimension = delta;
    fit.values = std::move(vals);
    fit.fitted = top_difference(k_max);
    if (top_difference(k_max - 1) == fit.fitted && fit.fitted > 0) {
      fit.stable = true;
      break;
    }
  }
  return fit;
}

std::size_t jacobian_rank(const PolyIdeal& ideal, std::span<const Rational> point) {
  RationalMatrix jac(ideal.generators.size(), ideal.num_vars);
  for (std::size_t r = 0; r < ideal.generators.size(); ++r)
    for (std::size_t c = 0; c < ideal.num_vars; ++c)
      jac(r, c) = ideal.generators[r].partial_derivative(c).evaluate(point);
  return jac.rank();
}

int jacobian_corank(const PolyIdeal& ideal, std::span<const Rational> point, int local_dimension) {
  if (!ideal.vanishes_at(point)) throw Error("point does not lie on the variety");
  int tangent = static_cast<int>(ideal.num_vars) - static_cast<int>(jacobian_rank(ideal, point));
  return std::max(0, tangent - local_dimension);
}

}  // namespace richmult
