#include "richmult/hilbert.hpp"

#include <algorithm>
#include <map>

#include "richmult/groebner.hpp"

namespace richmult {

namespace {

using UPoly = std::vector<Integer>;

void add_into(UPoly& acc, const UPoly& p, unsigned shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

UPoly multiply(const UPoly& a, const UPoly& b) {
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(UPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); })) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

class NumeratorCache {
 public:
  UPoly numerator(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;
    UPoly result = compute(gens);
    memo_.emplace(std::move(gens), result);
    return result;
  }

 private:
  UPoly compute(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {0};

    std::array<int, kMaxVars> count{};
    bool coprime = true;
    for (const auto& g : gens)
      for (std::size_t v = 0; v < kMaxVars; ++v)
        if (g[v] != 0 && ++count[v] > 1) coprime = false;

    if (coprime) {
      UPoly r{1};
      for (const auto& g : gens) {
        UPoly f(g.degree() + 1, 0);
        f[0] = 1;
        f[g.degree()] = -1;
        r = multiply(r, f);
      }
      return r;
    }

    std::size_t pivot_var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    unsigned e = 255;
    for (const auto& g : gens)
      if (g[pivot_var] != 0) e = std::min(e, g[pivot_var]);
    Monomial pivot = Monomial::variable(pivot_var, e);

    std::vector<Monomial> sum = gens;
    sum.push_back(pivot);
    std::vector<Monomial> quotient;
    quotient.reserve(gens.size());
    for (const auto& g : gens) {
      Monomial q = g;
      q.set(pivot_var, g[pivot_var] > e ? g[pivot_var] - e : 0);
      quotient.push_back(q);
    }
    UPoly r = numerator(std::move(sum));
    add_into(r, numerator(std::move(quotient)), e);
    trim(r);
    return r;
  }

  std::map<std::vector<Monomial>, UPoly> memo_;
};

}  // namespace

std::vector<Integer> hilbert_numerator(std::span<const Monomial> generators) {
  NumeratorCache cache;
  UPoly r = cache.numerator({generators.begin(), generators.end()});
  trim(r);
  return r;
}

HilbertData hilbert_series(std::span<const Monomial> generators, std::size_t num_vars) {
  for (const auto& g : generators)
    if (g.support_end() > num_vars) throw Error("monomial generator outside the ring");
  UPoly num = hilbert_numerator(generators);
  HilbertData data;
  data.dimension = static_cast<int>(num_vars);
  if (num.size() == 1 && num[0] == 0) {
    data.numerator = {0};
    data.dimension = 0;
    data.degree = 0;
    return data;
  }
  // Synthetic division by (1 - t) while N(1) == 0.
  for (;;) {
    Integer at_one = 0;
    for (const auto& c : num) at_one += c;
    if (at_one != 0) {
      data.degree = at_one.get_si();
      if (at_one != data.degree) throw Error("Hilbert degree overflow");
      break;
    }
    UPoly q(num.size() - 1, 0);
    Integer running = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      running += num[i];
      q[i] = running;
    }
    num = std::move(q);
    --data.dimension;
  }
  data.numerator = std::move(num);
  return data;
}

HilbertData homogeneous_hilbert_data(const PolyIdeal& ideal) {
  for (const auto& g : ideal.generators)
    if (!g.is_homogeneous()) throw Error("ideal is not homogeneous");
  if (ideal.is_unit()) throw Error("unit ideal has no Hilbert data");
  auto basis = groebner_basis(ideal.generators);
  auto lead = leading_monomials(basis);
  return hilbert_series(lead, ideal.num_vars);
}

std::int64_t projective_degree(const PolyIdeal& ideal) { return homogeneous_hilbert_data(ideal).degree; }

std::int64_t count_standard_monomials(std::span<const Monomial> generators, std::size_t num_vars, unsigned degree) {
  std::int64_t count = 0;
  Monomial m;
  // Enumerate exponent vectors of total degree `degree` recursively.
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == num_vars || num_vars == 0) {
      if (num_vars != 0) m.set(var, left);
      else if (left != 0) return;
      if (std::none_of(generators.begin(), generators.end(), [&](const Monomial& g) { return g.divides(m); }))
        ++count;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(var, e);
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, degree);
  return count;
}

}  // namespace richmult
