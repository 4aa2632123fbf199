#include "richmult/groebner.hpp"

#include <algorithm>

namespace richmult {

namespace {

using Terms = std::vector<Term>;

Terms sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  Terms t = p.terms();
  if (!(order == MonomialOrder{}))
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return t;
}

// Returns f[from..] - c * m * g, all lists sorted decreasingly under `order`.
Terms sub_scaled(const Terms& f, std::size_t from, const Rational& c, const Monomial& m, const Terms& g,
                 const MonomialOrder& order) {
  Terms out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    int cmp = i == f.size() ? -1 : order.compare(f[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -c * g[j].coeff});
      ++j;
    } else {
      Rational s = f[i].coeff - c * g[j].coeff;
      if (s != 0) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff == 1) return;
  Rational inv = 1 / t.front().coeff;
  for (auto& term : t) term.coeff *= inv;
}

// Full reduction of f by the polynomials in `basis` (indices into `store`).
Terms reduce(Terms f, const std::vector<Terms>& store, std::span<const std::size_t> basis,
             const MonomialOrder& order) {
  Terms rem;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& lead = f[pos];
    const Terms* divisor = nullptr;
    for (std::size_t b : basis) {
      if (store[b].front().monomial.divides(lead.monomial)) {
        divisor = &store[b];
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(lead);
      ++pos;
      continue;
    }
    Rational c = lead.coeff / divisor->front().coeff;
    Monomial m = lead.monomial / divisor->front().monomial;
    f = sub_scaled(f, pos, c, m, *divisor, order);
    pos = 0;
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const MonomialOrder& order) : order_(order) {}

  // Returns false once the unit ideal has been detected.
  bool add(Terms f) {
    f = reduce(std::move(f), store_, basis_, order_);
    if (f.empty()) return true;
    make_monic(f);
    if (f.front().monomial.is_one()) return false;
    store_.push_back(std::move(f));
    update(store_.size() - 1);
    return true;
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it)
        if (order_.compare(it->lcm, best->lcm) < 0) best = it;
      Pair p = *best;
      pairs_.erase(best);
      if (!add(spoly(p))) return false;
    }
    return true;
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::vector<std::size_t> others;
      for (std::size_t l = 0; l < basis_.size(); ++l)
        if (l != k) others.push_back(basis_[l]);
      const Terms& g = store_[basis_[k]];
      Terms tail(g.begin() + 1, g.end());
      Terms r = reduce(std::move(tail), store_, others, order_);
      r.insert(r.begin(), g.front());
      out.push_back(Polynomial::from_terms(std::move(r)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_term(order_).monomial, b.leading_term(order_).monomial) < 0;
    });
    return out;
  }

 private:
  const Monomial& lm(std::size_t k) const { return store_[k].front().monomial; }

  Terms spoly(const Pair& p) const {
    const Terms& f = store_[p.i];
    const Terms& g = store_[p.j];
    Monomial mf = p.lcm / f.front().monomial;
    Monomial mg = p.lcm / g.front().monomial;
    Terms scaled;
    scaled.reserve(f.size());
    for (const auto& t : f) scaled.push_back({t.monomial * mf, t.coeff});
    return sub_scaled(scaled, 0, Rational(1), mg, g, order_);
  }

  void update(std::size_t h) {
    const Monomial& lh = lm(h);
    std::vector<Pair> fresh;
    for (std::size_t g : basis_) fresh.push_back({g, h, Monomial::lcm(lm(g), lh)});

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const Pair& p = fresh[k];
      bool keep = true;
      if (!lm(p.i).coprime(lh)) {
        for (std::size_t l = k + 1; l < fresh.size() && keep; ++l)
          if (fresh[l].lcm.divides(p.lcm)) keep = false;
        for (const Pair& q : kept)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::erase_if(kept, [&](const Pair& p) { return lm(p.i).coprime(lh); });

    std::erase_if(pairs_, [&](const Pair& p) {
      return lh.divides(p.lcm) && !(Monomial::lcm(lm(p.i), lh) == p.lcm) && !(Monomial::lcm(lm(p.j), lh) == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    std::erase_if(basis_, [&](std::size_t g) { return lh.divides(lm(g)); });
    basis_.push_back(h);
  }

  const MonomialOrder& order_;
  std::vector<Terms> store_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, const MonomialOrder& order) {
  Buchberger bb(order);
  for (const auto& g : generators)
    if (!bb.add(sorted_terms(g, order))) return {Polynomial(1)};
  if (!bb.run()) return {Polynomial(1)};
  return bb.reduced_basis();
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<Terms> store;
  std::vector<std::size_t> idx;
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    idx.push_back(store.size());
    store.push_back(sorted_terms(b, order));
  }
  return Polynomial::from_terms(reduce(sorted_terms(f, order), store, idx, order));
}

std::vector<Monomial> leading_monomials(std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<Monomial> out;
  for (const auto& b : basis)
    if (!b.is_zero()) out.push_back(b.leading_term(order).monomial);
  return out;
}

std::vector<Polynomial> interreduce(std::span<const Polynomial> generators) {
  return canonical_generators(groebner_basis(generators));
}

}  // namespace richmult
