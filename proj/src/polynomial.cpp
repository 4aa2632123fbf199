#include "richmult/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

namespace richmult {

namespace {

const MonomialOrder kCanonical{};

bool term_greater(const Term& a, const Term& b) { return kCanonical.greater(a.monomial, b.monomial); }

// Merges two canonically sorted term lists as a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : kCanonical.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(Rational c) {
  c.canonicalize();
  if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

Polynomial Polynomial::variable(std::size_t index) { return monomial(Monomial::variable(index)); }

Polynomial Polynomial::monomial(const Monomial& m, Rational c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (order == kCanonical) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

unsigned Polynomial::lowest_degree() const { return terms_.empty() ? 0 : terms_.back().monomial.degree(); }

bool Polynomial::is_homogeneous() const { return total_degree() == lowest_degree(); }

Polynomial Polynomial::homogeneous_component(unsigned degree) const {
  Polynomial p;
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::lowest_form() const { return homogeneous_component(lowest_degree()); }

std::size_t Polynomial::support_end() const {
  std::size_t e = 0;
  for (const auto& t : terms_) e = std::max(e, t.monomial.support_end());
  return e;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[index] != 0; });
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (support_end() > point.size()) throw Error("evaluation point has too few coordinates");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      for (unsigned e = t.monomial[i]; e > 0; --e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::partial_derivative(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::translate(std::span<const Rational> shift) const {
  std::size_t nv = std::max(support_end(), shift.size());
  // powers[i][e] = (x_i + shift_i)^e, built on demand.
  std::vector<std::vector<Polynomial>> powers(nv);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(Polynomial(1));
    Polynomial base = variable(i);
    if (i < shift.size()) base += Polynomial(shift[i]);
    while (row.size() <= e) row.push_back(row.back() * base);
    return row[e];
  };
  Polynomial result;
  for (const auto& t : terms_) {
    Polynomial prod(t.coeff);
    for (std::size_t i = 0; i < nv; ++i)
      if (t.monomial[i] != 0) prod = prod * power(i, t.monomial[i]);
    result += prod;
  }
  return result;
}

Polynomial Polynomial::substitute(std::size_t index, const Polynomial& value) const {
  std::vector<Polynomial> powers{Polynomial(1)};
  Polynomial result;
  for (const auto& t : terms_) {
    unsigned e = t.monomial[index];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = t.monomial;
    rest.set(index, 0);
    result += monomial(rest, t.coeff) * powers[e];
  }
  return result;
}

Polynomial Polynomial::homogenize(std::size_t h) const {
  if (uses_variable(h)) throw Error("homogenizing variable already in use");
  unsigned top = total_degree();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.monomial;
    m.set(h, top - t.monomial.degree());
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::specialize(std::size_t index, const Rational& value) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    for (unsigned e = t.monomial[index]; e > 0; --e) c *= value;
    Monomial m = t.monomial;
    m.set(index, 0);
    out.push_back({m, c});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::relabel(std::span<const std::size_t> new_index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.monomial[i] == 0) continue;
      if (i >= new_index.size()) throw Error("relabel map too short");
      m.set(new_index[i], t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1;
  for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  Polynomial p = *this;
  p *= Rational(den_lcm);
  Integer content = 0;
  for (const auto& t : p.terms_) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_num_mpz_t());
  Rational scale(1, content);
  scale.canonicalize();
  if (p.terms_.front().coeff < 0) scale = -scale;
  p *= scale;
  return p;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_term(order).coeff;
  Polynomial p = *this;
  p *= inv;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(std::move(terms));
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = kCanonical.compare(a.terms_[i].monomial, b.terms_[i].monomial);
    if (c != 0) return c < 0;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return a.size() < b.size();
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r(1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (i >= names.size()) throw Error("no name for variable index " + std::to_string(i));
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names) : text_(text) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == "t") throw Error("variable name 't' is reserved");
      index_.emplace(names[i], i);
    }
  }

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc;
    if (accept('-')) {
      acc = -term();
    } else {
      accept('+');
      acc = term();
    }
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den == pos_) fail("expected denominator");
      }
      return Polynomial(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) fail("unknown variable '" + name + "'");
      return Polynomial::variable(it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  return Parser(text, names).parse();
}

bool PolyIdeal::is_unit() const {
  return std::any_of(generators.begin(), generators.end(),
                     [](const Polynomial& g) { return !g.is_zero() && g.is_constant(); });
}

bool PolyIdeal::vanishes_at(std::span<const Rational> point) const {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const Polynomial& g) { return g.evaluate(point) == 0; });
}

std::vector<Polynomial> canonical_generators(std::vector<Polynomial> gens) {
  for (auto& g : gens) g = g.normalized();
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) { return a < b; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace richmult
