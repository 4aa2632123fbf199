#include "richmult/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "richmult/rational.hpp"

namespace richmult {

GrassShape::GrassShape(int d, int n) : d_(d), n_(n) {
  if (d < 1 || d >= n) throw Error("invalid Grassmannian shape: need 1 <= d < n");
}

CosetRep::CosetRep(GrassShape shape, std::vector<int> entries) : shape_(shape), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.d())
    throw Error("coset representative must have exactly d entries");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] < 1 || entries_[k] > shape_.n()) throw Error("coset representative entry out of range");
    if (k > 0 && entries_[k] <= entries_[k - 1]) throw Error("coset representative must be strictly increasing");
  }
}

CosetRep CosetRep::min(GrassShape shape) {
  std::vector<int> e(shape.d());
  std::iota(e.begin(), e.end(), 1);
  return {shape, e};
}

CosetRep CosetRep::max(GrassShape shape) {
  std::vector<int> e(shape.d());
  std::iota(e.begin(), e.end(), shape.n() - shape.d() + 1);
  return {shape, e};
}

bool CosetRep::contains(int value) const { return std::binary_search(entries_.begin(), entries_.end(), value); }

int CosetRep::count_at_most(int j) const {
  return static_cast<int>(std::upper_bound(entries_.begin(), entries_.end(), j) - entries_.begin());
}

int CosetRep::count_at_least(int j) const {
  return static_cast<int>(entries_.end() - std::lower_bound(entries_.begin(), entries_.end(), j));
}

int CosetRep::length() const {
  int s = 0;
  for (std::size_t k = 0; k < entries_.size(); ++k) s += entries_[k] - static_cast<int>(k) - 1;
  return s;
}

bool bruhat_leq(const CosetRep& a, const CosetRep& b) {
  if (!(a.shape() == b.shape())) throw Error("Bruhat comparison across different shapes");
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::vector<RootIndex> chart_index_set(const GrassShape& shape, const CosetRep& tau) {
  if (!(tau.shape() == shape)) throw Error("coset representative does not match shape");
  std::vector<RootIndex> out;
  out.reserve(static_cast<std::size_t>(shape.dimension()));
  for (int q = 1; q <= shape.n(); ++q) {
    if (tau.contains(q)) continue;
    for (int p : tau.entries()) out.push_back({q, p});
  }
  return out;
}

std::vector<RootIndex> positive_root_indices(const GrassShape& shape, const CosetRep& tau) {
  auto all = chart_index_set(shape, tau);
  std::erase_if(all, [](const RootIndex& r) { return !r.positive(); });
  return all;
}

std::vector<CosetRep> all_coset_reps(const GrassShape& shape) {
  std::vector<CosetRep> out;
  std::vector<int> e(shape.d());
  std::iota(e.begin(), e.end(), 1);
  for (;;) {
    out.emplace_back(shape, e);
    int k = shape.d() - 1;
    while (k >= 0 && e[k] == shape.n() - shape.d() + k + 1) --k;
    if (k < 0) break;
    ++e[k];
    for (int l = k + 1; l < shape.d(); ++l) e[l] = e[l - 1] + 1;
  }
  return out;
}

std::string to_string(const CosetRep& c) {
  std::string s;
  for (std::size_t k = 0; k < c.entries().size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c[k]);
  }
  return s;
}

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw Error("invalid integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

CosetRep parse_coset_rep(std::string_view text, const GrassShape& shape) {
  std::vector<int> entries;
  if (text.find(',') == std::string_view::npos && static_cast<int>(text.size()) == shape.d() && shape.n() <= 9 &&
      shape.d() > 1) {
    for (char c : text) entries.push_back(parse_int(std::string_view(&c, 1)));
  } else {
    std::size_t start = 0;
    for (;;) {
      auto comma = text.find(',', start);
      entries.push_back(parse_int(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return {shape, entries};
}

std::string to_string(const RootIndex& r) { return std::to_string(r.q) + "." + std::to_string(r.p); }

RootIndex parse_root_index(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) throw Error("root index must look like 'q.p'");
  return {parse_int(text.substr(0, dot)), parse_int(text.substr(dot + 1))};
}

}  // namespace richmult
