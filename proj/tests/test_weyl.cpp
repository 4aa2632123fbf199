#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "richmult/weyl.hpp"

using namespace richmult;

TEST_CASE("coset representatives validate their entries") {
  GrassShape s(3, 7);
  CHECK_NOTHROW(CosetRep(s, {2, 5, 6}));
  CHECK_THROWS_AS(CosetRep(s, {2, 2, 6}), Error);
  CHECK_THROWS_AS(CosetRep(s, {5, 2, 6}), Error);
  CHECK_THROWS_AS(CosetRep(s, {0, 2, 6}), Error);
  CHECK_THROWS_AS(CosetRep(s, {2, 5, 8}), Error);
  CHECK_THROWS_AS(CosetRep(s, {2, 5}), Error);
  CHECK_THROWS_AS(GrassShape(0, 3), Error);
  CHECK_THROWS_AS(GrassShape(3, 3), Error);
}

TEST_CASE("serialization of coset representatives and root indices") {
  GrassShape s(3, 7);
  CosetRep w(s, {3, 5, 6});
  CHECK(to_string(w) == "3,5,6");
  CHECK(parse_coset_rep("3,5,6", s) == w);
  CHECK(parse_coset_rep("356", s) == w);
  CHECK(parse_coset_rep(" 3, 5 ,6", s) == w);
  CHECK_THROWS_AS(parse_coset_rep("3,5", s), Error);
  CHECK_THROWS_AS(parse_coset_rep("3,x,6", s), Error);
  RootIndex r{4, 5};
  CHECK(to_string(r) == "4.5");
  CHECK(parse_root_index("4.5") == r);
  CHECK_THROWS_AS(parse_root_index("45"), Error);
}

TEST_CASE("length is the dimension of the Schubert variety") {
  GrassShape s(3, 7);
  CHECK(CosetRep(s, {3, 5, 6}).length() == 8);
  CHECK(CosetRep(s, {1, 2, 5}).length() == 2);
  CHECK(CosetRep::min(s).length() == 0);
  CHECK(CosetRep::max(s).length() == s.dimension());
}

TEST_CASE("Bruhat order is a partial order with the expected extremes") {
  for (auto [d, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
    GrassShape s(d, n);
    auto all = all_coset_reps(s);
    CHECK(static_cast<long>(all.size()) == oracle::binomial(n, d));
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& a : all) {
      CHECK(bruhat_leq(a, a));
      CHECK(bruhat_leq(CosetRep::min(s), a));
      CHECK(bruhat_leq(a, CosetRep::max(s)));
      for (const auto& b : all) {
        if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
        if (bruhat_leq(a, b)) CHECK(a.length() <= b.length());
        for (const auto& c : all)
          if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
      }
    }
  }
  CHECK_THROWS_AS(bruhat_leq(CosetRep::min(GrassShape(2, 4)), CosetRep::min(GrassShape(2, 5))), Error);
}

TEST_CASE("chart index set of the example cell") {
  GrassShape s(3, 7);
  CosetRep tau(s, {2, 5, 6});
  auto idx = chart_index_set(s, tau);
  std::vector<std::string> got;
  for (const auto& r : idx) got.push_back(to_string(r));
  CHECK(got == std::vector<std::string>{"1.2", "1.5", "1.6", "3.2", "3.5", "3.6", "4.2", "4.5", "4.6", "7.2", "7.5",
                                        "7.6"});
  auto pos = positive_root_indices(s, tau);
  CHECK(pos.size() == 5);  // 3.2, 4.2, 7.2, 7.5, 7.6
  for (const auto& r : pos) CHECK(r.positive());
  CHECK(static_cast<int>(idx.size() - pos.size()) == tau.length());
}
