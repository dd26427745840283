#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "treecode/foata.hpp"
#include "treecode/oracle.hpp"

using namespace treecode;

namespace {

constexpr Target b(int i) { return Target::in_b(i - 1); }  // b1, b2, ...
constexpr Target c(int i = 1) { return Target::in_c(i - 1); }

CycleFreeSpec identity_spec(int size, int c_size) {
  CycleFreeSpec s{size, c_size, {}};
  for (int i = 0; i < size; ++i) s.gamma.push_back(i);
  return s;
}

// Cycle-free by definition: from every a, following a -> gamma(f(a)) reaches C.
bool walks_into_c(const CycleFreeSpec& spec, const CycleFreeFunction& f) {
  for (int start = 0; start < spec.a_size; ++start) {
    int a = start;
    for (int steps = 0;; ++steps) {
      if (steps > spec.a_size) return false;
      const Target t = f.values[a];
      if (t.is_c()) break;
      a = spec.gamma[t.index];
    }
  }
  return true;
}

std::vector<CycleFreeFunction> all_functions(const CycleFreeSpec& spec) {
  std::vector<CycleFreeFunction> out;
  const int cod = spec.codomain_size();
  if (cod == 0) return out;
  std::vector<int> digit(spec.a_size, 0);
  for (;;) {
    CycleFreeFunction f;
    for (int d : digit) f.values.push_back(spec.target_at(d));
    out.push_back(f);
    int i = spec.a_size - 1;
    while (i >= 0 && ++digit[i] == cod) digit[i--] = 0;
    if (i < 0) return out;
  }
}

std::vector<std::vector<int>> surjections(int b_size, int a_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> g(b_size, 0);
  for (;;) {
    std::set<int> image(g.begin(), g.end());
    if (static_cast<int>(image.size()) == a_size || b_size == 0) out.push_back(g);
    int i = b_size - 1;
    while (i >= 0 && ++g[i] == a_size) g[i--] = 0;
    if (i < 0) return out;
  }
}

std::size_t leaf_count(const CycleFreeSpec& spec, const std::vector<Target>& values) {
  std::vector<bool> hit(spec.a_size, false);
  for (const auto& t : values)
    if (!t.is_c()) hit[spec.gamma[t.index]] = true;
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), false));
}

}  // namespace

TEST_CASE("cycle-free recognition") {
  const auto spec = identity_spec(3, 1);
  CHECK(is_cycle_free(spec, {{b(2), c(), b(2)}}));
  CHECK_FALSE(is_cycle_free(spec, {{b(2), b(1), c()}}));
  CHECK_FALSE(is_cycle_free(spec, {{b(1), c(), c()}}));
  CHECK_THROWS_AS(is_cycle_free(spec, {{b(4), c(), c()}}), std::domain_error);
}

TEST_CASE("encode examples") {
  const auto spec = identity_spec(3, 1);
  CHECK(foata_encode(spec, {{b(2), c(), b(2)}}).delta == std::vector<Target>{c(), b(2), b(2)});
  CHECK(foata_encode(spec, {{c(), b(1), b(1)}}).delta == std::vector<Target>{c(), b(1), b(1)});
  CHECK(foata_encode(identity_spec(1, 1), {{c()}}).delta == std::vector<Target>{c()});
  CHECK_THROWS_AS(foata_encode(spec, {{b(2), b(1), c()}}), std::invalid_argument);
}

TEST_CASE("decode examples") {
  const auto spec = identity_spec(3, 1);
  CHECK(foata_decode(spec, {{c(), b(2), b(2)}}).values == std::vector<Target>{b(2), c(), b(2)});
  CHECK(foata_decode(spec, {{c(), b(1), b(1)}}).values == std::vector<Target>{c(), b(1), b(1)});
  CHECK(foata_decode(identity_spec(1, 1), {{c()}}).values == std::vector<Target>{c()});
  const auto pieces = foata_pieces(spec, {{c(), b(2), b(2)}});
  CHECK(pieces.leaves == std::vector<int>{0, 2});
  CHECK(pieces.starts == std::vector<std::size_t>{0, 2});
}

TEST_CASE("malformed codes") {
  const auto spec = identity_spec(3, 1);
  CHECK_THROWS_AS(foata_decode(spec, {{b(1), c(), c()}}), MalformedCode);
  CHECK_THROWS_AS(foata_decode(spec, {{c(), b(1)}}), std::domain_error);
}

TEST_CASE("count examples") {
  CHECK(count_cycle_free(identity_spec(1, 1)) == 1);
  CHECK(count_cycle_free(identity_spec(2, 2)) == 8);
  CHECK(count_cycle_free(identity_spec(3, 1)) == 16);
  CHECK(count_cycle_free(CycleFreeSpec{0, 2, {}}) == 1);
  for (const auto& spec : {identity_spec(2, 2), identity_spec(3, 1)}) {
    long filtered = 0;
    for (const auto& f : all_functions(spec)) filtered += walks_into_c(spec, f);
    CHECK(count_cycle_free(spec) == filtered);
  }
}

TEST_CASE("bijectivity on every small frame") {
  int frames = 0;
  for (int a = 1; a <= 3; ++a)
    for (int bs = 0; bs <= 4; ++bs)
      for (int cs = 0; cs <= 2; ++cs) {
        if (bs != 0 && bs < a) continue;
        for (const auto& gamma : surjections(bs, a)) {
          const CycleFreeSpec spec{a, cs, gamma};
          ++frames;
          std::vector<CycleFreeFunction> cycle_free;
          for (const auto& f : all_functions(spec)) {
            const bool expected = walks_into_c(spec, f);
            CHECK(is_cycle_free(spec, f) == expected);
            if (expected) cycle_free.push_back(f);
          }
          auto oracle = oracle::enumerate_cycle_free(spec);
          std::sort(oracle.begin(), oracle.end());
          CHECK(oracle == cycle_free);
          CHECK(count_cycle_free(spec) == cycle_free.size());

          std::set<FoataCode> image;
          for (const auto& f : cycle_free) {
            const auto code = foata_encode(spec, f);
            CHECK(code.delta.front().is_c());
            auto sorted_code = code.delta;
            auto sorted_f = f.values;
            std::sort(sorted_code.begin(), sorted_code.end());
            std::sort(sorted_f.begin(), sorted_f.end());
            CHECK(sorted_code == sorted_f);
            CHECK(foata_pieces(spec, code).leaves.size() == leaf_count(spec, code.delta));
            CHECK(foata_decode(spec, code) == f);
            image.insert(code);
          }
          CHECK(image.size() == cycle_free.size());
          // Every sequence starting in C is hit.
          std::set<FoataCode> starting_in_c;
          for (const auto& f : all_functions(spec))
            if (f.values.front().is_c()) starting_in_c.insert(FoataCode{f.values});
          CHECK(image == starting_in_c);
          for (const auto& code : starting_in_c) CHECK(foata_encode(spec, foata_decode(spec, code)) == code);
        }
      }
  CHECK(frames > 100);
}

TEST_CASE("sampling") {
  SUBCASE("deterministic for a fixed seed") {
    const auto spec = identity_spec(6, 2);
    SeededRng r1(42), r2(42);
    for (int i = 0; i < 20; ++i) CHECK(random_cycle_free(spec, r1) == random_cycle_free(spec, r2));
  }
  SUBCASE("single element goes to C") {
    SeededRng rng(3);
    for (int i = 0; i < 50; ++i) CHECK(random_cycle_free(CycleFreeSpec{1, 3, {0, 0}}, rng).values[0].is_c());
  }
  SUBCASE("no C means nothing to draw") {
    SeededRng rng(3);
    CHECK_THROWS_AS(random_cycle_free(identity_spec(2, 0), rng), std::domain_error);
  }
  SUBCASE("uniform over the 8 functions of a 2+2+2 frame") {
    const auto spec = identity_spec(2, 2);
    constexpr int draws = 80000;
    std::map<CycleFreeFunction, int> freq;
    SeededRng rng(20240601);
    for (int i = 0; i < draws; ++i) ++freq[random_cycle_free(spec, rng)];
    REQUIRE(freq.size() == 8);
    const double p = 1.0 / 8, mean = draws * p, sigma = std::sqrt(draws * p * (1 - p));
    for (const auto& [f, count] : freq) CHECK(std::abs(count - mean) <= 3 * sigma);
  }
}
