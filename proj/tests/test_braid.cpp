#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "hecke/errors.hpp"
#include "hecke/markov_moves.hpp"

using namespace hecke;

namespace {
Permutation perm(std::initializer_list<int> images) { return Permutation::from_one_line(std::vector<int>(images)); }

// Composition of transpositions straight from the definition, as functions on {1..n}.
std::vector<int> compose_by_hand(int n, const std::vector<int>& word) {
  std::vector<int> result(static_cast<std::size_t>(n));
  for (int start = 1; start <= n; ++start) {
    int x = start;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      int i = *it < 0 ? -*it : *it;
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
    }
    result[static_cast<std::size_t>(start - 1)] = x;
  }
  return result;
}

int inversions_by_enumeration(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  return count;
}
}  // namespace

TEST_CASE("parse braid words") {
  CHECK(parse_braid_word("1 1 1", 2).letters() == std::vector<int>{1, 1, 1});
  CHECK(parse_braid_word("1 -2 1", 3).letters() == std::vector<int>{1, -2, 1});
  CHECK(parse_braid_word("1,-2, 1", 3).letters() == std::vector<int>{1, -2, 1});
  CHECK(parse_braid_word("B3: 1 -2 1").strands() == 3);
  CHECK(parse_braid_word("", 1).empty());
  CHECK_THROWS_AS(parse_braid_word("3", 2), ParseError);
  CHECK_THROWS_AS(parse_braid_word("1 x", 2), ParseError);
  CHECK_THROWS_AS(parse_braid_word("0", 2), ParseError);
  CHECK_THROWS_AS(parse_braid_word("1"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("B3: 1", 4), ParseError);
  try {
    parse_braid_word("1 1 5", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("rendering reverses parsing") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    auto b = testing::random_braid(rng, 1 + trial % 5, 8);
    CHECK(parse_braid_word(b.to_string()) == b);
  }
  CHECK(BraidWord(3, {1, -2, 1}).to_string() == "B3: 1 -2 1");
}

TEST_CASE("underlying permutation") {
  CHECK(underlying_permutation(BraidWord(2, {1})) == perm({2, 1}));
  CHECK(underlying_permutation(BraidWord(3)) == Permutation(3));
  CHECK(underlying_permutation(BraidWord(3, {1, 2})).one_line() == compose_by_hand(3, {1, 2}));
  CHECK(underlying_permutation(BraidWord(3, {1, 2})) == perm({2, 3, 1}));
  CHECK(underlying_permutation(BraidWord(3, {-1, 2})) == perm({2, 3, 1}));

  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 5;
    auto u = testing::random_braid(rng, n, 8);
    auto v = testing::random_braid(rng, n, 8);
    CHECK(underlying_permutation(u * v) == underlying_permutation(u) * underlying_permutation(v));
    CHECK(underlying_permutation(u).one_line() == compose_by_hand(n, u.letters()));
    CHECK(underlying_permutation(u.free_reduced()) == underlying_permutation(u));
  }
}

TEST_CASE("permutation utilities") {
  CHECK(length(perm({2, 3, 1})) == inversions_by_enumeration({2, 3, 1}));
  CHECK(length(perm({2, 3, 1})) == 2);
  CHECK(reduced_word(perm({2, 1})) == std::vector<int>{1});
  CHECK(inverse(perm({2, 3, 1})) == perm({3, 1, 2}));
  CHECK_THROWS_AS(perm({1, 1}), DomainError);
  CHECK_THROWS_AS(perm({1, 2}) * perm({1, 2, 3}), ContextMismatch);

  for (int n = 1; n <= 5; ++n) {
    auto all = all_permutations(n);
    for (const auto& w : all) {
      auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(w.length() == inversions_by_enumeration(w.one_line()));
      CHECK(Permutation::from_word(n, word) == w);
      CHECK((w * w.inverse()).is_identity());
      for (const auto& v : all) {
        if (v.length() > 1) continue;
        CHECK((w * v) * w == w * (v * w));
      }
      for (int i = 1; i < n; ++i) {
        CHECK(w.times_simple(i) == w * Permutation::simple(n, i));
        CHECK(w.simple_times(i) == Permutation::simple(n, i) * w);
        CHECK((w.simple_times(i).length() < w.length()) == w.has_left_descent(i));
      }
    }
  }
}

TEST_CASE("markov moves") {
  BraidWord trefoil(2, {1, 1, 1});
  auto stab = stabilize(trefoil, Sign::Positive);
  CHECK(stab == BraidWord(3, {1, 1, 1, 2}));
  CHECK(destabilize(stab) == trefoil);
  CHECK(apply(trefoil, StabilizeNegative{}) == BraidWord(3, {1, 1, 1, -2}));
  CHECK_THROWS_AS(destabilize(BraidWord(3, {2, 1, 2})), DomainError);
  CHECK_THROWS_AS(apply(stab, DestabilizeNegative{}), DomainError);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto b = testing::random_braid(rng, 3, 6);
    auto a = testing::random_braid(rng, 3, 4);
    CHECK(conjugate(conjugate(b, a), a.inverse()).free_reduced() == b.free_reduced());
    CHECK(bennequin(conjugate(b, a)) == bennequin(b));
    CHECK(bennequin(stabilize(b, Sign::Positive)) == bennequin(b));
    CHECK(bennequin(stabilize(b, Sign::Negative)) == bennequin(b) - 2);
    CHECK(closure_components(conjugate(b, a)) == closure_components(b));
    CHECK(closure_components(stabilize(b, Sign::Negative)) == closure_components(b));
    CHECK(writhe(b.free_reduced()) == writhe(b));
  }
}

TEST_CASE("writhe, bennequin, components") {
  CHECK(writhe(BraidWord(2, {1})) == 1);
  CHECK(bennequin(BraidWord(2, {1})) == -1);
  CHECK(writhe(BraidWord(2, {1, 1, 1})) == 3);
  CHECK(bennequin(BraidWord(2, {1, 1, 1})) == 1);
  CHECK(writhe(BraidWord(2, {1, -1})) == 0);
  CHECK(bennequin(BraidWord(2, {1, -1})) == -2);
  CHECK(closure_components(BraidWord(3)) == 3);
  CHECK(closure_components(BraidWord(2, {1})) == 1);
}
