#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "hecke/invariants.hpp"
#include "hecke/kauffman_bracket.hpp"
#include "hecke/markov_moves.hpp"

using namespace hecke;

namespace {
const RationalFunction q1 = RationalFunction::variable(Var::q1);
const RationalFunction q2 = RationalFunction::variable(Var::q2);

JonesPolynomial poly(std::map<int, long> c, int components) {
  JonesPolynomial::Coefficients out;
  for (auto [e, v] : c) out.emplace(e, mpz_class(v));
  return JonesPolynomial(std::move(out), components);
}

// Random Markov move that keeps the strand count within [1, max_strands].
BraidWord random_move(std::mt19937& rng, const BraidWord& b, int max_strands) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0:
      return conjugate(b, testing::random_braid(rng, b.strands(), 3)).free_reduced();
    case 1:
      if (b.strands() < max_strands)
        return stabilize(b, std::bernoulli_distribution(0.5)(rng) ? Sign::Positive : Sign::Negative);
      return b;
    default:
      return can_destabilize(b) ? destabilize(b) : b;
  }
}
}  // namespace

TEST_CASE("HOMFLYPT examples") {
  CHECK(homflypt(BraidWord(1)) == RationalFunction(1));
  CHECK(homflypt(BraidWord(2, {1, 1})) == (q1 + q2) - q1 * q2 * (1 + q1 * q2) / (q1 + q2));
  CHECK(homflypt(BraidWord(2, {1, 1, 1})) == (q1 + q2) * (q1 + q2) - q1 * q2 - q1 * q2 * (1 + q1 * q2));
  // the closure of sigma_1 is the unknot
  CHECK(homflypt(BraidWord(2, {1})) == RationalFunction(1));
  CHECK(homflypt(BraidWord(3, {1, -2})) == RationalFunction(1));
}

TEST_CASE("Jones examples") {
  CHECK(jones(BraidWord(1)) == poly({{0, 1}}, 1));
  CHECK(jones(BraidWord(1)).to_string() == "1");
  auto trefoil = jones(BraidWord(2, {1, 1, 1}));
  CHECK(trefoil == poly({{8, -1}, {6, 1}, {2, 1}}, 1));
  CHECK(trefoil.to_string() == "-t^4+t^3+t");
  auto unlink = jones(BraidWord(2));
  CHECK(unlink == poly({{1, -1}, {-1, -1}}, 2));
  CHECK(unlink.to_string() == "-s-s^-1");
  // figure eight is amphichiral
  auto figure_eight = jones(BraidWord(3, {1, -2, 1, -2}));
  CHECK(figure_eight.to_string() == "t^2-t+1-t^-1+t^-2");
  // left trefoil is the mirror
  CHECK(jones(BraidWord(2, {-1, -1, -1})).to_string() == "t^-1+t^-3-t^-4");
}

TEST_CASE("bracket oracle examples") {
  CHECK(kauffman_bracket_oracle(BraidWord(1)) == BracketPolynomial{{{0, 1}}});
  CHECK(kauffman_bracket_oracle(BraidWord(2)) == BracketPolynomial{{{2, -1}, {-2, -1}}});
  CHECK(kauffman_bracket_oracle(BraidWord(2, {1})) == BracketPolynomial{{{-3, -1}}});
  CHECK(kauffman_bracket_oracle(BraidWord(2, {1})).to_string() == "-A^-3");
  CHECK(jones_via_bracket(BraidWord(1)) == poly({{0, 1}}, 1));
  CHECK(jones_via_bracket(BraidWord(2, {1})) == poly({{0, 1}}, 1));
  CHECK(jones_via_bracket(BraidWord(2, {1, 1, 1})) == jones(BraidWord(2, {1, 1, 1})));
  CHECK_THROWS_AS(kauffman_bracket_oracle(BraidWord(2, std::vector<int>(17, 1))), DomainError);
  CHECK_NOTHROW(kauffman_bracket_oracle(BraidWord(2, std::vector<int>(5, 1)), 5));
  CHECK_THROWS_AS(kauffman_bracket_oracle(BraidWord(2, std::vector<int>(6, 1)), 5), DomainError);
}

TEST_CASE("Jones agrees with the bracket oracle") {
  MarkovTrace<RationalFunction> tr(generic_hecke_algebra(1));
  // every word of length <= 4 on 2 and 3 strands
  for (int n = 2; n <= 3; ++n) {
    std::vector<int> alphabet;
    for (int i = 1; i < n; ++i) {
      alphabet.push_back(i);
      alphabet.push_back(-i);
    }
    std::vector<std::vector<int>> words{{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : words)
        if (static_cast<int>(w.size()) == len - 1)
          for (int a : alphabet) {
            auto x = w;
            x.push_back(a);
            next.push_back(x);
          }
      words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& w : words) {
      BraidWord b(n, w);
      CHECK_MESSAGE(jones(b, tr) == jones_via_bracket(b), b.to_string());
    }
  }
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto b = testing::random_braid(rng, 2 + trial % 3, 8);
    CHECK_MESSAGE(jones(b, tr) == jones_via_bracket(b), b.to_string());
  }
}

TEST_CASE("Jones parity and unlinks") {
  MarkovTrace<RationalFunction> tr(generic_hecke_algebra(1));
  std::mt19937 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    auto b = testing::random_braid(rng, 1 + trial % 4, 7);
    auto v = jones(b, tr);
    int k = closure_components(b);
    CHECK(v.components() == k);
    if (k == 1) CHECK(v.in_t());
    for (const auto& [e, c] : v.coefficients()) CHECK(((e - (k - 1)) % 2 + 2) % 2 == 0);
  }
  const RationalFunction s = RationalFunction::variable(Var::s);
  RationalFunction loop = -(s + s.inverse());
  for (int n = 1; n <= 5; ++n) {
    auto v = jones(BraidWord(n), tr);
    RationalFunction expected = loop.pow(n - 1);
    JonesPolynomial::Coefficients coeffs;
    for (const auto& t : expected.numerator().terms()) coeffs.emplace(t.mono.exponent(Var::s), t.coeff.get_num());
    CHECK(v == JonesPolynomial(coeffs, n));
  }
}

TEST_CASE("invariants under Markov moves") {
  MarkovTrace<RationalFunction> tr(generic_hecke_algebra(1));
  std::mt19937 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    auto b = testing::random_braid(rng, 1 + trial % 3, 5);
    auto p = homflypt(b, tr);
    auto v = jones(b, tr);
    auto moved = b;
    for (int step = 0; step < 20; ++step) moved = random_move(rng, moved, 5);
    CHECK_MESSAGE(homflypt(moved, tr) == p, b.to_string() << " -> " << moved.to_string());
    CHECK(jones(moved, tr) == v);
  }
}
