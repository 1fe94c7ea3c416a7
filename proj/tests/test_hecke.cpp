#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/scalar_parser.hpp"

using namespace hecke;

namespace {
const RationalFunction q1 = RationalFunction::variable(Var::q1);
const RationalFunction q2 = RationalFunction::variable(Var::q2);
Permutation perm(std::initializer_list<int> images) { return Permutation::from_one_line(std::vector<int>(images)); }

HeckeElement<RationalFunction> random_element(std::mt19937& rng, const HeckeAlgebra<RationalFunction>& h) {
  auto all = all_permutations(h.degree());
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  HeckeElement<RationalFunction> e(h.degree());
  for (int k = 0; k < 3; ++k) e.add_term(all[pick(rng)], testing::random_rational_function(rng));
  return e;
}
}  // namespace

TEST_CASE("basis elements and linear operations") {
  auto h = generic_hecke_algebra(3);
  CHECK(h.basis(Permutation(3)) == h.identity());
  auto t = h.basis(perm({2, 3, 1}));
  CHECK((t + t.scaled(RationalFunction(-1))).is_zero());
  auto c = h.identity().scaled(q1 * q2);
  CHECK(c.size() == 1);
  CHECK(c.coefficient(Permutation(3)) == q1 * q2);
  CHECK_THROWS_AS(h.basis(Permutation(2)), ContextMismatch);
  CHECK_THROWS_AS(h.generator(3), DomainError);
}

TEST_CASE("multiplication examples") {
  auto h2 = generic_hecke_algebra(2);
  auto t1 = h2.generator(1);
  auto expected = h2.generator(1).scaled(q1 + q2) - h2.identity().scaled(q1 * q2);
  CHECK(h2.mul(t1, t1) == expected);

  auto h3 = generic_hecke_algebra(3);
  CHECK(h3.mul(h3.generator(1), h3.generator(2)) == h3.basis(perm({2, 3, 1})));
  auto lhs = h3.mul(h3.mul(h3.generator(1), h3.generator(2)), h3.generator(1));
  auto rhs = h3.mul(h3.mul(h3.generator(2), h3.generator(1)), h3.generator(2));
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(h3.mul(h3.identity(), h2.identity()), ContextMismatch);
}

TEST_CASE("generator inverses") {
  auto h = generic_hecke_algebra(2);
  CHECK(h.mul(h.generator(1), h.generator(1, Sign::Negative)) == h.identity());
  CHECK(h.mul(h.generator(1, Sign::Negative), h.generator(1)) == h.identity());
  CHECK(h.generator(1, Sign::Negative).coefficient(Permutation(2)) == (q1 + q2) / (q1 * q2));

  HeckeAlgebra<Rational> sym(2, Rational(1), Rational(-1));
  CHECK(sym.generator(1, Sign::Negative) == sym.generator(1));
}

TEST_CASE("braid word images") {
  auto h2 = generic_hecke_algebra(2);
  CHECK(h2.from_braid_word(BraidWord(2, {1, -1})) == h2.identity());
  CHECK(h2.from_braid_word(BraidWord(2, {1, 1})) ==
        h2.generator(1).scaled(q1 + q2) - h2.identity().scaled(q1 * q2));
  auto h3 = generic_hecke_algebra(3);
  CHECK(h3.from_braid_word(BraidWord(3, {1, 2, 1})) == h3.from_braid_word(BraidWord(3, {2, 1, 2})));
  CHECK(h3.from_braid_word(BraidWord(3)) == h3.identity());
  CHECK_THROWS_AS(h3.from_braid_word(BraidWord(2)), ContextMismatch);
}

TEST_CASE("star antiautomorphism") {
  auto h = generic_hecke_algebra(3);
  CHECK(star(h.basis(perm({2, 3, 1}))) == h.basis(perm({3, 1, 2})));
  CHECK(star(h.basis(Permutation::from_word(3, std::vector<int>{1, 2}))) ==
        h.basis(Permutation::from_word(3, std::vector<int>{2, 1})));
  CHECK(star(h.identity()) == h.identity());
  std::mt19937 rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = random_element(rng, h);
    auto b = random_element(rng, h);
    CHECK(star(star(a)) == a);
    CHECK(star(h.mul(a, b)) == h.mul(star(b), star(a)));
  }
}

TEST_CASE("algebra properties on random inputs") {
  std::mt19937 rng(9);
  for (int n = 2; n <= 4; ++n) {
    auto h = generic_hecke_algebra(n);
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_element(rng, h);
      auto b = random_element(rng, h);
      auto c = random_element(rng, h);
      CHECK(h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c)));
      auto u = testing::random_braid(rng, n, 6);
      auto v = testing::random_braid(rng, n, 6);
      CHECK(h.from_braid_word(u * v) == h.mul(h.from_braid_word(u), h.from_braid_word(v)));
      // support of a product of k generators has length <= k
      auto image = h.from_braid_word(u);
      for (const auto& [w, coeff] : image.terms()) CHECK(w.length() <= static_cast<int>(u.size()));
    }
    for (int i = 1; i < n; ++i) {
      auto t = h.generator(i);
      CHECK((h.mul(t, t) - t.scaled(q1 + q2) + h.identity().scaled(q1 * q2)).is_zero());
      for (int j = 1; j < n; ++j) {
        auto tj = h.generator(j);
        if (std::abs(i - j) == 1) CHECK(h.mul(h.mul(t, tj), t) == h.mul(h.mul(tj, t), tj));
        if (std::abs(i - j) > 1) CHECK(h.mul(t, tj) == h.mul(tj, t));
      }
    }
  }
}

TEST_CASE("symmetric group specialization") {
  HeckeAlgebra<Rational> h2(2, Rational(1), Rational(-1));
  auto sq = to_symmetric_group(h2, h2.mul(h2.generator(1), h2.generator(1)));
  CHECK(sq.size() == 1);
  CHECK(sq.at(Permutation(2)) == Rational(1));

  HeckeAlgebra<Rational> h3(3, Rational(1), Rational(-1));
  auto img = to_symmetric_group(h3, h3.from_braid_word(BraidWord(3, {1, 2})));
  CHECK(img.size() == 1);
  CHECK(img.at(perm({2, 3, 1})) == Rational(1));

  std::mt19937 rng(6);
  HeckeAlgebra<Rational> h4(4, Rational(1), Rational(-1));
  for (int trial = 0; trial < 30; ++trial) {
    auto u = testing::random_braid(rng, 4, 6);
    auto v = testing::random_braid(rng, 4, 6);
    auto prod = to_symmetric_group(h4, h4.mul(h4.from_braid_word(u), h4.from_braid_word(v)));
    CHECK(prod.size() == 1);
    CHECK(prod.begin()->first == underlying_permutation(u) * underlying_permutation(v));
    CHECK(prod.begin()->second == Rational(1));
  }

  HeckeAlgebra<Rational> other(2, Rational(-1), Rational(2));
  CHECK_THROWS_AS(to_symmetric_group(other, other.identity()), UnsupportedField);
}

TEST_CASE("text rendering") {
  auto h = generic_hecke_algebra(2);
  CHECK(h.from_braid_word(BraidWord(2, {1, 1})).to_string() == "(q1+q2)*T[2,1] + (-q1*q2)*T[1,2]");
  CHECK(h.from_braid_word(BraidWord(2, {1, -1})).to_string() == "T[1,2]");
  CHECK(h.zero().to_string() == "0");
}
