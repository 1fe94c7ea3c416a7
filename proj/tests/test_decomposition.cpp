#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "hecke/closure_decomposition.hpp"
#include "hecke/markov_moves.hpp"
#include "hecke/markov_trace.hpp"
#include "hecke/specht.hpp"
#include "hecke/specialize.hpp"

using namespace hecke;

namespace {
const RationalFunction q1 = RationalFunction::variable(Var::q1);
const RationalFunction q2 = RationalFunction::variable(Var::q2);
const RationalFunction delta = (1 + q1 * q2) / (q1 + q2);

const CharacterTable& table(int n) {
  static std::map<int, CharacterTable> tables;
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, CharacterTable(n)).first;
  return it->second;
}
}  // namespace

TEST_CASE("one-dimensional characters") {
  // T_i acts on the trivial-shape module by q2 and on the column shape by q1
  for (int n = 1; n <= 4; ++n) {
    const auto& t = table(n);
    const std::size_t last = t.partitions().size() - 1;
    CHECK(t.partitions().front() == Partition({n}));
    for (const auto& w : all_permutations(n)) {
      CHECK(t.on_basis(0, w) == q2.pow(w.length()));
      CHECK(t.on_basis(last, w) == q1.pow(w.length()));
    }
    for (std::size_t row = 0; row < t.partitions().size(); ++row)
      CHECK(t.on_basis(row, Permutation(n)) == RationalFunction(count_standard_tableaux(t.partitions()[row])));
  }
}

TEST_CASE("characters are class functions") {
  std::mt19937 rng(31);
  for (int n = 2; n <= 4; ++n) {
    const auto& t = table(n);
    const auto& h = t.algebra();
    for (int trial = 0; trial < 6; ++trial) {
      auto a = h.from_braid_word(testing::random_braid(rng, n, 4));
      auto b = h.from_braid_word(testing::random_braid(rng, n, 4));
      for (std::size_t row = 0; row < t.partitions().size(); ++row)
        CHECK(t(row, h.mul(a, b)) == t(row, h.mul(b, a)));
    }
  }
}

TEST_CASE("orthogonality at the symmetric group point") {
  // (q1, q2) = (1, -1) is the group algebra of S_n
  const Assignment<Rational> point{{Var::q1, Rational(1)}, {Var::q2, Rational(-1)}};
  for (int n = 1; n <= 4; ++n) {
    const auto& t = table(n);
    const auto perms = all_permutations(n);
    long order = static_cast<long>(perms.size());
    for (std::size_t a = 0; a < t.partitions().size(); ++a)
      for (std::size_t b = 0; b < t.partitions().size(); ++b) {
        Rational sum(0);
        for (const auto& w : perms) sum = sum + specialize(t.on_basis(a, w), point) * specialize(t.on_basis(b, w), point);
        CHECK(sum == Rational(a == b ? order : 0));
      }
  }
}

TEST_CASE("character matrix is invertible") {
  for (int n = 1; n <= 4; ++n) CHECK_FALSE(is_zero(determinant(table(n).closure_basis_matrix())));
}

TEST_CASE("decomposition examples") {
  // sigma_1^2 maps to T_1^2 = (q1 + q2) T_1 - q1 q2, and T_1, 1 are the images of b_(2), b_(1,1)
  auto d = decompose_closure(BraidWord(2, {1, 1}), table(2));
  CHECK(d.coefficient(Partition({2})) == q1 + q2);
  CHECK(d.coefficient(Partition({1, 1})) == -q1 * q2);
  CHECK(d.to_string() == "(2): q1+q2\n(1,1): -q1*q2\n");
  // sigma_1^-1 maps to (q1 + q2 - T_1) / (q1 q2)
  auto inv = decompose_closure(BraidWord(2, {-1}), table(2));
  CHECK(inv.coefficient(Partition({2})) == -1 / (q1 * q2));
  CHECK(inv.coefficient(Partition({1, 1})) == (q1 + q2) / (q1 * q2));

  CHECK_THROWS_AS(decompose_closure(BraidWord(3, {1}), table(2)), ContextMismatch);
  CHECK_THROWS_AS((void)d.coefficient(Partition({3})), DomainError);
}

TEST_CASE("b_lambda decomposes to a unit vector") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto d = decompose_closure(b_lambda(lambda), table(n));
      for (const auto& [mu, c] : d.coefficients) CHECK(c == RationalFunction(mu == lambda ? 1 : 0));
    }
}

TEST_CASE("decomposition is conjugation invariant and recovers the trace") {
  std::mt19937 rng(32);
  MarkovTrace<RationalFunction> tr(generic_hecke_algebra(1));
  for (int trial = 0; trial < 24; ++trial) {
    int n = 2 + trial % 3;
    auto b = testing::random_braid(rng, n, 6);
    auto d = decompose_closure(b, table(n));
    auto conj = decompose_closure(conjugate(b, testing::random_braid(rng, n, 4)), table(n));
    CHECK(d.coefficients == conj.coefficients);
    // each v_lambda has trace delta^(parts - 1)
    RationalFunction recombined;
    for (const auto& [lambda, c] : d.coefficients) recombined += c * delta.pow(lambda.length() - 1);
    CHECK(recombined == trace_of_braid(b, tr));
  }
}
