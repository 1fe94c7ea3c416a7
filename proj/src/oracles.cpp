#include "hecke/oracles.hpp"

#include <cstdlib>
#include <functional>
#include <random>

#include "hecke/hecke_algebra.hpp"
#include "hecke/invariants.hpp"
#include "hecke/kauffman_bracket.hpp"
#include "hecke/markov_moves.hpp"
#include "hecke/markov_trace.hpp"
#include "hecke/partition.hpp"
#include "hecke/quantum_e.hpp"
#include "hecke/specht.hpp"

namespace hecke {

namespace {

using Element = HeckeElement<RationalFunction>;

Element apply_letter(const HeckeAlgebra<RationalFunction>& h, const Element& e, int letter, Fault fault) {
  const int i = std::abs(letter);
  if (letter > 0) return h.times_generator(e, i);
  if (fault == Fault::None) return h.times_generator_inverse(e, i);
  // (T_i - (q1 + q2)) / (q1 q2): the true inverse with the wrong sign
  Element flipped = h.times_generator(e, i) - e.scaled(h.q1() + h.q2());
  return flipped.scaled(inverse(h.q1() * h.q2()));
}

// Words one relation away from `word` with the rewrite starting at `pos`.
std::vector<std::pair<std::vector<int>, const char*>> neighbours(const std::vector<int>& word, std::size_t pos) {
  std::vector<std::pair<std::vector<int>, const char*>> out;
  const std::size_t len = word.size();
  if (pos + 1 < len) {
    int a = word[pos], b = word[pos + 1];
    if (a == -b) {
      auto w = word;
      w.erase(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos) + 2);
      out.emplace_back(std::move(w), "cancel");
    }
    if (std::abs(std::abs(a) - std::abs(b)) >= 2) {
      auto w = word;
      std::swap(w[pos], w[pos + 1]);
      out.emplace_back(std::move(w), "commute");
    }
  }
  if (pos + 2 < len) {
    int a = word[pos], b = word[pos + 1], c = word[pos + 2];
    bool same_sign = (a > 0) == (b > 0) && (b > 0) == (c > 0);
    if (a == c && same_sign && std::abs(std::abs(a) - std::abs(b)) == 1) {
      auto w = word;
      w[pos] = w[pos + 2] = b;
      w[pos + 1] = a;
      out.emplace_back(std::move(w), "braid");
    }
  }
  return out;
}

BraidWord random_braid(std::mt19937& rng, int strands, int max_letters) {
  std::vector<int> letters;
  if (strands > 1) {
    std::uniform_int_distribution<int> len(0, max_letters), gen(1, strands - 1), coin(0, 1);
    for (int k = len(rng); k > 0; --k) letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
  }
  return BraidWord(strands, std::move(letters));
}

// Runs `check` over `cases` inputs, turning false results and library
// errors into failures.
template <class F>
CheckOutcome run_check(std::string name, long cases, F&& check) {
  CheckOutcome out{std::move(name), 0, 0, {}};
  for (long i = 0; i < cases; ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = check(i, why);
    } catch (const Error& e) {
      why = e.what();
    }
    ++out.checked;
    if (!ok) {
      ++out.failures;
      if (out.detail.empty()) out.detail = why.empty() ? "case " + std::to_string(i) : why;
    }
  }
  return out;
}

}  // namespace

ClosureReport exhaustive_word_closure(int n, int max_len, Fault fault) {
  if (n < 1 || n > 4) throw DomainError("exhaustive word closure needs 1 <= n <= 4");
  if (max_len < 0 || max_len > 8) throw DomainError("exhaustive word closure needs 0 <= max_len <= 8");
  const auto h = generic_hecke_algebra(n);
  ClosureReport report;
  std::vector<int> word;
  std::vector<Element> prefix{h.identity()};  // prefix[k] is the image of word[0..k)

  auto image_from = [&](std::size_t pos, const std::vector<int>& w) {
    Element e = prefix[pos];
    for (std::size_t k = pos; k < w.size(); ++k) e = apply_letter(h, e, w[k], fault);
    return e;
  };

  std::function<void()> visit = [&] {
    for (std::size_t pos = 0; pos < word.size(); ++pos)
      for (auto& [other, relation] : neighbours(word, pos)) {
        ++report.checked;
        if (!(image_from(pos, other) == prefix.back()))
          report.violations.push_back({BraidWord(n, word), BraidWord(n, other), relation});
      }
    if (static_cast<int>(word.size()) == max_len) return;
    for (int g = 1; g < n; ++g)
      for (int letter : {g, -g}) {
        word.push_back(letter);
        prefix.push_back(apply_letter(h, prefix.back(), letter, fault));
        visit();
        prefix.pop_back();
        word.pop_back();
      }
  };
  visit();
  return report;
}

std::vector<CheckOutcome> quick_verification(Fault fault) {
  std::vector<CheckOutcome> out;
  std::mt19937 rng(20240611);
  const auto q1 = RationalFunction::variable(Var::q1);
  const auto q2 = RationalFunction::variable(Var::q2);
  const auto delta = (1 + q1 * q2) / (q1 + q2);

  out.push_back(run_check("braid relations, 3 strands, words up to length 4", 1, [&](long, std::string& why) {
    auto report = exhaustive_word_closure(3, 4, fault);
    if (report.violations.empty()) return true;
    const auto& v = report.violations.front();
    why = v.relation + ": " + v.left.to_string() + " vs " + v.right.to_string();
    return false;
  }));

  out.push_back(run_check("Hecke product at (1, -1) vs group algebra", 60, [&](long i, std::string& why) {
    const int n = 2 + static_cast<int>(i % 3);
    HeckeAlgebra<Rational> h(n, Rational(1), Rational(-1));
    const auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    HeckeElement<Rational> a(n), b(n);
    SymmetricGroupAlgebraElement<Rational> x(n), y(n);
    for (int t = 0; t < 3; ++t) {
      auto u = perms[pick(rng)], v = perms[pick(rng)];
      Rational cu(coeff(rng)), cv(coeff(rng));
      a.add_term(u, cu), x.add(u, cu);
      b.add_term(v, cv), y.add(v, cv);
    }
    SymmetricGroupAlgebraElement<Rational> hecke_side(n);
    for (const auto& [w, c] : to_symmetric_group(h, h.mul(a, b))) hecke_side.add(w, c);
    why = "n=" + std::to_string(n) + " " + a.to_string() + " * " + b.to_string();
    return hecke_side == sga_mul(x, y);
  }));

  MarkovTrace<RationalFunction> trace(generic_hecke_algebra(1));
  out.push_back(run_check("trace of b_lambda, n <= 5", 1, [&](long, std::string& why) {
    for (int n = 1; n <= 5; ++n)
      for (const auto& p : partitions_of(n))
        if (!(trace_of_braid(b_lambda(p), trace) == delta.pow(p.length() - 1))) {
          why = p.to_string();
          return false;
        }
    return true;
  }));

  out.push_back(run_check("Markov trace under moves", 12, [&](long i, std::string& why) {
    const int n = 1 + static_cast<int>(i % 4);
    auto b = random_braid(rng, n, 6);
    auto a = random_braid(rng, n, 4);
    why = b.to_string();
    auto base = trace_of_braid(b, trace);
    return trace_of_braid(stabilize(b, Sign::Positive), trace) == base &&
           trace_of_braid(stabilize(b, Sign::Negative), trace) == base &&
           trace_of_braid(conjugate(b, a), trace) == base &&
           (1 + q1 * q2) * base == (q1 + q2) * trace_of_braid(BraidWord(n + 1, b.letters()), trace);
  }));

  out.push_back(run_check("Jones polynomial vs Kauffman bracket", 40, [&](long i, std::string& why) {
    auto b = random_braid(rng, 2 + static_cast<int>(i % 2), 6);
    why = b.to_string();
    return jones(b, trace) == jones_via_bracket(b);
  }));

  out.push_back(run_check("Specht dimensions and generic Gram rank, n <= 4", 1, [&](long, std::string& why) {
    for (int n = 1; n <= 4; ++n) {
      auto ctx = generic_specht_context(n);
      for (const auto& p : partitions_of(n)) {
        auto s = specht_module(p, ctx);
        if (s.dimension() != count_standard_tableaux(p) || dim_D_lambda(s) != s.dimension()) {
          why = p.to_string();
          return false;
        }
      }
    }
    return true;
  }));

  out.push_back(run_check("Murphy proportionality, n = 3", 1, [&](long, std::string&) {
    auto ctx = generic_specht_context(3);
    for (const auto& p : partitions_of(3)) {
      auto s = specht_module(p, ctx);
      for (const auto& w : all_permutations(3))
        (void)s.proportionality(ctx.algebra().mul(s.m(), ctx.algebra().basis_times(w, s.m())));
    }
    return true;
  }));

  out.push_back(run_check("D nonzero exactly for e-restricted shapes, n <= 4", 3, [&](long i, std::string& why) {
    const std::uint32_t primes[] = {3, 7, 5};  // q = 2 gives e = 2, 3, 4
    PrimeField field(primes[i]);
    const Zp q = field.from_integer(2);
    for (int n = 1; n <= 4; ++n) {
      SpechtContext<Zp> ctx(n, q, field);
      for (const auto& p : partitions_of(n))
        if ((dim_D_lambda(specht_module(p, ctx)) > 0) != e_restricted(p, quantum_e(q))) {
          why = field.name() + " " + p.to_string();
          return false;
        }
    }
    return true;
  }));
  return out;
}

}  // namespace hecke
