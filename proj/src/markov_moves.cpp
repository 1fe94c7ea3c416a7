#include "hecke/markov_moves.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

BraidWord conjugate(const BraidWord& b, const BraidWord& a) { return a * b * a.inverse(); }

BraidWord stabilize(const BraidWord& b, Sign sign) {
  std::vector<int> letters = b.letters();
  letters.push_back(sign == Sign::Positive ? b.strands() : -b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

bool can_destabilize(const BraidWord& b) {
  const int top = b.strands() - 1;
  if (top < 1 || b.empty()) return false;
  const auto& w = b.letters();
  if (w.back() != top && w.back() != -top) return false;
  return std::none_of(w.begin(), w.end() - 1, [top](int j) { return j == top || j == -top; });
}

BraidWord destabilize(const BraidWord& b) {
  if (!can_destabilize(b))
    throw DomainError("cannot destabilize " + b.to_string() + ": the last generator must occur once, as the final letter");
  std::vector<int> letters(b.letters().begin(), b.letters().end() - 1);
  return BraidWord(b.strands() - 1, std::move(letters));
}

BraidWord apply(const BraidWord& b, const MarkovMoveRecord& move) {
  struct Visitor {
    const BraidWord& b;
    BraidWord operator()(const Conjugate& c) const { return conjugate(b, c.by); }
    BraidWord operator()(const StabilizePositive&) const { return stabilize(b, Sign::Positive); }
    BraidWord operator()(const StabilizeNegative&) const { return stabilize(b, Sign::Negative); }
    BraidWord operator()(const DestabilizePositive&) const {
      if (b.empty() || b.letters().back() < 0) throw DomainError("final letter is not a positive crossing");
      return destabilize(b);
    }
    BraidWord operator()(const DestabilizeNegative&) const {
      if (b.empty() || b.letters().back() > 0) throw DomainError("final letter is not a negative crossing");
      return destabilize(b);
    }
  };
  return std::visit(Visitor{b}, move);
}

}  // namespace hecke
