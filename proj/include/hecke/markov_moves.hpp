#pragma once

#include <optional>
#include <variant>

#include "hecke/braid_word.hpp"

namespace hecke {

enum class Sign { Positive, Negative };

/// a b a^-1. Strand counts must agree.
BraidWord conjugate(const BraidWord& b, const BraidWord& a);
/// b on n strands -> b sigma_n^(+-1) on n+1 strands.
BraidWord stabilize(const BraidWord& b, Sign sign);
/// Inverse of stabilize. Throws DomainError unless the final letter is
/// +-(n-1) and generator n-1 occurs nowhere else.
BraidWord destabilize(const BraidWord& b);
bool can_destabilize(const BraidWord& b);

struct Conjugate {
  BraidWord by;
};
struct StabilizePositive {};
struct StabilizeNegative {};
struct DestabilizePositive {};
struct DestabilizeNegative {};

/// One Markov move, replayable on a braid.
using MarkovMoveRecord =
    std::variant<Conjugate, StabilizePositive, StabilizeNegative, DestabilizePositive, DestabilizeNegative>;

/// Applies the move; destabilizations also check the sign of the final letter.
BraidWord apply(const BraidWord& b, const MarkovMoveRecord& move);

}  // namespace hecke
