#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/permutation.hpp"

namespace hecke {

/// Word in the Artin generators of B_n. Letter j > 0 is sigma_j, j < 0 is
/// sigma_|j|^-1. The word a b stacks a on top of b.
class BraidWord {
 public:
  /// Throws DomainError for strands < 1 or an out-of-range letter.
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Concatenation; strand counts must agree.
  BraidWord operator*(const BraidWord& other) const;
  /// Reversed word with every letter negated.
  BraidWord inverse() const;
  /// Repeatedly cancels adjacent j, -j.
  BraidWord free_reduced() const;

  bool operator==(const BraidWord&) const = default;

  /// `B3: 1 -2 1`; parse_braid_word reads it back unchanged.
  std::string to_string() const;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Parses whitespace- or comma-separated signed generator indices with an
/// optional `Bn:` prefix. When both the prefix and `strands` are given they
/// must agree. Throws ParseError (with offset) on syntax errors and
/// out-of-range generators.
BraidWord parse_braid_word(std::string_view text, std::optional<int> strands = std::nullopt);

/// The permutation phi(b); phi(ab) = phi(a) * phi(b), phi(sigma_i) = s_i.
Permutation underlying_permutation(const BraidWord& b);

int writhe(const BraidWord& b);
/// Exponent sum minus strand count.
int bennequin(const BraidWord& b);
/// Number of components of the closure, i.e. cycles of phi(b).
int closure_components(const BraidWord& b);

}  // namespace hecke
