#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hecke/braid_word.hpp"
#include "hecke/invariants.hpp"

namespace hecke {

/// Integer Laurent polynomial in A. Deliberately separate from the
/// coefficient types used by the Hecke pipeline.
struct BracketPolynomial {
  std::map<int, std::int64_t> coeffs;  // exponent of A -> coefficient

  bool operator==(const BracketPolynomial&) const = default;
  std::string to_string() const;
};

/// Kauffman bracket of the closure by summing over all 2^c smoothings.
/// For sigma_i the A-smoothing is the cap-cup at position i; for its inverse
/// it is the vertical one. Throws DomainError beyond max_crossings letters.
BracketPolynomial kauffman_bracket_oracle(const BraidWord& b, int max_crossings = 16);

/// (-A^-3)^(-writhe) <closure> read in s = A^2, i.e. t = A^4.
JonesPolynomial jones_via_bracket(const BraidWord& b, int max_crossings = 16);

}  // namespace hecke
