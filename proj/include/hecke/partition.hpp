#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hecke/braid_word.hpp"
#include "hecke/permutation.hpp"
#include "hecke/quantum_e.hpp"

namespace hecke {

/// Weakly decreasing sequence of positive parts. Compares lexicographically.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Sum of the parts.
  int size() const { return size_; }
  /// Number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  /// `(3,2,1)`; the empty partition is `()`.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Reads `(3,2,1)`, `3,2,1` or `3 2 1`. Throws ParseError.
Partition parse_partition(std::string_view text);

/// Every partition of n once, in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Prefix sums of mu are >= those of lambda. Throws DomainError when the sizes differ.
bool dominates(const Partition& mu, const Partition& lambda);
bool strictly_dominates(const Partition& mu, const Partition& lambda);

/// Every difference lambda_i - lambda_{i+1}, with a trailing zero part, is < e.
bool e_restricted(const Partition& lambda, const QuantumE& e);

/// Concatenation of the blocks s_{k+p-1} ... s_{k+1} for each part p at offset k.
/// Requires a nonempty partition.
BraidWord b_lambda(const Partition& lambda);

/// Permutations preserving each block of consecutive positions, ascending.
std::vector<Permutation> young_subgroup(const Partition& lambda);

}  // namespace hecke
