#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hecke {

/// Element of the symmetric group S_n in one-line notation, images 1..n.
///
/// Composition follows the braid stacking convention: (u * v)(i) = u(v(i)).
/// Permutations order by (degree, length, one-line lexicographic).
class Permutation {
 public:
  static constexpr int kMaxDegree = 16;

  Permutation() = default;
  /// Identity of S_n.
  explicit Permutation(int n);
  /// Throws DomainError unless `images` is a bijection of {1..n}.
  static Permutation from_one_line(std::span<const int> images);
  /// The simple transposition s_i = (i, i+1) in S_n.
  static Permutation simple(int n, int i);
  /// Product s_{w[0]} s_{w[1]} ... of simple transpositions; signs ignored.
  static Permutation from_word(int n, std::span<const int> word);

  int degree() const { return n_; }
  /// Image of i, 1-based.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }
  /// Number of inversions.
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }
  std::vector<int> one_line() const;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  /// this * s_i (swaps positions i and i+1).
  Permutation times_simple(int i) const;
  /// s_i * this (swaps values i and i+1).
  Permutation simple_times(int i) const;
  /// length(this * s_i) < length(this).
  bool has_right_descent(int i) const { return img_[i - 1] > img_[i]; }
  /// length(s_i * this) < length(this).
  bool has_left_descent(int i) const;

  /// Canonical reduced word: repeatedly carry the largest misplaced value to
  /// its home position by adjacent swaps.
  std::vector<int> reduced_word() const;
  int cycle_count() const;
  bool fixes(int i) const { return (*this)(i) == i; }
  /// Restriction to S_m; requires every point above m to be fixed.
  Permutation restricted(int m) const;
  /// The same permutation viewed in S_m, m >= degree.
  Permutation extended(int m) const;

  bool operator==(const Permutation& o) const { return n_ == o.n_ && img_ == o.img_; }
  std::strong_ordering operator<=>(const Permutation& o) const;
  std::size_t hash() const;

  /// `[2,3,1]`
  std::string to_string() const;

 private:
  void recompute_length();

  std::array<std::uint8_t, kMaxDegree> img_{};  // zero-based images
  std::uint8_t n_ = 0;
  std::uint8_t len_ = 0;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }
inline Permutation inverse(const Permutation& a) { return a.inverse(); }
inline int length(const Permutation& a) { return a.length(); }
inline std::vector<int> reduced_word(const Permutation& a) { return a.reduced_word(); }

/// All of S_n in ascending (length, lexicographic) order.
std::vector<Permutation> all_permutations(int n);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace hecke
