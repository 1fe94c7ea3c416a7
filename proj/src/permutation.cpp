#include "hecke/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

namespace {
void check_degree(int n) {
  if (n < 0 || n > Permutation::kMaxDegree)
    throw DomainError("permutation degree " + std::to_string(n) + " outside [0, " +
                      std::to_string(Permutation::kMaxDegree) + "]");
}
}  // namespace

Permutation::Permutation(int n) {
  check_degree(n);
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_one_line(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  Permutation p(n);
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw DomainError("one-line notation is not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
  p.recompute_length();
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("simple transposition s_" + std::to_string(i) + " outside S_" + std::to_string(n));
  return Permutation(n).times_simple(i);
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
  Permutation p(n);
  for (int letter : word) {
    int i = letter < 0 ? -letter : letter;
    if (i < 1 || i >= n) throw DomainError("generator index " + std::to_string(letter) + " out of range for S_" + std::to_string(n));
    p = p.times_simple(i);
  }
  return p;
}

void Permutation::recompute_length() {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++inv;
  len_ = static_cast<std::uint8_t>(inv);
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (n_ != other.n_) throw ContextMismatch("composing permutations of different degrees");
  Permutation r(n_);
  for (int i = 0; i < n_; ++i) r.img_[static_cast<std::size_t>(i)] = img_[other.img_[static_cast<std::size_t>(i)]];
  r.recompute_length();
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(n_);
  for (int i = 0; i < n_; ++i) r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  r.len_ = len_;
  return r;
}

Permutation Permutation::times_simple(int i) const {
  Permutation r = *this;
  auto a = static_cast<std::size_t>(i - 1);
  r.len_ = static_cast<std::uint8_t>(has_right_descent(i) ? len_ - 1 : len_ + 1);
  std::swap(r.img_[a], r.img_[a + 1]);
  return r;
}

bool Permutation::has_left_descent(int i) const {
  // i+1 appears before i in one-line notation
  for (int k = 0; k < n_; ++k) {
    if (img_[static_cast<std::size_t>(k)] == i - 1) return false;
    if (img_[static_cast<std::size_t>(k)] == i) return true;
  }
  return false;
}

Permutation Permutation::simple_times(int i) const {
  Permutation r = *this;
  r.len_ = static_cast<std::uint8_t>(has_left_descent(i) ? len_ - 1 : len_ + 1);
  for (int k = 0; k < n_; ++k) {
    auto& v = r.img_[static_cast<std::size_t>(k)];
    if (v == i - 1)
      v = static_cast<std::uint8_t>(i);
    else if (v == i)
      v = static_cast<std::uint8_t>(i - 1);
  }
  return r;
}

std::vector<int> Permutation::reduced_word() const {
  // Sorting w by right multiplications w s_{a1} s_{a2} ... = id gives
  // w = ... s_{a2} s_{a1}.
  std::vector<int> swaps;
  Permutation w = *this;
  for (int value = n_ - 1; value >= 0; --value) {
    int pos = 0;
    while (w.img_[static_cast<std::size_t>(pos)] != value) ++pos;
    for (int k = pos; k < value; ++k) {
      swaps.push_back(k + 1);
      w = w.times_simple(k + 1);
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

int Permutation::cycle_count() const {
  std::array<bool, kMaxDegree> seen{};
  int cycles = 0;
  for (int i = 0; i < n_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true;
  }
  return cycles;
}

Permutation Permutation::restricted(int m) const {
  if (m > n_) throw DomainError("restriction to a larger symmetric group");
  for (int i = m + 1; i <= n_; ++i)
    if (!fixes(i)) throw DomainError("permutation " + to_string() + " does not fix " + std::to_string(i));
  Permutation r = *this;
  r.n_ = static_cast<std::uint8_t>(m);
  for (int i = m; i < kMaxDegree; ++i) r.img_[static_cast<std::size_t>(i)] = 0;
  return r;
}

Permutation Permutation::extended(int m) const {
  check_degree(m);
  if (m < n_) throw DomainError("extension to a smaller symmetric group");
  Permutation r = *this;
  for (int i = n_; i < m; ++i) r.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  r.n_ = static_cast<std::uint8_t>(m);
  return r;
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = len_ <=> o.len_; c != 0) return c;
  return img_ <=> o.img_;
}

std::size_t Permutation::hash() const {
  std::uint64_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 17 + img_[static_cast<std::size_t>(i)];
  return std::hash<std::uint64_t>{}(h);
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += std::to_string(img_[static_cast<std::size_t>(i)] + 1);
  }
  return out + "]";
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hecke
