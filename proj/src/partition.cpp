#include "hecke/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "hecke/errors.hpp"

namespace hecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  bool paren = i < text.size() && text[i] == '(';
  if (paren) ++i;
  while (true) {
    skip();
    if (i >= text.size() || text[i] == ')') break;
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a part", i);
    std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000) throw ParseError("part too large", start);
      ++i;
    }
    if (v == 0) throw ParseError("parts must be positive", start);
    if (!parts.empty() && v > parts.back()) throw ParseError("parts must be weakly decreasing", start);
    parts.push_back(static_cast<int>(v));
    skip();
    if (i < text.size() && text[i] == ',') ++i;
  }
  if (paren) {
    if (i >= text.size()) throw ParseError("missing ')'", i);
    ++i;
  } else if (i < text.size()) {
    throw ParseError("unexpected ')'", i);
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters", i);
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> current;
  // largest first part first gives descending lexicographic order
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      extend(remaining - p, p);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw DomainError("dominance between partitions of " + std::to_string(mu.size()) + " and " +
                      std::to_string(lambda.size()));
  int a = 0, b = 0;
  for (int j = 0; j < std::max(mu.length(), lambda.length()); ++j) {
    a += j < mu.length() ? mu[j] : 0;
    b += j < lambda.length() ? lambda[j] : 0;
    if (a < b) return false;
  }
  return true;
}

bool strictly_dominates(const Partition& mu, const Partition& lambda) { return mu != lambda && dominates(mu, lambda); }

bool e_restricted(const Partition& lambda, const QuantumE& e) {
  if (e.is_infinite()) return true;
  for (int i = 0; i < lambda.length(); ++i) {
    int next = i + 1 < lambda.length() ? lambda[i + 1] : 0;
    if (lambda[i] - next >= e.value()) return false;
  }
  return true;
}

BraidWord b_lambda(const Partition& lambda) {
  if (lambda.size() == 0) throw DomainError("b_lambda needs a nonempty partition");
  std::vector<int> letters;
  int offset = 0;
  for (int p : lambda.parts()) {
    for (int j = offset + p - 1; j >= offset + 1; --j) letters.push_back(j);
    offset += p;
  }
  return BraidWord(lambda.size(), std::move(letters));
}

std::vector<Permutation> young_subgroup(const Partition& lambda) {
  const int n = lambda.size();
  if (n > Permutation::kMaxDegree) throw DomainError("partition too large");
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = i + 1;
  // product of the blocks' symmetric groups: permute each block independently
  std::vector<Permutation> out;
  std::function<void(int, int)> fill = [&](int block, int offset) {
    if (block == lambda.length()) {
      out.push_back(Permutation::from_one_line(line));
      return;
    }
    auto first = line.begin() + offset;
    auto last = first + lambda[block];
    std::sort(first, last);
    do {
      fill(block + 1, offset + lambda[block]);
    } while (std::next_permutation(first, last));
  };
  if (n == 0) return {Permutation(0)};
  fill(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hecke
