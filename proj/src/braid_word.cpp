#include "hecke/braid_word.hpp"

#include <cctype>
#include <charconv>

#include "hecke/errors.hpp"

namespace hecke {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw DomainError("a braid needs at least one strand");
  for (int j : letters_)
    if (j == 0 || j >= strands || -j >= strands)
      throw DomainError("generator " + std::to_string(j) + " out of range for " + std::to_string(strands) + " strands");
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (strands_ != other.strands_) throw ContextMismatch("concatenating braids on different strand counts");
  std::vector<int> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& j : out) j = -j;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::free_reduced() const {
  std::vector<int> out;
  for (int j : letters_) {
    if (!out.empty() && out.back() == -j)
      out.pop_back();
    else
      out.push_back(j);
  }
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::to_string() const {
  std::string out = "B" + std::to_string(strands_) + ":";
  for (int j : letters_) out += " " + std::to_string(j);
  return out;
}

BraidWord parse_braid_word(std::string_view text, std::optional<int> strands) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) -> std::optional<int> {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) {
      pos = start;
      return std::nullopt;
    }
    std::string_view token = text.substr(start, pos - start);
    if (token.front() == '+') token.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) throw ParseError("integer out of range", start);
    return value;
  };

  skip_space();
  if (pos < text.size() && text[pos] == 'B') {
    std::size_t at = pos;
    ++pos;
    auto n = read_int(false);
    if (!n) throw ParseError("expected strand count after 'B'", pos);
    skip_space();
    if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':' after strand count", pos);
    ++pos;
    if (strands && *strands != *n)
      throw ParseError("inline strand count " + std::to_string(*n) + " disagrees with " + std::to_string(*strands), at);
    strands = *n;
  }
  if (!strands) throw ParseError("strand count not given", 0);
  if (*strands < 1) throw ParseError("strand count must be positive", 0);

  std::vector<int> letters;
  bool need_separator = false;
  while (true) {
    std::size_t before = pos;
    skip_space();
    bool had_space = pos != before;
    if (pos >= text.size()) break;
    if (text[pos] == ',') {
      ++pos;
      need_separator = false;
      continue;
    }
    if (need_separator && !had_space) throw ParseError("expected separator", pos);
    std::size_t at = pos;
    auto value = read_int(true);
    if (!value) throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
    if (*value == 0) throw ParseError("generator index 0 is not allowed", at);
    int index = *value < 0 ? -*value : *value;
    if (index >= *strands)
      throw ParseError("generator " + std::to_string(*value) + " out of range for " + std::to_string(*strands) + " strands", at);
    letters.push_back(*value);
    need_separator = true;
  }
  return BraidWord(*strands, std::move(letters));
}

Permutation underlying_permutation(const BraidWord& b) { return Permutation::from_word(b.strands(), b.letters()); }

int writhe(const BraidWord& b) {
  int w = 0;
  for (int j : b.letters()) w += j > 0 ? 1 : -1;
  return w;
}

int bennequin(const BraidWord& b) { return writhe(b) - b.strands(); }

int closure_components(const BraidWord& b) { return underlying_permutation(b).cycle_count(); }

}  // namespace hecke
