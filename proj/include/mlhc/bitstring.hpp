#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mlhc/errors.hpp"

namespace mlhc {

/// Fixed-length bit sequence with 1-based positions; position 1 is the
/// leftmost character of the textual form. Value type: every mutating-looking
/// operation returns a new string.
class Bitstring {
 public:
  Bitstring() = default;

  /// Parses ASCII '0'/'1'. Throws parse_error on any other character.
  explicit Bitstring(std::string_view text) : bits_(text) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] != '0' && bits_[i] != '1') {
        throw parse_error("invalid character '" + std::string(1, bits_[i]) + "' at position " +
                          std::to_string(i + 1) + " in bitstring \"" + std::string(text) + "\"");
      }
    }
  }

  static Bitstring zeros(std::size_t length) { return from_chars(std::string(length, '0')); }
  static Bitstring ones(std::size_t length) { return from_chars(std::string(length, '1')); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  /// Bit at 1-based position `pos`.
  int bit(std::size_t pos) const { return bits_.at(pos - 1) == '1' ? 1 : 0; }

  std::size_t weight() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
  }

  Bitstring flipped(std::size_t pos) const {
    Bitstring out = *this;
    char& c = out.bits_.at(pos - 1);
    c = c == '1' ? '0' : '1';
    return out;
  }

  /// Substring of `len` bits starting at 1-based position `pos`.
  Bitstring slice(std::size_t pos, std::size_t len) const { return from_chars(bits_.substr(pos - 1, len)); }

  const std::string& str() const noexcept { return bits_; }

  friend Bitstring operator+(const Bitstring& lhs, const Bitstring& rhs) {
    return from_chars(lhs.bits_ + rhs.bits_);
  }
  friend Bitstring operator+(const Bitstring& lhs, char bit) { return from_chars(lhs.bits_ + bit); }
  friend Bitstring operator+(char bit, const Bitstring& rhs) { return from_chars(bit + rhs.bits_); }

  // Same-length strings compare lexicographically with '0' < '1'.
  friend auto operator<=>(const Bitstring&, const Bitstring&) = default;
  friend bool operator==(const Bitstring&, const Bitstring&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Bitstring& b) { return os << b.bits_; }

 private:
  static Bitstring from_chars(std::string s) {
    Bitstring b;
    b.bits_ = std::move(s);
    return b;
  }

  std::string bits_;
};

inline Bitstring operator""_bits(const char* text, std::size_t len) { return Bitstring(std::string_view(text, len)); }

/// Reversed and complemented string.
inline Bitstring rev_complement(const Bitstring& x) {
  std::string out(x.size(), '0');
  for (std::size_t j = 1; j <= x.size(); ++j) out[j - 1] = x.bit(x.size() + 1 - j) ? '0' : '1';
  return Bitstring(out);
}

inline Bitstring complement(const Bitstring& x) {
  std::string out = x.str();
  for (char& c : out) c = c == '1' ? '0' : '1';
  return Bitstring(out);
}

inline std::size_t hamming_distance(const Bitstring& a, const Bitstring& b) {
  if (a.size() != b.size()) throw domain_error("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) d += a.bit(i) != b.bit(i);
  return d;
}

// ---------------------------------------------------------------------------
// Packed words. Bit position p (1-based) of a width-w string lives at machine
// bit (w - p), so for equal widths numeric order equals lexicographic order.

using Word = std::uint64_t;
inline constexpr std::size_t kMaxPackedWidth = 63;

inline Word pack(const Bitstring& x) {
  if (x.size() > kMaxPackedWidth) throw size_limit_error("bitstring too long to pack");
  Word w = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) w = (w << 1) | static_cast<Word>(x.bit(i));
  return w;
}

inline Bitstring unpack(Word w, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((w >> (width - 1 - i)) & 1U) s[i] = '1';
  }
  return Bitstring(s);
}

/// Mask with only 1-based position `pos` set.
constexpr Word position_mask(std::size_t pos, std::size_t width) { return Word{1} << (width - pos); }

constexpr int packed_bit(Word w, std::size_t pos, std::size_t width) {
  return static_cast<int>((w >> (width - pos)) & 1U);
}

/// 1-based position of the single differing bit, or 0 if the words are not adjacent.
constexpr std::size_t flip_position(Word a, Word b, std::size_t width) {
  Word d = a ^ b;
  if (std::popcount(d) != 1) return 0;
  return width - static_cast<std::size_t>(std::countr_zero(d));
}

}  // namespace mlhc

template <>
struct std::hash<mlhc::Bitstring> {
  std::size_t operator()(const mlhc::Bitstring& b) const noexcept { return std::hash<std::string>{}(b.str()); }
};
