#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selsolve {

/// The four letters of the free group on u, v.
/// The numeric values fix the canonical letter order U < V < Uinv < Vinv and
/// make inversion a single bit flip.
enum class Generator : std::uint8_t { U = 0, V = 1, Uinv = 2, Vinv = 3 };

constexpr Generator inverse(Generator g) {
  return static_cast<Generator>(static_cast<std::uint8_t>(g) ^ 2u);
}

constexpr std::array<Generator, 4> kGenerators = {Generator::U, Generator::V, Generator::Uinv,
                                                  Generator::Vinv};

std::string_view to_string(Generator g);

/// A freely reduced word over {u, v, u^-1, v^-1}: an element of the free group
/// and a monomial of a non-commutative Laurent polynomial.
///
/// Letters are packed two bits each, first letter most significant, so that
/// comparing (length, bits) is exactly degree-lexicographic order. Words are
/// limited to kMaxLength letters.
class Word {
 public:
  static constexpr std::size_t kMaxLength = 32;

  Word() = default;
  /// Freely reduces the given letter sequence.
  Word(std::initializer_list<Generator> letters);
  explicit Word(std::span<const Generator> letters);

  static Word letter(Generator g) { return Word{g}; }

  std::size_t size() const noexcept { return length_; }
  std::size_t degree() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  Generator operator[](std::size_t i) const noexcept {
    return static_cast<Generator>((bits_ >> (2 * (length_ - 1 - i))) & 3u);
  }
  Generator back() const noexcept { return static_cast<Generator>(bits_ & 3u); }

  /// Appends g, cancelling against the last letter when they are inverse.
  void append_reduced(Generator g);

  /// The first `len` letters.
  Word prefix(std::size_t len) const noexcept;
  /// Letters from position `from` to the end.
  Word suffix(std::size_t from) const noexcept;

  Word inverse() const;
  std::vector<Generator> letters() const;

  /// "1" for the empty word, otherwise letters joined by '*', e.g. "u*v*u^-1".
  std::string to_string() const;

  std::uint64_t bits() const noexcept { return bits_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t length_ = 0;
};

/// Reduced concatenation a*b.
Word word_mul(const Word& a, const Word& b);
/// Reduced concatenation a*b*c.
Word word_mul(const Word& a, const Word& b, const Word& c);

/// Parses the Word::to_string format. Also accepts whitespace separators and
/// the short letters U and V for u^-1 and v^-1. The result is reduced.
Word parse_word(std::string_view text);

/// All reduced words of length <= max_degree in degree-lexicographic order.
std::vector<Word> reduced_words_up_to(std::size_t max_degree);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ull ^ w.size());
  }
};

}  // namespace selsolve
