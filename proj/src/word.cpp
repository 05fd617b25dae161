#include "selsolve/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace selsolve {

namespace {

std::uint64_t low_mask(std::size_t bit_count) {
  return bit_count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bit_count) - 1;
}

}  // namespace

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::U:
      return "u";
    case Generator::V:
      return "v";
    case Generator::Uinv:
      return "u^-1";
    case Generator::Vinv:
      return "v^-1";
  }
  return "?";
}

Word::Word(std::initializer_list<Generator> letters) {
  for (Generator g : letters) append_reduced(g);
}

Word::Word(std::span<const Generator> letters) {
  for (Generator g : letters) append_reduced(g);
}

void Word::append_reduced(Generator g) {
  if (length_ > 0 && back() == selsolve::inverse(g)) {
    bits_ >>= 2;
    --length_;
    return;
  }
  if (length_ == kMaxLength) throw std::length_error("word exceeds maximum length");
  bits_ = (bits_ << 2) | static_cast<std::uint64_t>(g);
  ++length_;
}

Word Word::prefix(std::size_t len) const noexcept {
  if (len >= length_) return *this;
  Word w;
  w.length_ = static_cast<std::uint8_t>(len);
  w.bits_ = len == 0 ? 0 : bits_ >> (2 * (length_ - len));
  return w;
}

Word Word::suffix(std::size_t from) const noexcept {
  if (from >= length_) return Word{};
  Word w;
  w.length_ = static_cast<std::uint8_t>(length_ - from);
  w.bits_ = bits_ & low_mask(2 * w.length_);
  return w;
}

Word Word::inverse() const {
  Word w;
  for (std::size_t i = length_; i-- > 0;) w.append_reduced(selsolve::inverse((*this)[i]));
  return w;
}

std::vector<Generator> Word::letters() const {
  std::vector<Generator> out(length_);
  for (std::size_t i = 0; i < length_; ++i) out[i] = (*this)[i];
  return out;
}

std::string Word::to_string() const {
  if (length_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < length_; ++i) {
    if (i) out += '*';
    out += selsolve::to_string((*this)[i]);
  }
  return out;
}

Word word_mul(const Word& a, const Word& b) {
  // Cancel the longest inverse overlap between the tail of a and head of b,
  // then splice the packed remainders.
  std::size_t cancel = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (cancel < limit && a[a.size() - 1 - cancel] == inverse(b[cancel])) ++cancel;
  Word left = a.prefix(a.size() - cancel);
  Word right = b.suffix(cancel);
  if (left.size() + right.size() > Word::kMaxLength)
    throw std::length_error("word exceeds maximum length");
  Word out = left;
  for (std::size_t i = 0; i < right.size(); ++i) out.append_reduced(right[i]);
  return out;
}

Word word_mul(const Word& a, const Word& b, const Word& c) { return word_mul(word_mul(a, b), c); }

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
      ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip();
    if (i != text.size()) throw std::invalid_argument("unexpected text after '1' in word");
    return w;
  }
  while (i < text.size()) {
    char c = text[i++];
    Generator g;
    if (c == 'u')
      g = Generator::U;
    else if (c == 'v')
      g = Generator::V;
    else if (c == 'U')
      g = Generator::Uinv;
    else if (c == 'V')
      g = Generator::Vinv;
    else
      throw std::invalid_argument(std::string("bad letter in word: ") + c);
    if (text.substr(i, 3) == "^-1") {
      g = inverse(g);
      i += 3;
    }
    w.append_reduced(g);
    skip();
  }
  return w;
}

std::vector<Word> reduced_words_up_to(std::size_t max_degree) {
  // Extending each word of one length by every non-cancelling letter, in
  // letter order, keeps each length layer sorted.
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const Word base = out[i];
      for (Generator g : kGenerators) {
        if (!base.empty() && base.back() == inverse(g)) continue;
        Word w = base;
        w.append_reduced(g);
        out.push_back(w);
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace selsolve
