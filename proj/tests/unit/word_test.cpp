#include <gtest/gtest.h>

#include "selsolve/word.hpp"

using namespace selsolve;
using G = Generator;

TEST(Word, FreeReductionCancelsAdjacentInverses) {
  EXPECT_EQ(Word({G::U, G::Uinv}), Word{});
  EXPECT_EQ(Word({G::U, G::V, G::Vinv, G::Uinv, G::V}), Word{G::V});
  EXPECT_EQ(Word({G::U, G::V, G::Vinv, G::V}).to_string(), "u*v");
}

TEST(Word, TextFormat) {
  EXPECT_EQ(Word{}.to_string(), "1");
  EXPECT_EQ(Word({G::U, G::V, G::Uinv, G::Vinv}).to_string(), "u*v*u^-1*v^-1");
  EXPECT_EQ(parse_word("u*v*u^-1*v^-1"), Word({G::U, G::V, G::Uinv, G::Vinv}));
  EXPECT_EQ(parse_word("u V U v"), Word({G::U, G::Vinv, G::Uinv, G::V}));
  EXPECT_EQ(parse_word("1"), Word{});
  EXPECT_EQ(parse_word("u*u^-1"), Word{});
}

TEST(Word, InverseAndProduct) {
  const Word w = parse_word("u*v*v*u^-1");
  EXPECT_EQ(w.inverse().to_string(), "u*v^-1*v^-1*u^-1");
  EXPECT_TRUE(word_mul(w, w.inverse()).empty());
  EXPECT_EQ(word_mul(parse_word("u*v"), parse_word("v^-1*u")), parse_word("u*u"));
  EXPECT_EQ(word_mul(parse_word("u"), parse_word("v"), parse_word("u^-1")), parse_word("u*v*u^-1"));
}

TEST(Word, PrefixSuffix) {
  const Word w = parse_word("u*v*u^-1*v^-1");
  EXPECT_EQ(w.prefix(2), parse_word("u*v"));
  EXPECT_EQ(w.suffix(2), parse_word("u^-1*v^-1"));
  EXPECT_EQ(w.prefix(0), Word{});
  EXPECT_EQ(w[2], G::Uinv);
  EXPECT_EQ(w.back(), G::Vinv);
}

TEST(Word, DegreeLexOrder) {
  EXPECT_LT(Word{}, Word{G::U});
  EXPECT_LT(Word{G::Vinv}, parse_word("u*u"));
  EXPECT_LT(Word{G::U}, Word{G::V});
  EXPECT_LT(Word{G::V}, Word{G::Uinv});
  EXPECT_LT(parse_word("u*v^-1"), parse_word("v*u"));
}

TEST(Word, ReducedWordCounts) {
  // 1 + 4 + 12 + 36: each letter after the first has three choices.
  const auto words = reduced_words_up_to(3);
  EXPECT_EQ(words.size(), 53u);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
  EXPECT_EQ(words.front(), Word{});
  EXPECT_EQ(reduced_words_up_to(0).size(), 1u);
}

TEST(Word, LengthLimit) {
  Word w;
  for (std::size_t i = 0; i < Word::kMaxLength; ++i) w.append_reduced(G::U);
  EXPECT_EQ(w.size(), Word::kMaxLength);
  EXPECT_THROW(w.append_reduced(G::U), std::length_error);
  w.append_reduced(G::Uinv);
  EXPECT_EQ(w.size(), Word::kMaxLength - 1);
}
