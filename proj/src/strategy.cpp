#include "selsolve/strategy.hpp"

#include <cctype>
#include <stdexcept>

#include "selsolve/errors.hpp"

namespace selsolve {

Strategy::Strategy(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty() || steps_.back() != Step::F)
    throw std::invalid_argument("strategy must end with F");
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i)
    if (steps_[i] == Step::F) throw std::invalid_argument("F may only appear once, at the end");
}

namespace {

class StrategyParser {
 public:
  explicit StrategyParser(std::string_view text) : text_(text) {}

  std::vector<Step> parse_all() {
    std::vector<Step> out = parse_steps();
    skip_space();
    if (pos_ != text_.size()) fail(pos_ == 0 || text_[pos_] != ')' ? "unexpected character" : "unbalanced ')'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, "strategy column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::vector<Step> parse_steps() {
    std::vector<Step> out;
    while (true) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') break;
      std::vector<Step> atom = parse_atom();
      const std::size_t count = parse_count();
      for (std::size_t i = 0; i < count; ++i) out.insert(out.end(), atom.begin(), atom.end());
    }
    if (out.empty()) fail("empty step sequence");
    return out;
  }

  std::vector<Step> parse_atom() {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_])));
    if (c == 'N' || c == 'S' || c == 'F') {
      ++pos_;
      return {static_cast<Step>(c)};
    }
    if (c == '(') {
      ++pos_;
      std::vector<Step> inner = parse_steps();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  // Optional ASCII or superscript repeat count; 1 when absent.
  std::size_t parse_count() {
    skip_space();
    std::size_t value = 0;
    bool any = false;
    while (pos_ < text_.size()) {
      int digit = -1;
      const auto c = static_cast<unsigned char>(text_[pos_]);
      std::size_t width = 1;
      if (std::isdigit(c)) {
        digit = c - '0';
      } else if (c == 0xC2 && pos_ + 1 < text_.size()) {
        const auto d = static_cast<unsigned char>(text_[pos_ + 1]);
        if (d == 0xB9) digit = 1;
        if (d == 0xB2) digit = 2;
        if (d == 0xB3) digit = 3;
        width = 2;
      } else if (c == 0xE2 && pos_ + 2 < text_.size() &&
                 static_cast<unsigned char>(text_[pos_ + 1]) == 0x81) {
        const auto d = static_cast<unsigned char>(text_[pos_ + 2]);
        if (d == 0xB0) digit = 0;
        if (d >= 0xB4 && d <= 0xB9) digit = d - 0xB0;
        width = 3;
      }
      if (digit < 0) break;
      value = value * 10 + static_cast<std::size_t>(digit);
      if (value > 100000) fail("repeat count too large");
      any = true;
      pos_ += width;
    }
    if (!any) return 1;
    if (value == 0) fail("repeat count must be positive");
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string step_string(std::span<const Step> steps) {
  std::string out;
  for (Step s : steps) out += static_cast<char>(s);
  return out;
}

}  // namespace

Strategy Strategy::parse(std::string_view text) {
  std::vector<Step> steps = StrategyParser(text).parse_all();
  try {
    return Strategy(std::move(steps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, std::string("strategy: ") + e.what());
  }
}

std::string Strategy::expanded() const { return step_string(steps_); }

std::string Strategy::compact() const {
  // Greedy: at each position take the block length whose repetition covers
  // the most steps (shorter blocks win ties).
  const std::string s = expanded();
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t best_len = 1, best_reps = 1;
    for (std::size_t len = 1; i + 2 * len <= s.size(); ++len) {
      std::size_t reps = 1;
      while (i + (reps + 1) * len <= s.size() &&
             s.compare(i + reps * len, len, s, i, len) == 0)
        ++reps;
      if (reps > 1 && reps * len > best_reps * best_len) {
        best_len = len;
        best_reps = reps;
      }
    }
    const std::string block = s.substr(i, best_len);
    if (best_reps == 1)
      out += block;
    else
      out += (best_len == 1 ? block : "(" + block + ")") + std::to_string(best_reps);
    i += best_len * best_reps;
  }
  return out;
}

}  // namespace selsolve
