#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selsolve {

/// N: prune and selectively split the necessary condition for I.
/// S: prune and selectively split the symmetry condition for u.
/// F: formulate what is left, split completely, solve.
enum class Step : char { N = 'N', S = 'S', F = 'F' };

/// A step sequence with exactly one F, at the end.
///
/// Text grammar (whitespace ignored, case-insensitive):
///   steps ::= step+
///   step  ::= atom [INT]
///   atom  ::= 'N' | 'S' | 'F' | '(' steps ')'
/// so the literal sequence n^3 (snn)^4 (sn)^4 then F reads "N3(SNN)4(SN)4F".
/// Superscript digits are accepted as repeat counts too.
class Strategy {
 public:
  /// Throws std::invalid_argument unless steps end in the only F.
  explicit Strategy(std::vector<Step> steps);

  /// Throws ParseError (line 1) on malformed text.
  static Strategy parse(std::string_view text);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  /// Selective steps only (everything before F).
  std::span<const Step> selective_steps() const noexcept {
    return std::span<const Step>(steps_).first(steps_.size() - 1);
  }

  /// Every step spelled out, e.g. "NNNSNNF".
  std::string expanded() const;
  /// Repeated runs folded into exponent form, e.g. "N3(SNN)4(SN)4F".
  std::string compact() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::vector<Step> steps_;
};

}  // namespace selsolve
