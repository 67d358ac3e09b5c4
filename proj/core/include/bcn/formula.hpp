#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcn {

// Truth values per variable name, 1 = TRUE.
using Assignment = std::map<std::string, bool, std::less<>>;

// Immutable Boolean expression tree over named variables. Copies share
// structure, so building large formulas from common subterms is cheap.
class Formula {
 public:
  enum class Kind { kConst, kVar, kNot, kAnd, kOr };

  static Formula constant(bool value);
  static Formula var(std::string name);
  static Formula negate(Formula child);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);

  Kind kind() const noexcept;
  // Only meaningful for kConst.
  bool value() const noexcept;
  // Only meaningful for kVar.
  const std::string& name() const noexcept;
  // kNot: the operand. kAnd/kOr: the left operand.
  const Formula& left() const noexcept;
  const Formula& right() const noexcept;

  // Number of leaves (variables and constants).
  std::size_t length() const;
  // Distinct variable names in order of first occurrence (left to right).
  std::vector<std::string> variables() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Parses `!`, `&`, `|`, parentheses, identifiers and the constants 0/1.
// Precedence ! > & > |; binary operators are left-associative. Errors carry
// line/column relative to `text`, shifted by `first_line`/`first_column` so
// callers embedding formulas in a larger file get file positions.
Formula parse_formula(std::string_view text, std::size_t first_line = 1,
                      std::size_t first_column = 1);

// Minimal-parenthesis rendering; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

bool eval(const Formula& f, const Assignment& assignment);

// Replaces every variable named in `replacements` by its mapped formula,
// simultaneously. Unmapped variables are kept.
Formula substitute(const Formula& f,
                   const std::map<std::string, Formula, std::less<>>&
                       replacements);

inline constexpr std::size_t kDefaultSatVariableCap = 24;

// First satisfying assignment in canonical order: variables in `order`
// (first = most significant), TRUE tried before FALSE. Variables of `f`
// missing from `order` are an error.
std::optional<Assignment> satisfiable_bruteforce(
    const Formula& f, std::span<const std::string> order,
    std::size_t variable_cap = kDefaultSatVariableCap);

// Same, ordering variables by first occurrence in `f`.
std::optional<Assignment> satisfiable_bruteforce(
    const Formula& f, std::size_t variable_cap = kDefaultSatVariableCap);

// A formula lowered to a postfix program over numbered bit slots, for bulk
// evaluation. Slot `k` of an input word is bit `k`.
class CompiledFormula {
 public:
  // `slots` maps each variable name to its slot (< 64).
  CompiledFormula(const Formula& f,
                  const std::map<std::string, unsigned, std::less<>>& slots);

  bool eval(std::uint64_t bits) const;

  // Evaluates 64 assignments at once. `slot_words[k]` holds, per lane, the
  // value of slot k. Returns one result bit per lane.
  std::uint64_t eval_lanes(std::span<const std::uint64_t> slot_words) const;

 private:
  enum class Op : std::uint8_t { kFalse, kTrue, kLoad, kNot, kAnd, kOr };
  struct Instr {
    Op op;
    std::uint8_t slot;
  };

  std::vector<Instr> program_;
  std::size_t max_depth_ = 0;
};

}  // namespace bcn
