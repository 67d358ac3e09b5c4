#include "bcn/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "bcn/error.hpp"

namespace bcn {

struct Formula::Node {
  Kind kind;
  bool value = false;
  std::string name;
  std::optional<Formula> left;
  std::optional<Formula> right;
};

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<const Node>(Node{Kind::kConst, value, {}, {}, {}}));
}

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kVar, false, std::move(name), {}, {}}));
}

Formula Formula::negate(Formula child) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kNot, false, {}, std::move(child), {}}));
}

Formula Formula::conj(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAnd, false, {}, std::move(left), std::move(right)}));
}

Formula Formula::disj(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kOr, false, {}, std::move(left), std::move(right)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
bool Formula::value() const noexcept { return node_->value; }
const std::string& Formula::name() const noexcept { return node_->name; }
const Formula& Formula::left() const noexcept { return *node_->left; }
const Formula& Formula::right() const noexcept { return *node_->right; }

namespace {

template <typename Visit>
void for_each_leaf(const Formula& f, Visit&& visit) {
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* cur = stack.back();
    stack.pop_back();
    switch (cur->kind()) {
      case Formula::Kind::kConst:
      case Formula::Kind::kVar:
        visit(*cur);
        break;
      case Formula::Kind::kNot:
        stack.push_back(&cur->left());
        break;
      case Formula::Kind::kAnd:
      case Formula::Kind::kOr:
        // right pushed first so leaves come out left to right
        stack.push_back(&cur->right());
        stack.push_back(&cur->left());
        break;
    }
  }
}

}  // namespace

std::size_t Formula::length() const {
  std::size_t leaves = 0;
  for_each_leaf(*this, [&](const Formula&) { ++leaves; });
  return leaves;
}

std::vector<std::string> Formula::variables() const {
  std::vector<std::string> out;
  std::set<std::string, std::less<>> seen;
  for_each_leaf(*this, [&](const Formula& leaf) {
    if (leaf.kind() == Kind::kVar && seen.insert(leaf.name()).second) {
      out.push_back(leaf.name());
    }
  });
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kConst:
      return a.value() == b.value();
    case Formula::Kind::kVar:
      return a.name() == b.name();
    case Formula::Kind::kNot:
      return a.left() == b.left();
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  Formula parse() {
    skip_space();
    if (at_end()) fail("empty formula");
    Formula f = parse_or();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return f;
  }

 private:
  Formula parse_or() {
    Formula lhs = parse_and();
    while (consume('|')) lhs = Formula::disj(std::move(lhs), parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (consume('&')) lhs = Formula::conj(std::move(lhs), parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    if (consume('!')) return Formula::negate(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_space();
    if (at_end()) fail("unexpected end of formula");
    const char c = peek();
    if (c == '(') {
      advance();
      Formula inner = parse_or();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t line = line_, column = column_;
      std::string digits;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
        digits += peek();
        advance();
      }
      if (digits == "0") return Formula::constant(false);
      if (digits == "1") return Formula::constant(true);
      throw ParseError("invalid constant '" + digits + "'", line, column);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_')) {
        name += peek();
        advance();
      }
      return Formula::var(std::move(name));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  bool consume(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace

Formula parse_formula(std::string_view text, std::size_t first_line,
                      std::size_t first_column) {
  return Parser(text, first_line, first_column).parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kOr:
      return 0;
    case Formula::Kind::kAnd:
      return 1;
    case Formula::Kind::kNot:
      return 2;
    default:
      return 3;
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kConst:
      out += f.value() ? '1' : '0';
      return;
    case Formula::Kind::kVar:
      out += f.name();
      return;
    case Formula::Kind::kNot: {
      out += '!';
      const bool wrap = precedence(f.left().kind()) < precedence(f.kind());
      if (wrap) out += '(';
      print(f.left(), out);
      if (wrap) out += ')';
      return;
    }
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      const int own = precedence(f.kind());
      const bool wrap_left = precedence(f.left().kind()) < own;
      // Left-associative: an equal-precedence right operand needs parens.
      const bool wrap_right = precedence(f.right().kind()) <= own;
      if (wrap_left) out += '(';
      print(f.left(), out);
      if (wrap_left) out += ')';
      out += f.kind() == Formula::Kind::kAnd ? " & " : " | ";
      if (wrap_right) out += '(';
      print(f.right(), out);
      if (wrap_right) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

bool eval(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Formula::Kind::kConst:
      return f.value();
    case Formula::Kind::kVar: {
      auto it = assignment.find(f.name());
      if (it == assignment.end()) {
        throw EvalError("no value for variable '" + f.name() + "'");
      }
      return it->second;
    }
    case Formula::Kind::kNot:
      return !eval(f.left(), assignment);
    case Formula::Kind::kAnd:
      return eval(f.left(), assignment) && eval(f.right(), assignment);
    case Formula::Kind::kOr:
      return eval(f.left(), assignment) || eval(f.right(), assignment);
  }
  return false;
}

Formula substitute(
    const Formula& f,
    const std::map<std::string, Formula, std::less<>>& replacements) {
  switch (f.kind()) {
    case Formula::Kind::kConst:
      return f;
    case Formula::Kind::kVar: {
      auto it = replacements.find(f.name());
      return it == replacements.end() ? f : it->second;
    }
    case Formula::Kind::kNot:
      return Formula::negate(substitute(f.left(), replacements));
    case Formula::Kind::kAnd:
      return Formula::conj(substitute(f.left(), replacements),
                           substitute(f.right(), replacements));
    case Formula::Kind::kOr:
      return Formula::disj(substitute(f.left(), replacements),
                           substitute(f.right(), replacements));
  }
  return f;
}

std::optional<Assignment> satisfiable_bruteforce(
    const Formula& f, std::span<const std::string> order,
    std::size_t variable_cap) {
  if (order.size() > variable_cap) {
    throw CapExceeded("satisfiability check over " +
                      std::to_string(order.size()) +
                      " variables exceeds cap " + std::to_string(variable_cap));
  }
  std::map<std::string, unsigned, std::less<>> slots;
  const auto k = static_cast<unsigned>(order.size());
  for (unsigned p = 0; p < k; ++p) {
    if (!slots.emplace(order[p], k - 1 - p).second) {
      throw EvalError("duplicate variable '" + order[p] + "' in order");
    }
  }
  for (const auto& name : f.variables()) {
    if (!slots.contains(name)) {
      throw EvalError("no value for variable '" + name + "'");
    }
  }
  const CompiledFormula program(f, slots);
  // Counting t upward with bits = ~t visits all-TRUE first and moves the last
  // variable fastest.
  const std::uint64_t count = std::uint64_t{1} << k;
  const std::uint64_t mask = count - 1;
  for (std::uint64_t t = 0; t < count; ++t) {
    const std::uint64_t bits = ~t & mask;
    if (program.eval(bits)) {
      Assignment a;
      for (unsigned p = 0; p < k; ++p) {
        a.emplace(order[p], (bits >> (k - 1 - p)) & 1U);
      }
      return a;
    }
  }
  return std::nullopt;
}

std::optional<Assignment> satisfiable_bruteforce(const Formula& f,
                                                 std::size_t variable_cap) {
  const auto order = f.variables();
  return satisfiable_bruteforce(f, order, variable_cap);
}

// ---------------------------------------------------------------------------
// CompiledFormula

CompiledFormula::CompiledFormula(
    const Formula& f,
    const std::map<std::string, unsigned, std::less<>>& slots) {
  // Iterative post-order so deep left-associative chains lower safely.
  struct Frame {
    const Formula* node;
    bool expanded;
  };
  std::vector<Frame> stack{{&f, false}};
  std::size_t depth = 0;
  while (!stack.empty()) {
    Frame frame = stack.back();
    stack.pop_back();
    const Formula& cur = *frame.node;
    switch (cur.kind()) {
      case Formula::Kind::kConst:
        program_.push_back({cur.value() ? Op::kTrue : Op::kFalse, 0});
        max_depth_ = std::max(max_depth_, ++depth);
        continue;
      case Formula::Kind::kVar: {
        auto it = slots.find(cur.name());
        if (it == slots.end()) {
          throw EvalError("no slot for variable '" + cur.name() + "'");
        }
        if (it->second >= 64) throw EvalError("slot index out of range");
        program_.push_back({Op::kLoad, static_cast<std::uint8_t>(it->second)});
        max_depth_ = std::max(max_depth_, ++depth);
        continue;
      }
      default:
        break;
    }
    if (frame.expanded) {
      switch (cur.kind()) {
        case Formula::Kind::kNot:
          program_.push_back({Op::kNot, 0});
          break;
        case Formula::Kind::kAnd:
          program_.push_back({Op::kAnd, 0});
          --depth;
          break;
        default:
          program_.push_back({Op::kOr, 0});
          --depth;
          break;
      }
      continue;
    }
    stack.push_back({&cur, true});
    if (cur.kind() != Formula::Kind::kNot) stack.push_back({&cur.right(), false});
    stack.push_back({&cur.left(), false});
  }
}

bool CompiledFormula::eval(std::uint64_t bits) const {
  std::vector<bool> stack;
  stack.reserve(max_depth_);
  for (const Instr& instr : program_) {
    switch (instr.op) {
      case Op::kFalse:
        stack.push_back(false);
        break;
      case Op::kTrue:
        stack.push_back(true);
        break;
      case Op::kLoad:
        stack.push_back((bits >> instr.slot) & 1U);
        break;
      case Op::kNot:
        stack.back() = !stack.back();
        break;
      case Op::kAnd: {
        const bool rhs = stack.back();
        stack.pop_back();
        stack.back() = stack.back() && rhs;
        break;
      }
      case Op::kOr: {
        const bool rhs = stack.back();
        stack.pop_back();
        stack.back() = stack.back() || rhs;
        break;
      }
    }
  }
  return stack.back();
}

std::uint64_t CompiledFormula::eval_lanes(
    std::span<const std::uint64_t> slot_words) const {
  std::vector<std::uint64_t> stack;
  stack.reserve(max_depth_);
  for (const Instr& instr : program_) {
    switch (instr.op) {
      case Op::kFalse:
        stack.push_back(0);
        break;
      case Op::kTrue:
        stack.push_back(~std::uint64_t{0});
        break;
      case Op::kLoad:
        stack.push_back(slot_words[instr.slot]);
        break;
      case Op::kNot:
        stack.back() = ~stack.back();
        break;
      case Op::kAnd: {
        const std::uint64_t rhs = stack.back();
        stack.pop_back();
        stack.back() &= rhs;
        break;
      }
      case Op::kOr: {
        const std::uint64_t rhs = stack.back();
        stack.pop_back();
        stack.back() |= rhs;
        break;
      }
    }
  }
  return stack.back();
}

}  // namespace bcn
