#pragma once

// Propositional binary logic: formula AST, text syntax, semantics and the
// brute-force truth-table oracle.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbl {

enum class Connective : std::uint8_t { Atom, True, False, Not, And, Or, Implies, Iff };

// ---------------------------------------------------------------------------
// Errors

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

class ReservedAtomError : public std::invalid_argument {
 public:
  explicit ReservedAtomError(const std::string& name)
      : std::invalid_argument("atom name '" + name + "' is reserved for a constant") {}
};

class InvalidAtomError : public std::invalid_argument {
 public:
  explicit InvalidAtomError(const std::string& name)
      : std::invalid_argument("'" + name + "' is not a valid atom name") {}
};

class UnboundAtomError : public std::out_of_range {
 public:
  explicit UnboundAtomError(const std::string& name)
      : std::out_of_range("atom '" + name + "' has no value in the assignment"), atom_(name) {}
  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

// ---------------------------------------------------------------------------
// Formula

namespace detail {
inline bool is_atom_start(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_atom_char(char c) {
  return is_atom_start(c) || (c >= '0' && c <= '9') || c == '_';
}
}  // namespace detail

inline bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !detail::is_atom_start(name.front())) return false;
  return std::all_of(name.begin(), name.end(), detail::is_atom_char);
}

/// Immutable propositional formula with value semantics. Copies share
/// structure; equality and ordering are structural.
class Formula {
  struct Node {
    Node(Connective k, std::string n = {}, std::shared_ptr<const Node> l = nullptr,
         std::shared_ptr<const Node> r = nullptr, std::size_t c = 0)
        : kind(k), name(std::move(n)), left(std::move(l)), right(std::move(r)), connectives(c) {}

    Connective kind;
    std::string name;  // atoms only
    std::shared_ptr<const Node> left;  // Not uses left only
    std::shared_ptr<const Node> right;
    std::size_t connectives;
  };
  using NodePtr = std::shared_ptr<const Node>;

 public:
  /// Defaults to the constant t.
  Formula() : node_(constant_node(true)) {}

  static Formula atom(std::string name) {
    if (name == "t" || name == "f") throw ReservedAtomError(name);
    if (!is_valid_atom_name(name)) throw InvalidAtomError(name);
    return Formula(std::make_shared<const Node>(Connective::Atom, std::move(name)));
  }
  static Formula truth() { return Formula(constant_node(true)); }
  static Formula falsity() { return Formula(constant_node(false)); }
  static Formula negation(const Formula& a) {
    return Formula(std::make_shared<const Node>(Connective::Not, std::string{}, a.node_,
                                                       nullptr, a.connectives() + 1));
  }
  static Formula conjunction(const Formula& a, const Formula& b) {
    return binary(Connective::And, a, b);
  }
  static Formula disjunction(const Formula& a, const Formula& b) {
    return binary(Connective::Or, a, b);
  }
  static Formula implication(const Formula& a, const Formula& b) {
    return binary(Connective::Implies, a, b);
  }
  static Formula equivalence(const Formula& a, const Formula& b) {
    return binary(Connective::Iff, a, b);
  }
  static Formula binary(Connective kind, const Formula& a, const Formula& b) {
    if (!is_binary(kind)) throw std::invalid_argument("Formula::binary: not a binary connective");
    return Formula(std::make_shared<const Node>(kind, std::string{}, a.node_, b.node_,
                                                       a.connectives() + b.connectives() + 1));
  }

  static constexpr bool is_binary(Connective k) {
    return k == Connective::And || k == Connective::Or || k == Connective::Implies ||
           k == Connective::Iff;
  }

  Connective kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return kind() == Connective::Atom; }
  bool is_constant() const noexcept {
    return kind() == Connective::True || kind() == Connective::False;
  }
  bool is_true() const noexcept { return kind() == Connective::True; }
  bool is_false() const noexcept { return kind() == Connective::False; }
  bool is_compound() const noexcept { return node_->connectives != 0; }

  const std::string& name() const noexcept { return node_->name; }
  Formula child() const { return Formula(node_->left); }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  /// Number of connective occurrences (constants and atoms count zero).
  std::size_t connectives() const noexcept { return node_->connectives; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept {
    return compare(a.node_.get(), b.node_.get()) == 0;
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
    const int c = compare(a.node_.get(), b.node_.get());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Formula(NodePtr node) : node_(std::move(node)) {}

  static const NodePtr& constant_node(bool value) {
    static const NodePtr t = std::make_shared<const Node>(Connective::True);
    static const NodePtr f = std::make_shared<const Node>(Connective::False);
    return value ? t : f;
  }

  static int compare(const Node* a, const Node* b) noexcept {
    if (a == b) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    switch (a->kind) {
      case Connective::Atom:
        return a->name.compare(b->name) < 0 ? -1 : (a->name == b->name ? 0 : 1);
      case Connective::True:
      case Connective::False:
        return 0;
      case Connective::Not:
        return compare(a->left.get(), b->left.get());
      default:
        if (a->connectives != b->connectives) return a->connectives < b->connectives ? -1 : 1;
        if (int c = compare(a->left.get(), b->left.get()); c != 0) return c;
        return compare(a->right.get(), b->right.get());
    }
  }

  NodePtr node_;
};

/// Ternary classification of a formula.
enum class ModalTruthState { Tautology, Contradiction, ContextualTruth };

inline std::string to_string(ModalTruthState s) {
  switch (s) {
    case ModalTruthState::Tautology: return "tautology";
    case ModalTruthState::Contradiction: return "contradiction";
    case ModalTruthState::ContextualTruth: return "contextual truth";
  }
  return "?";
}

using Assignment = std::map<std::string, bool, std::less<>>;

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse_iff();
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced parenthesis");
      fail("unexpected input '" + std::string(1, text_[pos_]) + "'");
    }
    return f;
  }

 private:
  // Unicode aliases are matched as UTF-8 byte sequences.
  bool accept(std::string_view ascii, std::string_view alias = {}) {
    skip_space();
    if (text_.substr(pos_, ascii.size()) == ascii) {
      pos_ += ascii.size();
      return true;
    }
    if (!alias.empty() && text_.substr(pos_, alias.size()) == alias) {
      pos_ += alias.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    while (accept("<->", "\xE2\x86\x94")) lhs = Formula::equivalence(lhs, parse_imp());
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept("->", "\xE2\x86\x92")) {
      const NestingGuard guard(*this);
      return Formula::implication(lhs, parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|", "\xE2\x88\xA8")) lhs = Formula::disjunction(lhs, parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&", "\xE2\x88\xA7")) lhs = Formula::conjunction(lhs, parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("~", "\xC2\xAC")) {
      const NestingGuard guard(*this);
      return Formula::negation(parse_unary());
    }
    if (accept("(")) {
      const std::size_t open = pos_ - 1;
      const NestingGuard guard(*this);
      Formula inner = parse_iff();
      if (!accept(")")) {
        skip_space();
        if (pos_ >= text_.size()) fail_at("unbalanced parenthesis", open);
        fail("expected ')'");
      }
      return inner;
    }
    const char c = text_[pos_];
    if (is_atom_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "t") return Formula::truth();
      if (name == "f") return Formula::falsity();
      return Formula::atom(std::move(name));
    }
    if (c == ')') fail("unbalanced parenthesis");
    fail("expected a formula");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }
  [[noreturn]] static void fail_at(const std::string& what, std::size_t at) {
    throw SyntaxError(what, at);
  }

  static constexpr std::size_t kMaxNesting = 10000;

  struct NestingGuard {
    explicit NestingGuard(Parser& p) : parser(p) {
      if (++parser.nesting_ > kMaxNesting) parser.fail("formula nested too deeply");
    }
    ~NestingGuard() { --parser.nesting_; }
    Parser& parser;
  };

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nesting_ = 0;
};

}  // namespace detail

/// Parses the concrete syntax:
///
///   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)?
///   or := and ("|" and)* ; and := unary ("&" unary)*
///   unary := "~" unary | "(" formula ")" | "t" | "f" | atom
///
/// `->` is right-associative, the other binary connectives associate left.
/// The Unicode connectives ¬ ∧ ∨ → ↔ are accepted as aliases.
inline Formula parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline int precedence(Connective k) {
  switch (k) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Not: return 5;
    default: return 6;
  }
}

inline const char* symbol(Connective k) {
  switch (k) {
    case Connective::Iff: return " <-> ";
    case Connective::Implies: return " -> ";
    case Connective::Or: return " | ";
    case Connective::And: return " & ";
    default: return "";
  }
}

inline void render_minimal(const Formula& f, std::string& out) {
  const auto wrapped = [&out](const Formula& g, bool parens) {
    if (parens) out += '(';
    render_minimal(g, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Connective::Atom: out += f.name(); return;
    case Connective::True: out += 't'; return;
    case Connective::False: out += 'f'; return;
    case Connective::Not:
      out += '~';
      wrapped(f.child(), precedence(f.child().kind()) < precedence(Connective::Not));
      return;
    default: {
      const int p = precedence(f.kind());
      const int pl = precedence(f.left().kind());
      const int pr = precedence(f.right().kind());
      const bool right_assoc = f.kind() == Connective::Implies;
      wrapped(f.left(), right_assoc ? pl <= p : pl < p);
      out += symbol(f.kind());
      wrapped(f.right(), right_assoc ? pr < p : pr <= p);
      return;
    }
  }
}

inline void render_grouped(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom: out += f.name(); return;
    case Connective::True: out += 't'; return;
    case Connective::False: out += 'f'; return;
    case Connective::Not:
      out += '~';
      render_grouped(f.child(), out);
      return;
    default:
      out += '(';
      render_grouped(f.left(), out);
      out += symbol(f.kind());
      render_grouped(f.right(), out);
      out += ')';
      return;
  }
}

}  // namespace detail

/// ASCII rendering with the fewest parentheses the grammar allows.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_minimal(f, out);
  return out;
}

/// Every binary subformula in parentheses, e.g. `((p & (p -> q)) -> q)`.
/// Used for sequent members so that each member reads as one unit.
inline std::string render_grouped(const Formula& f) {
  std::string out;
  detail::render_grouped(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Semantics

namespace detail {
inline void collect_atoms(const Formula& f, std::set<std::string, std::less<>>& out) {
  switch (f.kind()) {
    case Connective::Atom: out.insert(f.name()); return;
    case Connective::True:
    case Connective::False: return;
    case Connective::Not: collect_atoms(f.child(), out); return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}
}  // namespace detail

inline std::set<std::string, std::less<>> atoms(const Formula& f) {
  std::set<std::string, std::less<>> out;
  detail::collect_atoms(f, out);
  return out;
}

inline bool evaluate(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Connective::Atom: {
      const auto it = a.find(f.name());
      if (it == a.end()) throw UnboundAtomError(f.name());
      return it->second;
    }
    case Connective::True: return true;
    case Connective::False: return false;
    case Connective::Not: return !evaluate(f.child(), a);
    case Connective::And: return evaluate(f.left(), a) && evaluate(f.right(), a);
    case Connective::Or: return evaluate(f.left(), a) || evaluate(f.right(), a);
    case Connective::Implies: return !evaluate(f.left(), a) || evaluate(f.right(), a);
    case Connective::Iff: return evaluate(f.left(), a) == evaluate(f.right(), a);
  }
  return false;
}

/// A formula compiled against a fixed atom order and evaluated 64 truth-table
/// rows at a time. Row r assigns atom i the bit (n-1-i) of r, so rows run in
/// lexicographic atom-name order with false before true.
class TruthTable {
 public:
  /// `universe` must be sorted and contain every atom of `f`.
  TruthTable(const Formula& f, std::vector<std::string> universe)
      : universe_(std::move(universe)) {
    if (universe_.size() > kMaxAtoms) throw std::length_error("too many atoms to enumerate");
    compile(f);
  }

  static constexpr std::size_t kMaxAtoms = 30;

  std::size_t atom_count() const noexcept { return universe_.size(); }
  std::uint64_t rows() const noexcept { return std::uint64_t{1} << universe_.size(); }

  /// Values of the formula on rows [base, base + 64), bit j for row base + j.
  /// Bits past rows() are unspecified; see valid_mask().
  std::uint64_t block(std::uint64_t base) const {
    std::vector<std::uint64_t> stack;
    stack.reserve(depth_);
    for (const Op& op : code_) {
      switch (op.kind) {
        case Connective::Atom: stack.push_back(column(op.index, base)); break;
        case Connective::True: stack.push_back(~std::uint64_t{0}); break;
        case Connective::False: stack.push_back(0); break;
        case Connective::Not: stack.back() = ~stack.back(); break;
        default: {
          const std::uint64_t r = stack.back();
          stack.pop_back();
          std::uint64_t& l = stack.back();
          switch (op.kind) {
            case Connective::And: l &= r; break;
            case Connective::Or: l |= r; break;
            case Connective::Implies: l = ~l | r; break;
            default: l = ~(l ^ r); break;
          }
        }
      }
    }
    return stack.back();
  }

  std::uint64_t valid_mask() const noexcept {
    return rows() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows()) - 1;
  }

  Assignment assignment(std::uint64_t row) const {
    Assignment a;
    const std::size_t n = universe_.size();
    for (std::size_t i = 0; i < n; ++i) a[universe_[i]] = ((row >> (n - 1 - i)) & 1u) != 0;
    return a;
  }

 private:
  struct Op {
    Connective kind;
    std::uint32_t index = 0;
  };

  std::uint64_t column(std::uint32_t atom, std::uint64_t base) const noexcept {
    static constexpr std::uint64_t kPeriodic[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    const std::size_t shift = universe_.size() - 1 - atom;
    if (shift < 6) return kPeriodic[shift];
    return ((base >> shift) & 1u) ? ~std::uint64_t{0} : 0;
  }

  void compile(const Formula& f, std::size_t height = 1) {
    depth_ = std::max(depth_, height);
    switch (f.kind()) {
      case Connective::Atom: {
        const auto it = std::lower_bound(universe_.begin(), universe_.end(), f.name());
        if (it == universe_.end() || *it != f.name()) throw UnboundAtomError(f.name());
        code_.push_back({Connective::Atom, static_cast<std::uint32_t>(it - universe_.begin())});
        return;
      }
      case Connective::True:
      case Connective::False: code_.push_back({f.kind()}); return;
      case Connective::Not:
        compile(f.child(), height);
        code_.push_back({Connective::Not});
        return;
      default:
        compile(f.left(), height);
        compile(f.right(), height + 1);
        code_.push_back({f.kind()});
    }
  }

  std::vector<std::string> universe_;
  std::vector<Op> code_;
  std::size_t depth_ = 1;
};

namespace detail {
inline std::vector<std::string> sorted_atoms(const Formula& a, const Formula& b) {
  auto names = atoms(a);
  names.merge(atoms(b));
  return {names.begin(), names.end()};
}
}  // namespace detail

/// Brute-force classification over all 2^n assignments.
inline ModalTruthState oracle_classify(const Formula& f) {
  const auto names = atoms(f);
  const TruthTable table(f, {names.begin(), names.end()});
  const std::uint64_t mask = table.valid_mask();
  bool seen_true = false;
  bool seen_false = false;
  for (std::uint64_t base = 0; base < table.rows() && !(seen_true && seen_false); base += 64) {
    const std::uint64_t values = table.block(base) & mask;
    seen_true = seen_true || values != 0;
    seen_false = seen_false || values != mask;
  }
  if (!seen_false) return ModalTruthState::Tautology;
  if (!seen_true) return ModalTruthState::Contradiction;
  return ModalTruthState::ContextualTruth;
}

/// Truth-table equivalence over the union of both formulas' atoms.
inline bool equivalent(const Formula& a, const Formula& b) {
  const auto universe = detail::sorted_atoms(a, b);
  const TruthTable ta(a, universe);
  const TruthTable tb(b, universe);
  const std::uint64_t mask = ta.valid_mask();
  for (std::uint64_t base = 0; base < ta.rows(); base += 64)
    if (((ta.block(base) ^ tb.block(base)) & mask) != 0) return false;
  return true;
}

/// First assignment (in truth-table row order) on which `f` takes `value`.
inline std::optional<Assignment> oracle_witness(const Formula& f, bool value) {
  const auto names = atoms(f);
  const TruthTable table(f, {names.begin(), names.end()});
  const std::uint64_t mask = table.valid_mask();
  for (std::uint64_t base = 0; base < table.rows(); base += 64) {
    std::uint64_t hits = table.block(base);
    if (!value) hits = ~hits;
    hits &= mask;
    if (hits != 0) return table.assignment(base + static_cast<std::uint64_t>(std::countr_zero(hits)));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

/// Atom names used by the enumerator and the random generator:
/// p q r s u v w x y z, then a10, a11, ...
inline std::string atom_name(std::size_t index) {
  static constexpr std::string_view base = "pqrsuvwxyz";
  if (index < base.size()) return std::string(1, base[index]);
  return "a" + std::to_string(index);
}

namespace detail {

inline constexpr Connective kBinaryConnectives[] = {Connective::And, Connective::Or,
                                                     Connective::Implies, Connective::Iff};

template <typename Visit>
bool visit_size(const std::vector<std::vector<Formula>>& smaller, std::size_t size,
                Visit& visit) {
  for (const Formula& sub : smaller[size - 1])
    if (!visit(Formula::negation(sub))) return false;
  for (Connective k : kBinaryConnectives) {
    for (std::size_t left = 0; left < size; ++left) {
      const std::size_t right = size - 1 - left;
      for (const Formula& l : smaller[left])
        for (const Formula& r : smaller[right])
          if (!visit(Formula::binary(k, l, r))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Visits every formula over the first `max_atoms` atom names and the
/// constants t, f with at most `max_depth` connective occurrences, ordered
/// by connective count, without duplicates. `visit` returns false to stop.
///
/// The bound counts connective occurrences, not nesting height: the height
/// bound grows doubly exponentially (about 10^20 formulas at 3 atoms and
/// height 4), while the occurrence bound stays enumerable.
template <typename Visit>
void for_each_formula(std::size_t max_atoms, std::size_t max_depth, Visit&& visit) {
  if (max_atoms < 1) throw std::invalid_argument("enumerate_formulas: max_atoms must be >= 1");
  std::vector<std::vector<Formula>> by_size(1);
  for (std::size_t i = 0; i < max_atoms; ++i) by_size[0].push_back(Formula::atom(atom_name(i)));
  by_size[0].push_back(Formula::truth());
  by_size[0].push_back(Formula::falsity());
  for (const Formula& f : by_size[0])
    if (!visit(f)) return;

  for (std::size_t size = 1; size <= max_depth; ++size) {
    if (size < max_depth) {
      std::vector<Formula> level;
      auto keep = [&level](Formula f) {
        level.push_back(std::move(f));
        return true;
      };
      detail::visit_size(by_size, size, keep);
      for (const Formula& f : level)
        if (!visit(f)) return;
      by_size.push_back(std::move(level));
    } else if (!detail::visit_size(by_size, size, visit)) {
      return;
    }
  }
}

inline std::vector<Formula> enumerate_formulas(std::size_t max_atoms, std::size_t max_depth) {
  std::vector<Formula> out;
  for_each_formula(max_atoms, max_depth, [&out](const Formula& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace cbl
