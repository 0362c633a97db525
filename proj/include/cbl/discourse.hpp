#pragma once

// Deductive discourses: exhaustive sequent decomposition of the canonical
// wrappers t -> (p | f) and t -> ((p -> f) | f), closure detection,
// countermodel extraction and context formulas.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cbl/formula.hpp"

namespace cbl {

enum class Marker { Assert, Query };
enum class Polarity { Positive, Negative };

inline std::string marker_prefix(Marker m) { return m == Marker::Assert ? "(!):" : "(?):"; }

inline Polarity opposite(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

// ---------------------------------------------------------------------------
// Sequent

/// Antecedent (conjoined) entails succedent (disjoined). The antecedent always
/// starts with the constant t and the succedent always ends with f. Members
/// are kept in a stable order and never duplicated.
class Sequent {
 public:
  Sequent() : antecedent_{Formula::truth()}, succedent_{Formula::falsity()} {}

  Sequent(const std::vector<Formula>& antecedent, const std::vector<Formula>& succedent)
      : Sequent() {
    for (const Formula& a : antecedent) add_antecedent(a);
    for (const Formula& s : succedent) insert_succedent(succedent_.size() - 1, s);
  }

  const std::vector<Formula>& antecedent() const noexcept { return antecedent_; }
  const std::vector<Formula>& succedent() const noexcept { return succedent_; }

  bool in_antecedent(const Formula& f) const { return contains(antecedent_, f); }
  bool in_succedent(const Formula& f) const { return contains(succedent_, f); }

  /// Shared member, f on the left, or t on the right.
  bool is_closed() const {
    for (const Formula& a : antecedent_)
      if (a.is_false() || in_succedent(a)) return true;
    return in_succedent(Formula::truth());
  }

  /// Nothing left to decompose: every member is an atom or a constant.
  bool is_atomic() const {
    const auto simple = [](const Formula& f) { return !f.is_compound(); };
    return std::all_of(antecedent_.begin(), antecedent_.end(), simple) &&
           std::all_of(succedent_.begin(), succedent_.end(), simple);
  }

  /// Sum of connective occurrences over all members.
  std::size_t connectives() const {
    std::size_t n = 0;
    for (const Formula& a : antecedent_) n += a.connectives();
    for (const Formula& s : succedent_) n += s.connectives();
    return n;
  }

  /// The sequent read as one formula: (t & a1 & ...) -> (s1 | ... | f).
  Formula as_formula() const {
    Formula lhs = antecedent_.front();
    for (std::size_t i = 1; i < antecedent_.size(); ++i)
      lhs = Formula::conjunction(lhs, antecedent_[i]);
    Formula rhs = succedent_.front();
    for (std::size_t i = 1; i < succedent_.size(); ++i)
      rhs = Formula::disjunction(rhs, succedent_[i]);
    return Formula::implication(lhs, rhs);
  }

  friend bool operator==(const Sequent&, const Sequent&) = default;

  // Editing primitives used by the decomposition rules. A member that is
  // replaced keeps its slot; formulas moving across the arrow land next to
  // it (end of the antecedent, front of the succedent).

  Sequent replace_in_antecedent(std::size_t index, std::initializer_list<Formula> parts) const {
    Sequent s = *this;
    s.antecedent_.erase(s.antecedent_.begin() + static_cast<std::ptrdiff_t>(index));
    std::size_t at = index;
    for (const Formula& p : parts)
      if (!contains(s.antecedent_, p))
        s.antecedent_.insert(s.antecedent_.begin() + static_cast<std::ptrdiff_t>(at++), p);
    return s;
  }

  Sequent replace_in_succedent(std::size_t index, std::initializer_list<Formula> parts) const {
    Sequent s = *this;
    s.succedent_.erase(s.succedent_.begin() + static_cast<std::ptrdiff_t>(index));
    std::size_t at = index;
    for (const Formula& p : parts)
      if (s.insert_succedent(at, p)) ++at;
    return s;
  }

  Sequent& add_antecedent(const Formula& f) {
    if (!contains(antecedent_, f)) antecedent_.push_back(f);
    return *this;
  }

  Sequent& add_succedent(const Formula& f) {
    insert_succedent(0, f);
    return *this;
  }

 private:
  static bool contains(const std::vector<Formula>& side, const Formula& f) {
    return std::find(side.begin(), side.end(), f) != side.end();
  }

  bool insert_succedent(std::size_t at, const Formula& f) {
    if (contains(succedent_, f)) return false;
    // f stays the last member.
    at = std::min(at, succedent_.size() - 1);
    succedent_.insert(succedent_.begin() + static_cast<std::ptrdiff_t>(at), f);
    return true;
  }

  std::vector<Formula> antecedent_;
  std::vector<Formula> succedent_;
};

/// t -> (p | f): "it is true that p".
inline Sequent initial_sequent_positive(const Formula& p) { return Sequent({}, {p}); }

/// t -> ((p -> f) | f): "it is true that p is false".
inline Sequent initial_sequent_negative(const Formula& p) {
  return Sequent({}, {Formula::implication(p, Formula::falsity())});
}

inline Sequent initial_sequent(const Formula& p, Polarity polarity) {
  return polarity == Polarity::Positive ? initial_sequent_positive(p)
                                        : initial_sequent_negative(p);
}

/// `(t & a) -> (b | f)`; compound members are parenthesised.
inline std::string render(const Sequent& s) {
  const auto side = [](const std::vector<Formula>& members, const char* glue) {
    std::string out;
    if (members.size() > 1) out += '(';
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i != 0) out += glue;
      out += render_grouped(members[i]);
    }
    if (members.size() > 1) out += ')';
    return out;
  };
  return side(s.antecedent(), " & ") + " -> " + side(s.succedent(), " | ");
}

// ---------------------------------------------------------------------------
// Rules

enum class RuleTag {
  ImpRight,
  ImpLeft,
  AndLeft,
  AndRight,
  OrRight,
  OrLeft,
  NotLeft,
  NotRight,
  IffRewrite,
  ConstSimplify
};

inline constexpr RuleTag kAllRuleTags[] = {
    RuleTag::ImpRight, RuleTag::ImpLeft,  RuleTag::AndLeft,    RuleTag::AndRight,
    RuleTag::OrRight,  RuleTag::OrLeft,   RuleTag::NotLeft,    RuleTag::NotRight,
    RuleTag::IffRewrite, RuleTag::ConstSimplify};

inline std::string to_string(RuleTag r) {
  switch (r) {
    case RuleTag::ImpRight: return "ImpRight";
    case RuleTag::ImpLeft: return "ImpLeft";
    case RuleTag::AndLeft: return "AndLeft";
    case RuleTag::AndRight: return "AndRight";
    case RuleTag::OrRight: return "OrRight";
    case RuleTag::OrLeft: return "OrLeft";
    case RuleTag::NotLeft: return "NotLeft";
    case RuleTag::NotRight: return "NotRight";
    case RuleTag::IffRewrite: return "IffRewrite";
    case RuleTag::ConstSimplify: return "ConstSimplify";
  }
  return "?";
}

inline std::optional<RuleTag> rule_from_string(std::string_view name) {
  for (RuleTag r : kAllRuleTags)
    if (to_string(r) == name) return r;
  return std::nullopt;
}

struct Expansion {
  RuleTag rule;
  std::vector<Sequent> premises;
};

namespace detail {

inline std::optional<Expansion> expand_linear(const Sequent& s) {
  const auto& right = s.succedent();
  for (std::size_t i = 0; i < right.size(); ++i) {
    const Formula& g = right[i];
    switch (g.kind()) {
      case Connective::Or:
        return Expansion{RuleTag::OrRight, {s.replace_in_succedent(i, {g.left(), g.right()})}};
      case Connective::Implies:
        return Expansion{RuleTag::ImpRight,
                         {s.replace_in_succedent(i, {g.right()}).add_antecedent(g.left())}};
      case Connective::Not:
        return Expansion{RuleTag::NotRight,
                         {s.replace_in_succedent(i, {}).add_antecedent(g.child())}};
      default: break;
    }
  }
  const auto& left = s.antecedent();
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Formula& g = left[i];
    switch (g.kind()) {
      case Connective::And:
        return Expansion{RuleTag::AndLeft, {s.replace_in_antecedent(i, {g.left(), g.right()})}};
      case Connective::Not:
        return Expansion{RuleTag::NotLeft,
                         {s.replace_in_antecedent(i, {}).add_succedent(g.child())}};
      default: break;
    }
  }
  return std::nullopt;
}

inline std::optional<Expansion> expand_branching(const Sequent& s) {
  const auto& right = s.succedent();
  for (std::size_t i = 0; i < right.size(); ++i) {
    const Formula& g = right[i];
    switch (g.kind()) {
      case Connective::And:
        return Expansion{RuleTag::AndRight,
                         {s.replace_in_succedent(i, {g.left()}),
                          s.replace_in_succedent(i, {g.right()})}};
      case Connective::Iff:
        // a <-> b on the right: a |- b and b |- a.
        return Expansion{RuleTag::IffRewrite,
                         {s.replace_in_succedent(i, {g.right()}).add_antecedent(g.left()),
                          s.replace_in_succedent(i, {g.left()}).add_antecedent(g.right())}};
      default: break;
    }
  }
  const auto& left = s.antecedent();
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Formula& g = left[i];
    switch (g.kind()) {
      case Connective::Implies:
        return Expansion{RuleTag::ImpLeft,
                         {s.replace_in_antecedent(i, {}).add_succedent(g.left()),
                          s.replace_in_antecedent(i, {g.right()})}};
      case Connective::Or:
        return Expansion{RuleTag::OrLeft,
                         {s.replace_in_antecedent(i, {g.left()}),
                          s.replace_in_antecedent(i, {g.right()})}};
      case Connective::Iff: {
        // a <-> b on the left: both false, or both true.
        Sequent both_false = s.replace_in_antecedent(i, {});
        both_false.add_succedent(g.right()).add_succedent(g.left());
        return Expansion{RuleTag::IffRewrite,
                         {std::move(both_false), s.replace_in_antecedent(i, {g.left(), g.right()})}};
      }
      default: break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// One decomposition step, or nullopt when `s` is already a leaf (closed, or
/// atomic). Single-premise rules are preferred over branching ones; within
/// each class the succedent is scanned before the antecedent, left to right.
inline std::optional<Expansion> expand(const Sequent& s) {
  if (s.is_closed() || s.is_atomic()) return std::nullopt;
  if (auto e = detail::expand_linear(s)) return e;
  return detail::expand_branching(s);
}

// ---------------------------------------------------------------------------
// Discourse trees

enum class LeafStatus { Closed, Open };

struct DiscourseTree {
  Sequent sequent;
  Marker marker = Marker::Query;
  std::optional<RuleTag> rule;           // internal nodes
  std::optional<LeafStatus> status;      // leaves
  std::vector<DiscourseTree> children;

  bool is_leaf() const noexcept { return children.empty(); }

  friend bool operator==(const DiscourseTree&, const DiscourseTree&) = default;
};

/// Full deductive discourse of `s`: `expand` applied until every leaf is
/// closed or atomic. Every vertex carries `marker`.
inline DiscourseTree discourse(const Sequent& s, Marker marker) {
  DiscourseTree node{s, marker, std::nullopt, std::nullopt, {}};
  if (auto step = expand(s)) {
    node.rule = step->rule;
    node.children.reserve(step->premises.size());
    for (const Sequent& premise : step->premises)
      node.children.push_back(discourse(premise, marker));
  } else {
    node.status = s.is_closed() ? LeafStatus::Closed : LeafStatus::Open;
  }
  return node;
}

template <typename Visit>
void for_each_leaf(const DiscourseTree& d, Visit&& visit) {
  if (d.is_leaf()) {
    visit(d);
    return;
  }
  for (const DiscourseTree& c : d.children) for_each_leaf(c, visit);
}

inline std::size_t node_count(const DiscourseTree& d) {
  std::size_t n = 1;
  for (const DiscourseTree& c : d.children) n += node_count(c);
  return n;
}

/// Longest root-to-leaf path, counted in edges.
inline std::size_t depth(const DiscourseTree& d) {
  std::size_t deepest = 0;
  for (const DiscourseTree& c : d.children) deepest = std::max(deepest, depth(c) + 1);
  return deepest;
}

// ---------------------------------------------------------------------------
// Verdicts and countermodels

using PartialAssignment = Assignment;

struct DeductiveProof {
  friend bool operator==(const DeductiveProof&, const DeductiveProof&) = default;
};

struct OpenDiscourse {
  /// One per open leaf, left to right.
  std::vector<PartialAssignment> countermodels;
  friend bool operator==(const OpenDiscourse&, const OpenDiscourse&) = default;
};

using DiscourseVerdict = std::variant<DeductiveProof, OpenDiscourse>;

inline bool is_proof(const DiscourseVerdict& v) {
  return std::holds_alternative<DeductiveProof>(v);
}

/// Atoms on the left of an open leaf are true, atoms on the right false.
inline PartialAssignment countermodel(const Sequent& leaf) {
  PartialAssignment model;
  for (const Formula& a : leaf.antecedent())
    if (a.is_atom()) model[a.name()] = true;
  for (const Formula& s : leaf.succedent())
    if (s.is_atom()) model[s.name()] = false;
  return model;
}

inline DiscourseVerdict verdict(const DiscourseTree& d) {
  OpenDiscourse open;
  for_each_leaf(d, [&open](const DiscourseTree& leaf) {
    if (leaf.status == LeafStatus::Open) open.countermodels.push_back(countermodel(leaf.sequent));
  });
  if (open.countermodels.empty()) return DeductiveProof{};
  return open;
}

/// Whether the discourse of `s` is a deductive proof. Walks the same
/// expansion steps as `discourse` without keeping the tree, and stops at the
/// first open leaf.
inline bool is_provable(const Sequent& s) {
  std::vector<Sequent> pending{s};
  while (!pending.empty()) {
    Sequent current = std::move(pending.back());
    pending.pop_back();
    auto step = expand(current);
    if (!step) {
      if (!current.is_closed()) return false;
      continue;
    }
    for (auto it = step->premises.rbegin(); it != step->premises.rend(); ++it)
      pending.push_back(std::move(*it));
  }
  return true;
}

inline bool proves(const Formula& p, Polarity polarity) {
  return is_provable(initial_sequent(p, polarity));
}

/// The discourse of `polarity` is a deconstruction when the discourse of the
/// opposite polarity is a deductive proof.
inline bool decide_deconstruction(const Formula& p, Polarity polarity) {
  return proves(p, opposite(polarity));
}

// ---------------------------------------------------------------------------
// Contexts

class EmptyModelError : public std::invalid_argument {
 public:
  EmptyModelError() : std::invalid_argument("context_formula: no models given") {}
};

/// Encodes v = true as (t <-> v) and v = false as (v <-> f), conjoined within a
/// model and disjoined across models. An empty model is the constant t.
inline Formula context_formula(const std::vector<PartialAssignment>& models) {
  if (models.empty()) throw EmptyModelError();
  std::optional<Formula> any;
  for (const PartialAssignment& model : models) {
    std::optional<Formula> all;
    for (const auto& [name, value] : model) {
      const Formula v = Formula::atom(name);
      const Formula literal = value ? Formula::equivalence(Formula::truth(), v)
                                    : Formula::equivalence(v, Formula::falsity());
      all = all ? Formula::conjunction(*all, literal) : literal;
    }
    const Formula conj = all.value_or(Formula::truth());
    any = any ? Formula::disjunction(*any, conj) : conj;
  }
  return *any;
}

struct Contexts {
  Formula truth;    // p_t: the assignments that make p true
  Formula falsity;  // p_f: the assignments that make p false
  friend bool operator==(const Contexts&, const Contexts&) = default;
};

/// Contexts from the verdicts of the positive and negative discourses of p:
/// the negative discourse's countermodels satisfy p, the positive one's
/// falsify it. nullopt when either discourse is a proof.
inline std::optional<Contexts> contexts_from(const DiscourseVerdict& positive,
                                             const DiscourseVerdict& negative) {
  if (is_proof(positive) || is_proof(negative)) return std::nullopt;
  return Contexts{context_formula(std::get<OpenDiscourse>(negative).countermodels),
                  context_formula(std::get<OpenDiscourse>(positive).countermodels)};
}

/// Contexts of a contextual truth; nullopt for tautologies and contradictions.
inline std::optional<Contexts> contexts_of(const Formula& p) {
  return contexts_from(verdict(discourse(initial_sequent_positive(p), Marker::Query)),
                       verdict(discourse(initial_sequent_negative(p), Marker::Query)));
}

}  // namespace cbl
