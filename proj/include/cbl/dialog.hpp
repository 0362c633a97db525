#pragma once

// The dialog function: maps an assertion or a query about a formula to a
// doublet (legality label, verdict).

#include <optional>
#include <string>

#include "cbl/discourse.hpp"
#include "cbl/formula.hpp"

namespace cbl {

/// An element of the cognitive input set: a marker, one of the two wrappers
/// and the wrapped formula.
struct CognitiveInput {
  Marker marker = Marker::Query;
  Polarity polarity = Polarity::Positive;
  Formula body;

  /// t -> (body | f) or t -> ((body -> f) | f).
  Formula wrapped() const {
    const Formula inner = polarity == Polarity::Positive
                              ? body
                              : Formula::implication(body, Formula::falsity());
    return Formula::implication(Formula::truth(), Formula::disjunction(inner, Formula::falsity()));
  }

  friend bool operator==(const CognitiveInput&, const CognitiveInput&) = default;
};

enum class Legality { Logical, Nonsense };
enum class VerdictClass { TautT, ContraF, Contextual };
enum class Answer { Yes, No, Contextual, NotApplicable };

inline std::string to_string(Legality l) { return l == Legality::Logical ? "l" : "n"; }

inline std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Contextual: return "contextual";
    case Answer::NotApplicable: return "n/a";
  }
  return "?";
}

struct ContextualVerdict {
  Formula truth_context;    // p_t
  Formula falsity_context;  // p_f
  /// [p_t -> (t -> p)] & [p_f -> (p -> f)]
  Formula combined;
  friend bool operator==(const ContextualVerdict&, const ContextualVerdict&) = default;
};

struct DialogOutput {
  Legality legality = Legality::Logical;
  VerdictClass verdict = VerdictClass::TautT;
  std::optional<ContextualVerdict> contexts;  // set iff verdict == Contextual
  Answer answer = Answer::NotApplicable;
  ModalTruthState state = ModalTruthState::ContextualTruth;

  friend bool operator==(const DialogOutput&, const DialogOutput&) = default;
};

/// `(p_t -> (t -> p)) & (p_f -> (p -> f))` with p, p_t and p_f each kept
/// as one unit. Parses back to `v.combined`.
inline std::string render_combined(const ContextualVerdict& v) {
  const auto unit = [](const Formula& g) {
    return g.is_compound() && g.kind() != Connective::Not ? "(" + render(g) + ")" : render(g);
  };
  const Formula& conj = v.combined;
  const std::string body = unit(conj.left().right().right());
  return "(" + unit(v.truth_context) + " -> (t -> " + body + ")) & (" +
         unit(v.falsity_context) + " -> (" + body + " -> f))";
}

/// "(l, t)", "(n, f)", or "(l, <combined context formula>)".
inline std::string doublet(const DialogOutput& out) {
  std::string second;
  switch (out.verdict) {
    case VerdictClass::TautT: second = "t"; break;
    case VerdictClass::ContraF: second = "f"; break;
    case VerdictClass::Contextual: second = render_combined(*out.contexts); break;
  }
  return "(" + to_string(out.legality) + ", " + second + ")";
}

/// Tautology iff the positive discourse is a proof, contradiction iff the
/// negative one is, contextual truth when neither is.
inline ModalTruthState classify(const Formula& p) {
  if (proves(p, Polarity::Positive)) return ModalTruthState::Tautology;
  if (proves(p, Polarity::Negative)) return ModalTruthState::Contradiction;
  return ModalTruthState::ContextualTruth;
}

/// Asking is always legal. Asserting truth of a contradiction, or falsity of
/// a tautology, is nonsense.
inline Legality legality_of(Marker marker, ModalTruthState state, Polarity polarity) {
  if (marker == Marker::Query) return Legality::Logical;
  const bool nonsense =
      (polarity == Polarity::Positive && state == ModalTruthState::Contradiction) ||
      (polarity == Polarity::Negative && state == ModalTruthState::Tautology);
  return nonsense ? Legality::Nonsense : Legality::Logical;
}

inline ContextualVerdict contextual_verdict(const Formula& body, const Contexts& c) {
  const Formula t = Formula::truth();
  const Formula f = Formula::falsity();
  const Formula combined =
      Formula::conjunction(Formula::implication(c.truth, Formula::implication(t, body)),
                           Formula::implication(c.falsity, Formula::implication(body, f)));
  return {c.truth, c.falsity, combined};
}

inline DialogOutput dialog(const CognitiveInput& input) {
  const Formula& p = input.body;
  const auto positive_verdict = verdict(discourse(initial_sequent_positive(p), input.marker));
  const auto negative_verdict = verdict(discourse(initial_sequent_negative(p), input.marker));
  const bool positive = input.polarity == Polarity::Positive;
  // The input's own discourse, and whether it is a deconstruction (its dual
  // discourse is a proof).
  const bool own_proof = is_proof(positive ? positive_verdict : negative_verdict);
  const bool deconstruction = is_proof(positive ? negative_verdict : positive_verdict);

  DialogOutput out;
  if (!own_proof && !deconstruction) {
    out.state = ModalTruthState::ContextualTruth;
    out.legality = Legality::Logical;
    out.verdict = VerdictClass::Contextual;
    out.contexts = contextual_verdict(p, *contexts_from(positive_verdict, negative_verdict));
    out.answer = input.marker == Marker::Query ? Answer::Contextual : Answer::NotApplicable;
    return out;
  }

  // Positive wrapper: a proof means p is a tautology. Negative wrapper: a
  // proof means p is a contradiction.
  out.state = (own_proof == positive) ? ModalTruthState::Tautology
                                      : ModalTruthState::Contradiction;
  out.legality = legality_of(input.marker, out.state, input.polarity);

  if (input.marker == Marker::Assert) {
    // Assertions report the modal state of p itself.
    out.verdict = out.state == ModalTruthState::Tautology ? VerdictClass::TautT
                                                          : VerdictClass::ContraF;
    out.answer = Answer::NotApplicable;
  } else {
    // Queries report whether what was asked holds.
    out.verdict = own_proof ? VerdictClass::TautT : VerdictClass::ContraF;
    out.answer = own_proof ? Answer::Yes : Answer::No;
  }
  return out;
}

}  // namespace cbl
