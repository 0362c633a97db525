#include <catch_amalgamated.hpp>

#include "cbl/dialog.hpp"
#include "cbl/formula.hpp"

using namespace cbl;

namespace {

Formula F(const char* text) { return parse(text); }

DialogOutput ask(Marker m, Polarity p, const char* body) { return dialog({m, p, parse(body)}); }

constexpr auto A = Marker::Assert;
constexpr auto Q = Marker::Query;
constexpr auto Pos = Polarity::Positive;
constexpr auto Neg = Polarity::Negative;

}  // namespace

TEST_CASE("classify", "[dialog]") {
  CHECK(classify(F("(p & (p -> q)) -> q")) == ModalTruthState::Tautology);
  CHECK(classify(F("p & ~p")) == ModalTruthState::Contradiction);
  CHECK(classify(F("p -> q")) == ModalTruthState::ContextualTruth);
  CHECK(classify(Formula::truth()) == ModalTruthState::Tautology);
  CHECK(classify(Formula::falsity()) == ModalTruthState::Contradiction);
}

TEST_CASE("dialog: worked examples", "[dialog]") {
  {
    const auto out = ask(Q, Pos, "(p & (p -> q)) -> q");
    CHECK(doublet(out) == "(l, t)");
    CHECK(out.answer == Answer::Yes);
    CHECK(out.state == ModalTruthState::Tautology);
  }
  {
    const auto out = ask(A, Pos, "p & ~p");
    CHECK(doublet(out) == "(n, f)");
    CHECK(out.answer == Answer::NotApplicable);
  }
  {
    const auto out = ask(Q, Neg, "p & ~p");
    CHECK(doublet(out) == "(l, t)");
    CHECK(out.answer == Answer::Yes);
  }
  {
    const auto out = ask(Q, Pos, "p -> q");
    CHECK(out.legality == Legality::Logical);
    CHECK(out.verdict == VerdictClass::Contextual);
    CHECK(out.answer == Answer::Contextual);
    REQUIRE(out.contexts);
    CHECK(out.contexts->falsity_context == F("(t <-> p) & (q <-> f)"));
    CHECK(equivalent(out.contexts->truth_context, F("p -> q")));
  }
  CHECK(doublet(ask(A, Neg, "t")) == "(n, t)");
  CHECK(doublet(ask(Q, Pos, "((p -> q) & ~q) -> ~p")) == "(l, t)");
  CHECK(doublet(ask(Q, Pos, "(p -> (q -> r)) -> ((p -> q) -> (p -> r))")) == "(l, t)");
}

TEST_CASE("dialog: the contextual doublet", "[dialog]") {
  const auto out = ask(A, Neg, "p -> q");
  REQUIRE(out.contexts);
  const ContextualVerdict& c = *out.contexts;
  CHECK(c.combined == F("((p <-> f) | (t <-> q) -> (t -> (p -> q))) & "
                        "((t <-> p) & (q <-> f) -> ((p -> q) -> f))"));
  CHECK(doublet(out) ==
        "(l, (((p <-> f) | (t <-> q)) -> (t -> (p -> q))) & "
        "(((t <-> p) & (q <-> f)) -> ((p -> q) -> f)))");
  // The printed doublet parses back to the combined formula.
  const std::string d = doublet(out);
  CHECK(parse(d.substr(4, d.size() - 5)) == c.combined);
  CHECK(oracle_classify(c.combined) == ModalTruthState::Tautology);
  CHECK(out.answer == Answer::NotApplicable);
}

TEST_CASE("legality_of", "[dialog]") {
  CHECK(legality_of(Q, ModalTruthState::Contradiction, Pos) == Legality::Logical);
  CHECK(legality_of(A, ModalTruthState::Tautology, Neg) == Legality::Nonsense);
  CHECK(legality_of(A, ModalTruthState::ContextualTruth, Pos) == Legality::Logical);
  CHECK(legality_of(A, ModalTruthState::Contradiction, Pos) == Legality::Nonsense);
  CHECK(legality_of(A, ModalTruthState::Tautology, Pos) == Legality::Logical);
  CHECK(legality_of(A, ModalTruthState::Contradiction, Neg) == Legality::Logical);
  for (auto s : {ModalTruthState::Tautology, ModalTruthState::Contradiction,
                 ModalTruthState::ContextualTruth})
    for (auto p : {Pos, Neg}) CHECK(legality_of(Q, s, p) == Legality::Logical);
}

TEST_CASE("dialog: the twelve cells of the output table", "[dialog]") {
  struct Cell {
    Marker marker;
    Polarity polarity;
    const char* body;
    const char* doublet;
    Answer answer;
  };
  // Rules 1-8, then rule 9 for each input form.
  const Cell cells[] = {
      {A, Pos, "p | ~p", "(l, t)", Answer::NotApplicable},
      {A, Neg, "p | ~p", "(n, t)", Answer::NotApplicable},
      {A, Pos, "p & ~p", "(n, f)", Answer::NotApplicable},
      {A, Neg, "p & ~p", "(l, f)", Answer::NotApplicable},
      {Q, Pos, "p | ~p", "(l, t)", Answer::Yes},
      {Q, Neg, "p | ~p", "(l, f)", Answer::No},
      {Q, Pos, "p & ~p", "(l, f)", Answer::No},
      {Q, Neg, "p & ~p", "(l, t)", Answer::Yes},
      {A, Pos, "p", "(l, ((t <-> p) -> (t -> p)) & ((p <-> f) -> (p -> f)))", Answer::NotApplicable},
      {A, Neg, "p", "(l, ((t <-> p) -> (t -> p)) & ((p <-> f) -> (p -> f)))", Answer::NotApplicable},
      {Q, Pos, "p", "(l, ((t <-> p) -> (t -> p)) & ((p <-> f) -> (p -> f)))", Answer::Contextual},
      {Q, Neg, "p", "(l, ((t <-> p) -> (t -> p)) & ((p <-> f) -> (p -> f)))", Answer::Contextual},
  };
  for (const Cell& c : cells) {
    CAPTURE(c.body, c.marker == A, c.polarity == Pos);
    const auto out = ask(c.marker, c.polarity, c.body);
    CHECK(doublet(out) == c.doublet);
    CHECK(out.answer == c.answer);
  }
}

TEST_CASE("dialog properties over the enumerated corpus", "[dialog][property]") {
  for_each_formula(2, 3, [](const Formula& p) {
    const ModalTruthState truth = oracle_classify(p);
    REQUIRE(classify(p) == truth);
    for (Marker m : {A, Q}) {
      const DialogOutput pos = dialog({m, Pos, p});
      const DialogOutput neg = dialog({m, Neg, p});
      REQUIRE(pos.state == truth);
      REQUIRE(neg.state == truth);
      for (const auto* out : {&pos, &neg}) {
        REQUIRE((out->verdict == VerdictClass::Contextual) == (truth == ModalTruthState::ContextualTruth));
        REQUIRE(out->contexts.has_value() == (out->verdict == VerdictClass::Contextual));
        REQUIRE((out->answer != Answer::NotApplicable) == (m == Q));
        if (m == Q) REQUIRE(out->legality == Legality::Logical);
      }
      // Truthfulness: what the agent says holds under the truth table.
      if (m == Q && truth != ModalTruthState::ContextualTruth) {
        const Formula asked = Formula::implication(p, Formula::falsity());
        REQUIRE((pos.answer == Answer::Yes) == (oracle_classify(p) == ModalTruthState::Tautology));
        REQUIRE((neg.answer == Answer::Yes) ==
                (oracle_classify(asked) == ModalTruthState::Tautology));
      }
      if (pos.contexts) {
        REQUIRE(equivalent(pos.contexts->truth_context, p));
        REQUIRE(equivalent(pos.contexts->falsity_context, Formula::negation(p)));
        REQUIRE(pos.contexts == neg.contexts);
      }
    }
    return true;
  });
}

TEST_CASE("wrapped input formulas", "[dialog]") {
  CHECK(CognitiveInput{A, Pos, F("p")}.wrapped() == F("t -> (p | f)"));
  CHECK(CognitiveInput{A, Neg, F("p")}.wrapped() == F("t -> ((p -> f) | f)"));
}
