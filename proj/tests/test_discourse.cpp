#include <catch_amalgamated.hpp>

#include <functional>

#include "cbl/discourse.hpp"
#include "cbl/formula.hpp"

using namespace cbl;

namespace {

Formula F(const char* text) { return parse(text); }

Sequent seq(std::initializer_list<const char*> left, std::initializer_list<const char*> right) {
  std::vector<Formula> l, r;
  for (const char* s : left) l.push_back(parse(s));
  for (const char* s : right) r.push_back(parse(s));
  return Sequent(l, r);
}

template <typename Visit>
void for_each_node(const DiscourseTree& d, Visit&& visit) {
  visit(d);
  for (const DiscourseTree& c : d.children) for_each_node(c, visit);
}

// The countermodel, read as a conjunction of literals, entails the negation
// of the sequent's formula reading: every total extension falsifies it.
bool falsifies(const PartialAssignment& model, const Sequent& s) {
  Formula literals = Formula::truth();
  for (const auto& [name, value] : model) {
    const Formula a = Formula::atom(name);
    literals = Formula::conjunction(literals, value ? a : Formula::negation(a));
  }
  return oracle_classify(Formula::implication(literals, Formula::negation(s.as_formula()))) ==
         ModalTruthState::Tautology;
}

}  // namespace

TEST_CASE("initial sequents", "[discourse]") {
  const Sequent pos = initial_sequent_positive(F("p"));
  CHECK(pos.antecedent() == std::vector<Formula>{Formula::truth()});
  CHECK(pos.succedent() == std::vector<Formula>{F("p"), Formula::falsity()});

  CHECK(initial_sequent_positive(F("p & ~p")).succedent() ==
        std::vector<Formula>{F("p & ~p"), Formula::falsity()});
  CHECK(initial_sequent_positive(Formula::truth()).is_closed());

  CHECK(initial_sequent_negative(F("p & ~p")).succedent() ==
        std::vector<Formula>{F("(p & ~p) -> f"), Formula::falsity()});
  CHECK(initial_sequent_negative(F("p -> q")).succedent() ==
        std::vector<Formula>{F("(p -> q) -> f"), Formula::falsity()});
  CHECK(initial_sequent_negative(Formula::falsity()).succedent() ==
        std::vector<Formula>{F("f -> f"), Formula::falsity()});

  CHECK(render(initial_sequent_positive(F("p -> q"))) == "t -> ((p -> q) | f)");
}

TEST_CASE("sequents are duplicate-free and keep t first, f last", "[discourse]") {
  const Sequent s = seq({"p", "p", "t"}, {"q", "f", "q"});
  CHECK(s == seq({"p"}, {"q"}));
  CHECK(s.antecedent().front().is_true());
  CHECK(s.succedent().back().is_false());
  Sequent more = s;
  CHECK(more.add_succedent(F("r")).succedent() ==
        std::vector<Formula>{F("r"), F("q"), Formula::falsity()});
}

TEST_CASE("closure condition", "[discourse]") {
  CHECK(seq({"p"}, {"p"}).is_closed());
  CHECK(seq({"f"}, {}).is_closed());
  CHECK(seq({}, {"t"}).is_closed());
  CHECK(seq({"p -> q"}, {"p -> q"}).is_closed());
  CHECK_FALSE(seq({"p"}, {"q"}).is_closed());
  CHECK_FALSE(Sequent().is_closed());
}

TEST_CASE("expand: single steps from the worked examples", "[discourse][expand]") {
  {
    const auto e = expand(seq({}, {"p -> q"}));
    REQUIRE(e);
    CHECK(e->rule == RuleTag::ImpRight);
    CHECK(e->premises == std::vector<Sequent>{seq({"p"}, {"q"})});
    CHECK(render(e->premises[0]) == "(t & p) -> (q | f)");
  }
  {
    const auto e = expand(seq({"p -> q", "p"}, {"q"}));
    REQUIRE(e);
    CHECK(e->rule == RuleTag::ImpLeft);
    REQUIRE(e->premises.size() == 2);
    CHECK(render(e->premises[0]) == "(t & p) -> (p | q | f)");
    CHECK(render(e->premises[1]) == "(t & q & p) -> (q | f)");
  }
  {
    const auto e = expand(seq({"p", "~p"}, {}));
    REQUIRE(e);
    CHECK(e->rule == RuleTag::NotLeft);
    CHECK(e->premises == std::vector<Sequent>{seq({"p"}, {"p"})});
    CHECK(render(e->premises[0]) == "(t & p) -> (p | f)");
  }
}

TEST_CASE("expand: every rule", "[discourse][expand]") {
  const auto step = [](const Sequent& s) {
    auto e = expand(s);
    REQUIRE(e);
    return *e;
  };
  auto e = step(seq({"p & q"}, {}));
  CHECK(e.rule == RuleTag::AndLeft);
  CHECK(e.premises == std::vector<Sequent>{seq({"p", "q"}, {})});

  e = step(seq({}, {"p & q"}));
  CHECK(e.rule == RuleTag::AndRight);
  CHECK(e.premises == std::vector<Sequent>{seq({}, {"p"}), seq({}, {"q"})});

  e = step(seq({}, {"p | q"}));
  CHECK(e.rule == RuleTag::OrRight);
  CHECK(e.premises == std::vector<Sequent>{seq({}, {"p", "q"})});

  e = step(seq({"p | q"}, {}));
  CHECK(e.rule == RuleTag::OrLeft);
  CHECK(e.premises == std::vector<Sequent>{seq({"p"}, {}), seq({"q"}, {})});

  e = step(seq({}, {"~p"}));
  CHECK(e.rule == RuleTag::NotRight);
  CHECK(e.premises == std::vector<Sequent>{seq({"p"}, {})});

  e = step(seq({}, {"p <-> q"}));
  CHECK(e.rule == RuleTag::IffRewrite);
  CHECK(e.premises == std::vector<Sequent>{seq({"p"}, {"q"}), seq({"q"}, {"p"})});

  e = step(seq({"p <-> q"}, {}));
  CHECK(e.rule == RuleTag::IffRewrite);
  CHECK(e.premises == std::vector<Sequent>{seq({}, {"p", "q"}), seq({"p", "q"}, {})});
}

TEST_CASE("expand: selection order", "[discourse][expand]") {
  // Single-premise rules before branching ones.
  CHECK(expand(seq({"p -> q"}, {"r | s"}))->rule == RuleTag::OrRight);
  // Succedent before antecedent within a class.
  CHECK(expand(seq({"p & q"}, {"~r"}))->rule == RuleTag::NotRight);
  CHECK(expand(seq({"p | q"}, {"r & s"}))->rule == RuleTag::AndRight);
  // Leftmost first.
  CHECK(expand(seq({}, {"p -> q", "~r"}))->rule == RuleTag::ImpRight);
}

TEST_CASE("expand: leaves", "[discourse][expand]") {
  CHECK_FALSE(expand(seq({"p"}, {"q"})));
  CHECK_FALSE(expand(seq({"p", "p -> q"}, {"p"})));
  CHECK_FALSE(expand(Sequent()));
}

TEST_CASE("discourse: Modus Ponens is a deductive proof", "[discourse]") {
  const auto d = discourse(initial_sequent_positive(F("(p & (p -> q)) -> q")), Marker::Query);
  CHECK(d.rule == RuleTag::ImpRight);
  CHECK(node_count(d) == 5);
  for_each_leaf(d, [](const DiscourseTree& leaf) { CHECK(leaf.status == LeafStatus::Closed); });
  CHECK(is_proof(verdict(d)));
}

TEST_CASE("discourse: p -> q leaves one open leaf", "[discourse]") {
  const auto d = discourse(initial_sequent_positive(F("p -> q")), Marker::Query);
  REQUIRE(d.children.size() == 1);
  const DiscourseTree& leaf = d.children[0];
  CHECK(leaf.is_leaf());
  CHECK(leaf.status == LeafStatus::Open);
  CHECK(leaf.sequent == seq({"p"}, {"q"}));
}

TEST_CASE("discourse: t is closed at the root", "[discourse]") {
  const auto d = discourse(initial_sequent_positive(Formula::truth()), Marker::Query);
  CHECK(d.is_leaf());
  CHECK(d.status == LeafStatus::Closed);
}

TEST_CASE("discourse: the contradiction p & ~p", "[discourse]") {
  // t -> (((p & ~p) -> f) | f), (t & (p & ~p)) -> f, (t & p & ~p) -> f,
  // (t & p) -> (p | f).
  const auto d = discourse(initial_sequent_negative(F("p & ~p")), Marker::Query);
  std::vector<std::string> path;
  const DiscourseTree* n = &d;
  while (true) {
    path.push_back(render(n->sequent));
    if (n->is_leaf()) break;
    REQUIRE(n->children.size() == 1);
    n = &n->children[0];
  }
  CHECK(path == std::vector<std::string>{"t -> (((p & ~p) -> f) | f)", "(t & (p & ~p)) -> f",
                                         "(t & p & ~p) -> f", "(t & p) -> (p | f)"});
  CHECK(n->status == LeafStatus::Closed);
}

TEST_CASE("discourse: Modus Tollens passes through the worked-example vertices",
          "[discourse]") {
  const auto d = discourse(initial_sequent_positive(F("((p -> q) & ~q) -> ~p")), Marker::Query);
  std::vector<std::string> lines;
  for_each_node(d, [&](const DiscourseTree& n) { lines.push_back(render(n.sequent)); });
  const auto has = [&](const std::string& s) {
    return std::find(lines.begin(), lines.end(), s) != lines.end();
  };
  CHECK(has("(t & ((p -> q) & ~q)) -> (~p | f)"));
  CHECK(has("(t & (p -> q) & p) -> (q | f)"));
  CHECK(has("(t & p) -> (p | q | f)"));
  CHECK(has("(t & q & p) -> (q | f)"));
  CHECK(is_proof(verdict(d)));
}

TEST_CASE("discourse: the hypothetical syllogism", "[discourse]") {
  const auto d = discourse(
      initial_sequent_positive(F("(p -> (q -> r)) -> ((p -> q) -> (p -> r))")), Marker::Query);
  CHECK(is_proof(verdict(d)));
}

TEST_CASE("discourse: every vertex carries the root marker", "[discourse]") {
  for (Marker m : {Marker::Assert, Marker::Query}) {
    const auto d = discourse(initial_sequent_negative(F("(p <-> q) | ~(r & p)")), m);
    for_each_node(d, [m](const DiscourseTree& n) { CHECK(n.marker == m); });
  }
}

TEST_CASE("verdict and countermodels", "[discourse][verdict]") {
  CHECK(is_proof(verdict(discourse(initial_sequent_positive(F("(p & (p -> q)) -> q")),
                                   Marker::Query))));

  const auto pos = verdict(discourse(initial_sequent_positive(F("p -> q")), Marker::Query));
  REQUIRE(std::holds_alternative<OpenDiscourse>(pos));
  CHECK(std::get<OpenDiscourse>(pos).countermodels ==
        std::vector<PartialAssignment>{{{"p", true}, {"q", false}}});

  const auto neg = verdict(discourse(initial_sequent_negative(F("p -> q")), Marker::Query));
  REQUIRE(std::holds_alternative<OpenDiscourse>(neg));
  const auto& models = std::get<OpenDiscourse>(neg).countermodels;
  CHECK(models == std::vector<PartialAssignment>{{{"p", false}}, {{"q", true}}});
  // Each one satisfies p -> q whatever the free atom is.
  for (const auto& m : models) {
    for (bool free : {false, true}) {
      Assignment total{{"p", free}, {"q", free}};
      for (const auto& [k, v] : m) total[k] = v;
      CHECK(evaluate(F("p -> q"), total));
    }
  }
}

TEST_CASE("decide_deconstruction", "[discourse]") {
  CHECK(decide_deconstruction(F("p & ~p"), Polarity::Positive));
  CHECK_FALSE(decide_deconstruction(F("p -> q"), Polarity::Positive));
  CHECK_FALSE(decide_deconstruction(F("p -> q"), Polarity::Negative));
  CHECK(decide_deconstruction(Formula::truth(), Polarity::Negative));
  CHECK_FALSE(decide_deconstruction(Formula::truth(), Polarity::Positive));
}

TEST_CASE("context_formula", "[discourse][contexts]") {
  CHECK(context_formula({{{"p", true}, {"q", false}}}) == F("(t <-> p) & (q <-> f)"));
  const Formula two = context_formula({{{"p", false}}, {{"q", true}}});
  CHECK(two == F("(p <-> f) | (t <-> q)"));
  CHECK(equivalent(two, F("p -> q")));
  CHECK(context_formula({{{"p", true}}}) == F("t <-> p"));
  CHECK(context_formula({{}}) == Formula::truth());
  CHECK_THROWS_AS(context_formula({}), EmptyModelError);
}

TEST_CASE("contexts_of", "[discourse][contexts]") {
  const auto alpha = contexts_of(F("p -> q"));
  REQUIRE(alpha);
  CHECK(alpha->falsity == F("(t <-> p) & (q <-> f)"));
  CHECK(alpha->truth == F("(p <-> f) | (t <-> q)"));
  // The three-disjunct form printed for the same context is equivalent.
  CHECK(equivalent(alpha->truth, F("(t <-> q) | (p <-> q) | (p <-> f)")));

  const auto atom = contexts_of(F("p"));
  REQUIRE(atom);
  CHECK(atom->truth == F("t <-> p"));
  CHECK(atom->falsity == F("p <-> f"));

  CHECK_FALSE(contexts_of(F("p & ~p")));
  CHECK_FALSE(contexts_of(F("p | ~p")));
}

TEST_CASE("discourse properties over the enumerated corpus", "[discourse][property]") {
  // Soundness, completeness, termination, countermodels, contexts and
  // determinism on every formula with 3 atoms and at most 3 connectives.
  for_each_formula(3, 3, [](const Formula& p) {
    const ModalTruthState truth = oracle_classify(p);
    for (Polarity pol : {Polarity::Positive, Polarity::Negative}) {
      const Sequent root = initial_sequent(p, pol);
      const DiscourseTree d = discourse(root, Marker::Assert);
      const DiscourseVerdict v = verdict(d);
      const bool expect_proof = pol == Polarity::Positive ? truth == ModalTruthState::Tautology
                                                          : truth == ModalTruthState::Contradiction;
      REQUIRE(is_proof(v) == expect_proof);
      REQUIRE(is_provable(root) == expect_proof);

      REQUIRE(depth(d) <= root.connectives());
      for_each_node(d, [](const DiscourseTree& n) {
        REQUIRE(n.sequent.antecedent().front().is_true());
        REQUIRE(n.sequent.succedent().back().is_false());
        for (const DiscourseTree& c : n.children)
          REQUIRE(c.sequent.connectives() < n.sequent.connectives());
        if (n.is_leaf()) {
          REQUIRE(n.status.has_value());
          REQUIRE(!n.rule);
          if (n.status == LeafStatus::Closed) REQUIRE(n.sequent.is_closed());
          else REQUIRE(n.sequent.is_atomic());
        } else {
          REQUIRE(n.rule.has_value());
          REQUIRE((n.children.size() == 1 || n.children.size() == 2));
        }
      });

      if (const auto* open = std::get_if<OpenDiscourse>(&v))
        for (const auto& m : open->countermodels) REQUIRE(falsifies(m, root));

      REQUIRE(discourse(root, Marker::Assert) == d);
    }
    if (const auto ctx = contexts_of(p)) {
      REQUIRE(truth == ModalTruthState::ContextualTruth);
      REQUIRE(equivalent(ctx->truth, p));
      REQUIRE(equivalent(ctx->falsity, Formula::negation(p)));
    } else {
      REQUIRE(truth != ModalTruthState::ContextualTruth);
    }
    return true;
  });
}
