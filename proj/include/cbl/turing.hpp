#pragma once

// Turing-test harness: seeded random cognitive inputs, each answered by the
// dialog function and checked against an expectation derived from the
// truth-table oracle.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cbl/agent.hpp"
#include "cbl/dialog.hpp"
#include "cbl/formula.hpp"

namespace cbl {

/// Random formulas over a pool of `atoms` atom names. A node at level l of a
/// tree bounded by `max_depth` is a leaf with probability l / max_depth and
/// otherwise one of the five connectives, uniformly. Leaves are the constant
/// t or f one time in ten and otherwise a uniform atom.
class FormulaGenerator {
 public:
  FormulaGenerator(std::size_t atoms, std::size_t max_depth, std::uint64_t seed)
      : atoms_(atoms), max_depth_(max_depth), rng_(seed) {
    if (atoms_ < 1) throw std::invalid_argument("FormulaGenerator: need at least one atom");
  }

  Formula operator()() { return node(0); }

  /// Uniform in [0, n). The modulo bias is irrelevant at these sizes and keeps
  /// the stream identical across standard libraries.
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

 private:
  Formula node(std::size_t level) {
    if (level >= max_depth_ || below(max_depth_) < level) return leaf();
    switch (below(5)) {
      case 0: return Formula::negation(node(level + 1));
      case 1: return Formula::conjunction(node(level + 1), node(level + 1));
      case 2: return Formula::disjunction(node(level + 1), node(level + 1));
      case 3: return Formula::implication(node(level + 1), node(level + 1));
      default: return Formula::equivalence(node(level + 1), node(level + 1));
    }
  }

  Formula leaf() {
    if (below(10) == 0) return below(2) == 0 ? Formula::truth() : Formula::falsity();
    return Formula::atom(atom_name(below(atoms_)));
  }

  std::size_t atoms_;
  std::size_t max_depth_;
  std::mt19937_64 rng_;
};

struct TuringFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct TuringReport {
  std::size_t trials = 0;
  std::size_t correct = 0;
  std::vector<TuringFailure> failures;
  std::uint64_t seed = 0;

  bool passed() const noexcept { return failures.empty() && correct == trials; }
};

struct ExpectedDoublet {
  Legality legality;
  VerdictClass verdict;
  Answer answer;
};

/// The output table of the dialog function, written out cell by cell.
inline ExpectedDoublet expected_doublet(Marker marker, Polarity polarity, ModalTruthState state) {
  using enum Legality;
  using enum VerdictClass;
  const bool query = marker == Marker::Query;
  if (state == ModalTruthState::ContextualTruth)
    return {Logical, Contextual, query ? Answer::Contextual : Answer::NotApplicable};
  const bool taut = state == ModalTruthState::Tautology;
  if (!query && polarity == Polarity::Positive)
    return taut ? ExpectedDoublet{Logical, TautT, Answer::NotApplicable}
                : ExpectedDoublet{Nonsense, ContraF, Answer::NotApplicable};
  if (!query)
    return taut ? ExpectedDoublet{Nonsense, TautT, Answer::NotApplicable}
                : ExpectedDoublet{Logical, ContraF, Answer::NotApplicable};
  if (polarity == Polarity::Positive)
    return taut ? ExpectedDoublet{Logical, TautT, Answer::Yes}
                : ExpectedDoublet{Logical, ContraF, Answer::No};
  return taut ? ExpectedDoublet{Logical, ContraF, Answer::No}
              : ExpectedDoublet{Logical, TautT, Answer::Yes};
}

namespace detail {

inline std::string describe(ModalTruthState state, const ExpectedDoublet& e) {
  const char* verdict = e.verdict == VerdictClass::TautT     ? "t"
                        : e.verdict == VerdictClass::ContraF ? "f"
                                                             : "contextual";
  return "(" + to_string(e.legality) + ", " + verdict + ") answer " + to_string(e.answer) +
         ", " + to_string(state);
}

/// Empty when `got` agrees with the oracle, else a description of what differs.
inline std::string check_trial(const CognitiveInput& in, const DialogOutput& got) {
  const ModalTruthState state = oracle_classify(in.body);
  const ExpectedDoublet want = expected_doublet(in.marker, in.polarity, state);
  if (got.state != state || got.legality != want.legality || got.verdict != want.verdict ||
      got.answer != want.answer)
    return describe(state, want);
  if (state != ModalTruthState::ContextualTruth) return {};
  if (!got.contexts) return "contexts missing";
  const Formula& p = in.body;
  if (!equivalent(got.contexts->truth_context, p)) return "p_t equivalent to the body";
  if (!equivalent(got.contexts->falsity_context, Formula::negation(p)))
    return "p_f equivalent to the negated body";
  if (got.contexts->combined != contextual_verdict(p, {got.contexts->truth_context,
                                                       got.contexts->falsity_context})
                                    .combined ||
      oracle_classify(got.contexts->combined) != ModalTruthState::Tautology)
    return "combined context formula is a tautology";
  return {};
}

inline std::string describe(const DialogOutput& got) {
  const char* verdict = got.verdict == VerdictClass::TautT     ? "t"
                        : got.verdict == VerdictClass::ContraF ? "f"
                                                               : "contextual";
  std::string s = "(" + to_string(got.legality) + ", " + verdict + ") answer " +
                  to_string(got.answer) + ", " + to_string(got.state);
  if (got.contexts)
    s += "; p_t = " + render(got.contexts->truth_context) +
         "; p_f = " + render(got.contexts->falsity_context);
  return s;
}

}  // namespace detail

/// Runs `trials` seeded random inputs through the dialog function. Equal
/// arguments give equal reports.
inline TuringReport turing_test(std::size_t trials, std::size_t max_atoms, std::size_t max_depth,
                                std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("turing_test: trials must be >= 1");
  FormulaGenerator gen(max_atoms, max_depth, seed);
  TuringReport report;
  report.trials = trials;
  report.seed = seed;
  for (std::size_t i = 0; i < trials; ++i) {
    const Marker marker = gen.below(2) == 0 ? Marker::Assert : Marker::Query;
    const Polarity polarity = gen.below(2) == 0 ? Polarity::Positive : Polarity::Negative;
    const CognitiveInput input{marker, polarity, gen()};
    const DialogOutput got = dialog(input);
    const std::string mismatch = detail::check_trial(input, got);
    if (mismatch.empty()) {
      ++report.correct;
    } else {
      report.failures.push_back({format_line(input), mismatch, detail::describe(got)});
    }
  }
  return report;
}

inline std::string summary(const TuringReport& r) {
  std::string s = "seed: " + std::to_string(r.seed) + "\n";
  s += "trials: " + std::to_string(r.trials) + "\n";
  s += "correct: " + std::to_string(r.correct) + "/" + std::to_string(r.trials) + "\n";
  const double rate = r.trials == 0 ? 0.0 : 100.0 * static_cast<double>(r.correct) /
                                                 static_cast<double>(r.trials);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", rate);
  s += "success rate: " + std::string(buf) + "\n";
  for (const TuringFailure& f : r.failures)
    s += "FAIL " + f.input + "\n  expected: " + f.expected + "\n  got:      " + f.got + "\n";
  return s;
}

}  // namespace cbl
