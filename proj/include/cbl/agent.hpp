#pragma once

// The conversational agent: cognitive-dialect line parsing and the responses
// printed by the REPL, the `dialog` subcommand and batch runs.

#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "cbl/dialog.hpp"
#include "cbl/discourse.hpp"
#include "cbl/formula.hpp"
#include "cbl/render.hpp"

namespace cbl {

class UnknownCommandError : public std::runtime_error {
 public:
  explicit UnknownCommandError(const std::string& line)
      : std::runtime_error("unknown command: " + line) {}
};

struct CognitiveLine {
  CognitiveInput input;
  friend bool operator==(const CognitiveLine&, const CognitiveLine&) = default;
};
struct ClassifyLine {
  Formula formula;
  friend bool operator==(const ClassifyLine&, const ClassifyLine&) = default;
};
enum class ShowWhat { Proof, Contexts, Tree };
struct Show {
  ShowWhat what;
  friend bool operator==(const Show&, const Show&) = default;
};
struct Help {
  friend bool operator==(const Help&, const Help&) = default;
};
struct Quit {
  friend bool operator==(const Quit&, const Quit&) = default;
};

using ReplCommand = std::variant<CognitiveLine, ClassifyLine, Show, Help, Quit>;

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// Recognizes t -> (g | f) and t -> ((g -> f) | f).
inline std::optional<std::pair<Polarity, Formula>> unwrap(const Formula& w) {
  if (w.kind() != Connective::Implies || !w.left().is_true()) return std::nullopt;
  const Formula disj = w.right();
  if (disj.kind() != Connective::Or || !disj.right().is_false()) return std::nullopt;
  const Formula inner = disj.left();
  if (inner.kind() == Connective::Implies && inner.right().is_false())
    return std::pair{Polarity::Negative, inner.left()};
  return std::pair{Polarity::Positive, inner};
}

inline Formula parse_at(std::string_view line, std::size_t offset, std::size_t length) {
  try {
    return parse(line.substr(offset, length));
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.message(), offset + e.position());
  }
}

}  // namespace detail

/// Line syntax:
///   (!): F            assert that F is true
///   (!): F is false   assert that F is false
///   (?): F            ask whether F is true
///   (?): F is false   ask whether F is false
///   F                 classify F
///   show proof | show contexts | show tree | help | quit
/// A full wrapper t -> (G | f) or t -> ((G -> f) | f) after a marker is
/// unwrapped to its body G.
inline ReplCommand parse_line(std::string_view raw) {
  const std::string_view line = detail::trim(raw);
  if (line == "help" || line == "?") return Help{};
  if (line == "quit" || line == "exit") return Quit{};
  if (line.starts_with("show")) {
    const std::string_view what = detail::trim(line.substr(4));
    if (what == "proof") return Show{ShowWhat::Proof};
    if (what == "contexts") return Show{ShowWhat::Contexts};
    if (what == "tree") return Show{ShowWhat::Tree};
    if (line.size() == 4 || line[4] == ' ' || line[4] == '\t')
      throw UnknownCommandError(std::string(line));
  }
  if (line.starts_with(":")) throw UnknownCommandError(std::string(line));

  const std::size_t lead = raw.find_first_not_of(" \t\r\n");
  if (line.starts_with("(!)") || line.starts_with("(?)")) {
    const Marker marker = line[1] == '!' ? Marker::Assert : Marker::Query;
    std::size_t body_start = lead + 3;
    if (raw.size() > body_start && raw[body_start] == ':') ++body_start;
    std::string_view body = raw.substr(body_start);
    body = body.substr(0, body.find_last_not_of(" \t\r\n") + 1);

    static const std::regex negative_suffix(R"(^([\s\S]*\S)\s+is\s+false$)");
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_match(body.begin(), body.end(), m, negative_suffix)) {
      const Formula f =
          detail::parse_at(raw, body_start, static_cast<std::size_t>(m.length(1)));
      return CognitiveLine{{marker, Polarity::Negative, f}};
    }
    const Formula f = detail::parse_at(raw, body_start, body.size());
    if (auto w = detail::unwrap(f)) return CognitiveLine{{marker, w->first, w->second}};
    return CognitiveLine{{marker, Polarity::Positive, f}};
  }
  return ClassifyLine{detail::parse_at(raw, 0, raw.size())};
}

/// The line that parse_line reads back as `input`.
inline std::string format_line(const CognitiveInput& input) {
  std::string out = marker_prefix(input.marker) + " ";
  if (detail::unwrap(input.body)) return out + render(input.wrapped());
  out += render(input.body);
  if (input.polarity == Polarity::Negative) out += " is false";
  return out;
}

inline std::string help_text() {
  return "cognitive dialect:\n"
         "  (!): F            assert that F is true\n"
         "  (!): F is false   assert that F is false\n"
         "  (?): F            ask whether F is true\n"
         "  (?): F is false   ask whether F is false\n"
         "  F                 classify F and answer every form above\n"
         "commands:\n"
         "  show proof        discourse of the last input\n"
         "  show tree         positive and negative discourses of the last input\n"
         "  show contexts     truth and falsity contexts of the last input\n"
         "  help, quit\n"
         "syntax: atoms [a-z][a-z0-9_]*, constants t f, ~ & | -> <-> and parentheses\n";
}

/// Second half of the doublet line for a cognitive input.
inline std::string gloss(const CognitiveInput& in, const DialogOutput& out) {
  if (in.marker == Marker::Query) return "answer: " + to_string(out.answer);
  if (out.legality == Legality::Logical) return "the assertion is logical";
  return in.polarity == Polarity::Positive
             ? "asserting truth for a contradiction is a logical nonsense"
             : "asserting falsity for a tautology is a logical nonsense";
}

inline std::string state_sentence(const Formula& body, ModalTruthState state) {
  switch (state) {
    case ModalTruthState::Tautology:
      return "the agent proves that " + render(body) + " is always true";
    case ModalTruthState::Contradiction:
      return "the agent proves that " + render(body) + " is always false";
    case ModalTruthState::ContextualTruth:
      return "the agent finds the contexts in which " + render(body) + " is true and false";
  }
  return {};
}

/// A REPL conversation. Remembers the last input for the `show` commands.
class Session {
 public:
  /// The response to one line; syntax errors become messages.
  std::string respond_line(std::string_view line) {
    try {
      return respond(parse_line(line));
    } catch (const SyntaxError& e) {
      return "syntax error at position " + std::to_string(e.position()) + ": " + e.message() +
             "\n";
    } catch (const UnknownCommandError& e) {
      return std::string(e.what()) + " (try 'help')\n";
    } catch (const std::exception& e) {
      return std::string("error: ") + e.what() + "\n";
    }
  }

  std::string respond(const ReplCommand& cmd) {
    return std::visit([this](const auto& c) { return on(c); }, cmd);
  }

  const std::optional<CognitiveInput>& last() const noexcept { return last_; }

 private:
  std::string on(const CognitiveLine& c) {
    last_ = c.input;
    const DialogOutput out = dialog(c.input);
    std::string r = marker_prefix(c.input.marker) + " " +
                    render(initial_sequent(c.input.body, c.input.polarity)) + "\n";
    r += "doublet: " + doublet(out) + "; " + gloss(c.input, out) + "\n";
    r += "state: " + to_string(out.state) + "\n";
    r += state_sentence(c.input.body, out.state) + "\n";
    if (out.contexts) {
      r += "p_t = " + render(out.contexts->truth_context) + "\n";
      r += "p_f = " + render(out.contexts->falsity_context) + "\n";
    }
    return r;
  }

  std::string on(const ClassifyLine& c) {
    last_ = CognitiveInput{Marker::Query, Polarity::Positive, c.formula};
    const ModalTruthState state = classify(c.formula);
    std::string r = to_string(state);
    if (state == ModalTruthState::ContextualTruth) {
      const Contexts ctx = *contexts_of(c.formula);
      r += "; p_t = " + render(ctx.truth) + "; p_f = " + render(ctx.falsity);
    } else {
      r += "; " + state_sentence(c.formula, state);
    }
    r += "\n";
    for (Marker m : {Marker::Assert, Marker::Query}) {
      for (Polarity p : {Polarity::Positive, Polarity::Negative}) {
        const CognitiveInput in{m, p, c.formula};
        const DialogOutput out = dialog(in);
        r += "  " + marker_prefix(m) + " " + render(initial_sequent(c.formula, p)) + "  =>  " +
             doublet(out);
        if (m == Marker::Query) r += " " + to_string(out.answer);
        r += "\n";
      }
    }
    return r;
  }

  std::string on(const Show& s) {
    if (!last_) return "nothing to show yet\n";
    const CognitiveInput& in = *last_;
    switch (s.what) {
      case ShowWhat::Proof:
        return render_tree(discourse(initial_sequent(in.body, in.polarity), in.marker),
                           TreeFormat::Text);
      case ShowWhat::Tree:
        return "positive discourse:\n" +
               render_tree(discourse(initial_sequent_positive(in.body), in.marker),
                           TreeFormat::Text) +
               "negative discourse:\n" +
               render_tree(discourse(initial_sequent_negative(in.body), in.marker),
                           TreeFormat::Text);
      case ShowWhat::Contexts: {
        const auto ctx = contexts_of(in.body);
        if (!ctx) return "no contexts: " + render(in.body) + " is a " +
                         to_string(classify(in.body)) + "\n";
        return "p_t = " + render(ctx->truth) + "\np_f = " + render(ctx->falsity) + "\n";
      }
    }
    return {};
  }

  std::string on(const Help&) { return help_text(); }
  std::string on(const Quit&) { return "bye\n"; }

  std::optional<CognitiveInput> last_;
};

}  // namespace cbl
