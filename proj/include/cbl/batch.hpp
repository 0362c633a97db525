#pragma once

// Batch mode: one REPL line per input row, one record per processed row.

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cbl/agent.hpp"

namespace cbl {

enum class BatchFormat { Text, Json };

class FileNotFoundError : public std::runtime_error {
 public:
  explicit FileNotFoundError(const std::string& path)
      : std::runtime_error("cannot open '" + path + "'") {}
};

namespace detail {

inline const char* verdict_name(VerdictClass v) {
  switch (v) {
    case VerdictClass::TautT: return "t";
    case VerdictClass::ContraF: return "f";
    case VerdictClass::Contextual: return "contextual";
  }
  return "?";
}

inline nlohmann::json record(const CognitiveLine& c) {
  const DialogOutput out = dialog(c.input);
  nlohmann::json j;
  j["kind"] = "dialog";
  j["marker"] = c.input.marker == Marker::Assert ? "!" : "?";
  j["polarity"] = c.input.polarity == Polarity::Positive ? "positive" : "negative";
  j["body"] = render(c.input.body);
  j["legality"] = to_string(out.legality);
  j["verdict"] = verdict_name(out.verdict);
  j["doublet"] = doublet(out);
  j["answer"] = out.answer == Answer::NotApplicable ? nlohmann::json(nullptr)
                                                    : nlohmann::json(to_string(out.answer));
  j["state"] = to_string(out.state);
  if (out.contexts) {
    j["p_t"] = render(out.contexts->truth_context);
    j["p_f"] = render(out.contexts->falsity_context);
    j["combined"] = render_combined(*out.contexts);
  }
  return j;
}

inline nlohmann::json record(const ClassifyLine& c) {
  nlohmann::json j;
  j["kind"] = "classify";
  j["formula"] = render(c.formula);
  const ModalTruthState state = classify(c.formula);
  j["state"] = to_string(state);
  if (const auto ctx = contexts_of(c.formula)) {
    j["p_t"] = render(ctx->truth);
    j["p_f"] = render(ctx->falsity);
  }
  return j;
}

}  // namespace detail

/// Processes every row of `in`. Blank rows and rows starting with '#' are
/// skipped; `quit` ends the run. Malformed rows produce an error record and
/// do not stop the run. Returns 0 iff no row had a syntax or command error.
inline int batch(std::istream& in, BatchFormat format, std::ostream& out) {
  Session session;
  std::string row;
  std::size_t number = 0;
  int status = 0;
  while (std::getline(in, row)) {
    ++number;
    const std::string_view line = detail::trim(row);
    if (line.empty() || line.front() == '#') continue;

    nlohmann::json rec;
    rec["line"] = number;
    rec["input"] = std::string(line);
    std::string text;
    bool stop = false;
    try {
      const ReplCommand cmd = parse_line(row);
      stop = std::holds_alternative<Quit>(cmd);
      if (format == BatchFormat::Json) {
        if (const auto* c = std::get_if<CognitiveLine>(&cmd)) rec.update(detail::record(*c));
        else if (const auto* k = std::get_if<ClassifyLine>(&cmd)) rec.update(detail::record(*k));
        else rec["kind"] = "command";
        // Keep the session in step for later `show` rows.
        const std::string response = session.respond(cmd);
        if (rec["kind"] == "command") rec["output"] = response;
      } else {
        text = session.respond(cmd);
      }
    } catch (const SyntaxError& e) {
      status = 1;
      rec["error"] = "syntax";
      rec["message"] = e.message();
      rec["position"] = e.position();
      text = "error: syntax error at position " + std::to_string(e.position()) + ": " +
             e.message() + "\n";
    } catch (const UnknownCommandError& e) {
      status = 1;
      rec["error"] = "command";
      rec["message"] = e.what();
      text = std::string("error: ") + e.what() + "\n";
    }

    if (format == BatchFormat::Json) {
      out << rec.dump() << '\n';
    } else {
      out << "line " << number << ": " << line << '\n' << text << '\n';
    }
    if (stop) break;
  }
  return status;
}

inline int batch(const std::string& path, BatchFormat format, std::ostream& out) {
  std::ifstream file(path);
  if (!file) throw FileNotFoundError(path);
  return batch(file, format, out);
}

}  // namespace cbl
