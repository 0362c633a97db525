#pragma once

// Discourse tree renderers: indented text, Graphviz DOT, and JSON.

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cbl/discourse.hpp"

namespace cbl {

enum class TreeFormat { Text, Dot, Json };

inline std::optional<TreeFormat> tree_format_from_string(std::string_view name) {
  if (name == "text") return TreeFormat::Text;
  if (name == "dot") return TreeFormat::Dot;
  if (name == "json") return TreeFormat::Json;
  return std::nullopt;
}

inline std::string to_string(LeafStatus s) { return s == LeafStatus::Closed ? "closed" : "open"; }

namespace detail {

inline void render_text(const DiscourseTree& d, std::size_t indent,
                        std::optional<RuleTag> derived_by, std::string& out) {
  out.append(2 * indent, ' ');
  out += marker_prefix(d.marker);
  out += ' ';
  out += render(d.sequent);
  if (derived_by || d.status) {
    out += "  [";
    if (derived_by) out += to_string(*derived_by);
    if (derived_by && d.status) out += "; ";
    if (d.status) out += to_string(*d.status);
    out += ']';
  }
  out += '\n';
  for (const DiscourseTree& c : d.children) render_text(c, indent + 1, d.rule, out);
}

inline std::string dot_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::size_t render_dot(const DiscourseTree& d, std::size_t& next_id, std::ostream& out) {
  const std::size_t id = next_id++;
  out << "  n" << id << " [label=\"" << dot_escape(marker_prefix(d.marker) + " " + render(d.sequent))
      << "\"";
  if (d.status == LeafStatus::Closed) out << ", color=darkgreen";
  if (d.status == LeafStatus::Open) out << ", color=red, style=dashed";
  out << "];\n";
  for (const DiscourseTree& c : d.children) {
    const std::size_t child = render_dot(c, next_id, out);
    out << "  n" << id << " -> n" << child << " [label=\"" << to_string(*d.rule) << "\"];\n";
  }
  return id;
}

inline nlohmann::json formulas_to_json(const std::vector<Formula>& side) {
  auto arr = nlohmann::json::array();
  for (const Formula& f : side) arr.push_back(render(f));
  return arr;
}

}  // namespace detail

/// {"marker", "antecedent", "succedent", "rule", "status", "children"};
/// formulas are strings in the concrete syntax.
inline nlohmann::json to_json(const DiscourseTree& d) {
  nlohmann::json j;
  j["marker"] = d.marker == Marker::Assert ? "!" : "?";
  j["antecedent"] = detail::formulas_to_json(d.sequent.antecedent());
  j["succedent"] = detail::formulas_to_json(d.sequent.succedent());
  j["rule"] = d.rule ? nlohmann::json(to_string(*d.rule)) : nlohmann::json(nullptr);
  j["status"] = d.status ? nlohmann::json(to_string(*d.status)) : nlohmann::json(nullptr);
  j["children"] = nlohmann::json::array();
  for (const DiscourseTree& c : d.children) j["children"].push_back(to_json(c));
  return j;
}

class TreeFormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline DiscourseTree tree_from_json(const nlohmann::json& j) {
  try {
    DiscourseTree d;
    const std::string marker = j.at("marker").get<std::string>();
    if (marker != "!" && marker != "?") throw TreeFormatError("bad marker '" + marker + "'");
    d.marker = marker == "!" ? Marker::Assert : Marker::Query;
    std::vector<Formula> left;
    std::vector<Formula> right;
    for (const auto& s : j.at("antecedent")) left.push_back(parse(s.get<std::string>()));
    for (const auto& s : j.at("succedent")) right.push_back(parse(s.get<std::string>()));
    d.sequent = Sequent(left, right);
    if (!j.at("rule").is_null()) {
      d.rule = rule_from_string(j.at("rule").get<std::string>());
      if (!d.rule) throw TreeFormatError("unknown rule '" + j.at("rule").get<std::string>() + "'");
    }
    if (!j.at("status").is_null()) {
      const std::string status = j.at("status").get<std::string>();
      if (status != "closed" && status != "open")
        throw TreeFormatError("bad status '" + status + "'");
      d.status = status == "closed" ? LeafStatus::Closed : LeafStatus::Open;
    }
    for (const auto& c : j.at("children")) d.children.push_back(tree_from_json(c));
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw TreeFormatError(e.what());
  } catch (const SyntaxError& e) {
    throw TreeFormatError(std::string("bad formula: ") + e.what());
  }
}

inline DiscourseTree tree_from_json(std::string_view text) {
  try {
    return tree_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw TreeFormatError(e.what());
  }
}

inline DiscourseTree tree_from_json(const std::string& text) {
  return tree_from_json(std::string_view(text));
}
inline DiscourseTree tree_from_json(const char* text) {
  return tree_from_json(std::string_view(text));
}

/// text: one vertex per line, children indented two spaces, each line
/// prefixed by the marker and tagged with the rule that derived it and the
/// leaf status. dot: a Graphviz digraph with rule-labelled edges. json: see
/// to_json.
inline std::string render_tree(const DiscourseTree& d, TreeFormat format) {
  switch (format) {
    case TreeFormat::Text: {
      std::string out;
      detail::render_text(d, 0, std::nullopt, out);
      return out;
    }
    case TreeFormat::Dot: {
      std::ostringstream out;
      out << "digraph discourse {\n  node [shape=box, fontname=\"monospace\"];\n";
      std::size_t next_id = 0;
      detail::render_dot(d, next_id, out);
      out << "}\n";
      return out.str();
    }
    case TreeFormat::Json: return to_json(d).dump(2) + "\n";
  }
  return {};
}

}  // namespace cbl
