#include "sclab/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sclab/error.hpp"

namespace sclab {

namespace {

Alphabet alphabet_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("\"alphabet\" must be an array of one-character strings");
  std::vector<Letter> letters;
  for (const auto& e : j) {
    if (!e.is_string() || e.get<std::string>().size() != 1)
      throw ParseError("alphabet entries must be one-character strings");
    letters.push_back(Letter{e.get<std::string>()[0]});
  }
  try {
    return Alphabet(std::move(letters));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::size_t size_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw ParseError(std::string("missing or non-integer \"") + key + "\"");
  return j[key].get<std::size_t>();
}

State state_value(const Json& e, std::size_t n) {
  if (!e.is_number_unsigned()) throw ParseError("state ids must be non-negative integers");
  const auto q = e.get<std::size_t>();
  if (q >= n) throw ParseError("state id " + std::to_string(q) + " out of range for " + std::to_string(n) + " states");
  return static_cast<State>(q);
}

std::vector<State> state_list(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array");
  std::vector<State> out;
  for (const auto& e : j) out.push_back(state_value(e, n));
  return out;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string symbol(Letter x) { return std::string(1, x.symbol); }

}  // namespace

Json dfa_to_json(const Dfa& d) {
  Json j;
  j["alphabet"] = Json::array();
  for (Letter x : d.alphabet()) j["alphabet"].push_back(symbol(x));
  j["states"] = d.size();
  j["initial"] = d.initial();
  j["finals"] = d.finals();
  j["transitions"] = Json::object();
  for (std::size_t x = 0; x < d.alphabet().size(); ++x) j["transitions"][symbol(d.alphabet()[x])] = d.column(x);
  return j;
}

Dfa dfa_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a DFA document must be a JSON object");
  if (!j.contains("alphabet")) throw ParseError("missing \"alphabet\"");
  Alphabet sigma = alphabet_from_json(j["alphabet"]);
  const std::size_t n = size_field(j, "states");
  if (n == 0) throw ParseError("a DFA needs at least one state");
  const State initial = j.contains("initial") ? state_value(j["initial"], n)
                                              : throw ParseError("missing \"initial\"");
  if (!j.contains("finals")) throw ParseError("missing \"finals\"");
  auto finals = state_list(j["finals"], n, "finals");
  if (!j.contains("transitions") || !j["transitions"].is_object())
    throw ParseError("missing or non-object \"transitions\"");
  const Json& t = j["transitions"];
  std::vector<State> table;
  table.reserve(n * sigma.size());
  for (Letter x : sigma) {
    if (!t.contains(symbol(x))) throw ParseError("no transitions listed for letter '" + symbol(x) + "'");
    auto col = state_list(t[symbol(x)], n, "transitions");
    if (col.size() != n)
      throw ParseError("letter '" + symbol(x) + "' lists " + std::to_string(col.size()) +
                       " targets, expected " + std::to_string(n));
    table.insert(table.end(), col.begin(), col.end());
  }
  for (const auto& [key, _] : t.items()) {
    if (key.size() != 1 || !sigma.contains(Letter{key[0]}))
      throw ParseError("transitions given for unknown letter \"" + key + "\"");
  }
  return Dfa(n, std::move(sigma), std::move(table), initial, std::move(finals));
}

Dfa parse_dfa(std::string_view text) { return dfa_from_json(parse_text(text)); }

std::string serialize(const Dfa& d) { return dfa_to_json(d).dump(); }

Json nfa_to_json(const Nfa& nfa) {
  Json j;
  j["alphabet"] = Json::array();
  for (Letter x : nfa.alphabet()) j["alphabet"].push_back(symbol(x));
  j["states"] = nfa.size();
  j["initials"] = nfa.initials().members();
  j["finals"] = nfa.finals().members();
  j["transitions"] = Json::object();
  for (std::size_t x = 0; x < nfa.alphabet().size(); ++x) {
    Json col = Json::array();
    for (State q = 0; q < nfa.size(); ++q) {
      auto targets = nfa.targets(q, x);
      std::sort(targets.begin(), targets.end());
      col.push_back(targets);
    }
    j["transitions"][symbol(nfa.alphabet()[x])] = col;
  }
  if (nfa.has_epsilon()) {
    Json eps = Json::array();
    for (State q = 0; q < nfa.size(); ++q) {
      auto targets = nfa.epsilon_targets(q);
      std::sort(targets.begin(), targets.end());
      eps.push_back(targets);
    }
    j["epsilon"] = eps;
  }
  return j;
}

Nfa nfa_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("an NFA document must be a JSON object");
  if (!j.contains("alphabet")) throw ParseError("missing \"alphabet\"");
  Alphabet sigma = alphabet_from_json(j["alphabet"]);
  const std::size_t n = size_field(j, "states");
  Nfa nfa(n, sigma);
  if (!j.contains("initials")) throw ParseError("missing \"initials\"");
  for (State q : state_list(j["initials"], n, "initials")) nfa.add_initial(q);
  if (!j.contains("finals")) throw ParseError("missing \"finals\"");
  for (State q : state_list(j["finals"], n, "finals")) nfa.add_final(q);
  if (!j.contains("transitions") || !j["transitions"].is_object())
    throw ParseError("missing or non-object \"transitions\"");
  const Json& t = j["transitions"];
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    const std::string key = symbol(sigma[x]);
    if (!t.contains(key)) continue;
    const Json& col = t[key];
    if (!col.is_array() || col.size() != n)
      throw ParseError("letter '" + key + "' must list one target array per state");
    for (State q = 0; q < n; ++q) {
      for (State r : state_list(col[q], n, "transitions")) nfa.add_transition(q, x, r);
    }
  }
  if (j.contains("epsilon")) {
    const Json& eps = j["epsilon"];
    if (!eps.is_array() || eps.size() != n) throw ParseError("\"epsilon\" must list one target array per state");
    for (State q = 0; q < n; ++q) {
      for (State r : state_list(eps[q], n, "epsilon")) nfa.add_epsilon(q, r);
    }
  }
  return nfa;
}

Nfa parse_nfa(std::string_view text) { return nfa_from_json(parse_text(text)); }

Json labeled_to_json(const LabeledDfa& d) {
  Json j = dfa_to_json(d.dfa);
  Json labels = Json::array();
  for (const auto& l : d.labels) {
    labels.push_back(Json::array({l.left ? Json(*l.left) : Json(nullptr),
                                  l.right ? Json(*l.right) : Json(nullptr)}));
  }
  j["labels"] = labels;
  return j;
}

std::string to_dot(const Dfa& d, std::string_view name, const std::vector<std::string>& state_names) {
  auto node = [&](State q) {
    return q < state_names.size() ? state_names[q] : std::to_string(q);
  };
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (State q = 0; q < d.size(); ++q) {
    out << "  " << q << " [label=\"" << node(q) << "\", shape="
        << (d.is_final(q) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> " << d.initial() << ";\n";
  for (State q = 0; q < d.size(); ++q) {
    std::map<State, std::string> edges;
    for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
      auto& label = edges[d.next(q, x)];
      if (!label.empty()) label += ',';
      label += d.alphabet()[x].symbol;
    }
    for (const auto& [t, label] : edges) out << "  " << q << " -> " << t << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sclab
