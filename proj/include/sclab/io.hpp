#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sclab/automata.hpp"
#include "sclab/lang_ops.hpp"

namespace sclab {

using Json = nlohmann::ordered_json;

// JSON interchange:
//   {"alphabet":["a","b"],"states":3,"initial":0,"finals":[2],
//    "transitions":{"a":[1,2,0],"b":[0,0,1]}}
// transitions[x][q] is the image of q under x. NFAs use "initials" instead of
// "initial", lists of targets per state, and an optional "epsilon" list.

Json dfa_to_json(const Dfa& d);
Dfa dfa_from_json(const Json& j);
Dfa parse_dfa(std::string_view text);
std::string serialize(const Dfa& d);

Json nfa_to_json(const Nfa& nfa);
Nfa nfa_from_json(const Json& j);
Nfa parse_nfa(std::string_view text);

/// DFA document plus a "labels" array: [left, right] per state, null for
/// the empty (sink) component.
Json labeled_to_json(const LabeledDfa& d);

/// Graphviz rendering: the initial state has an incoming edge from a point
/// node, finals are double circles, parallel edges share one label.
std::string to_dot(const Dfa& d, std::string_view name = "dfa",
                   const std::vector<std::string>& state_names = {});

}  // namespace sclab
