// sclab: build witness automata, apply operations to DFA files and check
// measured complexities against their closed forms.
//
// Exit codes: 0 all matched, 1 mismatch, 2 usage or parse error, 3 budget.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sclab/atoms.hpp"
#include "sclab/error.hpp"
#include "sclab/io.hpp"
#include "sclab/lab.hpp"
#include "sclab/lang_ops.hpp"
#include "sclab/witnesses.hpp"

namespace {

using namespace sclab;

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string n = "";
  std::string m = "";
  std::string dialect = "a,b,c,d";
  std::vector<std::string> ops;
  std::string apply_op;
  std::string format;
  std::optional<std::size_t> budget;
  bool no_timing = false;
  bool all = false;
  std::vector<std::string> files;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

lab::Config make_config(const Options& o) {
  lab::Config config = lab::config_from_environment();
  if (o.budget) config.subset_budget = *o.budget;
  return config;
}

std::size_t single_n(const Options& o) {
  if (o.n.empty()) throw ParseError("--n is required");
  const lab::Range r = lab::Range::parse(o.n);
  if (r.lo != r.hi) throw ParseError("--n must be a single value here");
  return r.lo;
}

// Plain transition table, one row per state.
std::string dfa_markdown(const Dfa& d) {
  std::ostringstream out;
  out << "| state |";
  for (Letter x : d.alphabet()) out << ' ' << x.symbol << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < d.alphabet().size(); ++i) out << "---|";
  out << "\n";
  for (State q = 0; q < d.size(); ++q) {
    out << "| " << (q == d.initial() ? "->" : "") << q << (d.is_final(q) ? "*" : "") << " |";
    for (std::size_t x = 0; x < d.alphabet().size(); ++x) out << ' ' << d.next(q, x) << " |";
    out << "\n";
  }
  return out.str();
}

// RFC 4180 rows: state, initial, final, then one target column per letter.
std::string dfa_csv(const Dfa& d) {
  std::ostringstream out;
  out << "state,initial,final";
  for (Letter x : d.alphabet()) out << ',' << x.symbol;
  out << "\r\n";
  for (State q = 0; q < d.size(); ++q) {
    out << q << ',' << (q == d.initial()) << ',' << d.is_final(q);
    for (std::size_t x = 0; x < d.alphabet().size(); ++x) out << ',' << d.next(q, x);
    out << "\r\n";
  }
  return out.str();
}

int cmd_witness(const Options& o) {
  const std::size_t n = single_n(o);
  const Dfa d = witness(n, o.dialect);
  const std::string format = o.format.empty() ? "json" : o.format;
  if (format == "json") {
    std::cout << dfa_to_json(d).dump() << "\n";
  } else if (format == "dot") {
    std::cout << to_dot(d, "L_" + std::to_string(n) + "(" + o.dialect + ")");
  } else if (format == "md") {
    std::cout << dfa_markdown(d);
  } else {
    std::cout << dfa_csv(d);
  }
  return kExitMatch;
}

int cmd_apply(const Options& o) {
  const std::string& op = o.apply_op;
  const bool binary = op != "star" && op != "reverse";
  if (o.files.size() != (binary ? 2u : 1u))
    throw ParseError(op + " expects " + (binary ? "two" : "one") + " DFA file(s)");
  const lab::Config config = make_config(o);
  const Dfa left = parse_dfa(read_input(o.files[0]));

  Dfa result = left;
  if (binary) {
    const Dfa right = parse_dfa(read_input(o.files[1]));
    if (op == "product" || op == "concat") {
      result = concat(left, right, config.subset_budget);
    } else if (auto b = parse_bool_op(op)) {
      result = boolean_op(left, right, *b);
    } else {
      throw ParseError("unknown operation: " + op);
    }
  } else if (op == "star") {
    result = star(left, config.subset_budget);
  } else {
    result = reverse(left, config.subset_budget);
  }

  const std::string format = o.format.empty() ? "json" : o.format;
  if (format == "json") {
    Json j;
    j["op"] = op;
    j["kappa"] = result.size();
    j["empty_alphabet"] = result.alphabet().empty();
    j["dfa"] = dfa_to_json(result);
    std::cout << j.dump() << "\n";
  } else if (format == "dot") {
    std::cout << "// kappa = " << result.size() << "\n" << to_dot(result, op);
  } else if (format == "md") {
    std::cout << "kappa = " << result.size() << "\n\n" << dfa_markdown(result);
  } else {
    std::cout << dfa_csv(result);
  }
  return kExitMatch;
}

lab::ReportFormat report_format(const Options& o) {
  const std::string name = o.format.empty() ? "md" : o.format;
  const auto f = lab::parse_report_format(name);
  if (!f) throw ParseError("reports support --format md, csv or json");
  return *f;
}

int report(const std::vector<lab::ComplexityRecord>& records, const Options& o) {
  std::cout << lab::render(records, report_format(o), !o.no_timing);
  if (lab::all_match(records)) return kExitMatch;
  for (const auto& r : records) {
    if (r.match) continue;
    std::cerr << "mismatch: " << r.op << " m=" << r.m << " n=" << r.n << " measured " << r.measured
              << " formula " << r.formula << (r.detail.empty() ? "" : " " + r.detail) << "\n";
  }
  return kExitMismatch;
}

int cmd_verify(const Options& o) {
  std::vector<lab::Op> ops;
  if (o.all || (o.ops.size() == 1 && o.ops.front() == "all")) {
    ops = lab::all_ops();
  } else {
    if (o.ops.empty()) throw ParseError("verify needs --ops or --all");
    for (const auto& name : o.ops) {
      const auto op = lab::parse_op(name);
      if (!op) throw ParseError("unknown operation: " + name);
      ops.push_back(*op);
    }
  }
  std::optional<lab::Range> m, n;
  if (!o.m.empty()) m = lab::Range::parse(o.m);
  if (!o.n.empty()) n = lab::Range::parse(o.n);
  return report(lab::verify(lab::grid(ops, m, n), make_config(o)), o);
}

int cmd_semigroup(const Options& o) {
  std::optional<lab::Range> n;
  if (!o.n.empty()) n = lab::Range::parse(o.n);
  return report(lab::verify(lab::grid({lab::Op::kSemigroup}, std::nullopt, n), make_config(o)), o);
}

int cmd_atoms(const Options& o) {
  const std::size_t n = single_n(o);
  if (n < 3) throw PreconditionError("atoms needs n >= 3");
  const lab::Config config = make_config(o);
  if (n > config.atoms_max_n)
    throw ResourceError("atom enumeration is limited to n <= " + std::to_string(config.atoms_max_n),
                        config.atoms_max_n, n);
  const AtomReport r = atoms(witness(n, "a,b,c"), config.tuple_budget);
  std::cout << lab::render_atoms(r, report_format(o));
  return lab::atoms_match(r) ? kExitMatch : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State complexity lab for operations on languages over different alphabets"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "Subset budget (overrides SCLAB_BUDGET)")->check(CLI::PositiveNumber);
  };

  auto* witness_cmd = app.add_subcommand("witness", "Print the dialect L_n(dialect) of the universal witness");
  witness_cmd->add_option("--n", o.n, "Number of states (>= 3)")->required();
  witness_cmd->add_option("--dialect", o.dialect, "Partial permutation, e.g. \"b,a,-,d\"");
  add_format(witness_cmd, {"json", "dot", "md", "csv"});

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operation to DFA files and report kappa");
  apply_cmd->add_option("--ops", o.apply_op, "union, symdiff, difference, intersection, product, star or reverse")
      ->required();
  apply_cmd->add_option("files", o.files, "DFA JSON files ('-' for stdin)")->required();
  add_format(apply_cmd, {"json", "dot", "md", "csv"});
  add_budget(apply_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Compare measured complexities with the closed forms");
  verify_cmd->add_option("--ops", o.ops, "Comma-separated operations, or 'all'")->delimiter(',');
  verify_cmd->add_flag("--all", o.all, "Every operation over its default ranges");
  verify_cmd->add_option("--m", o.m, "Range for m, e.g. 3..6");
  verify_cmd->add_option("--n", o.n, "Range for n, e.g. 3..6");
  add_format(verify_cmd, {"json", "dot", "md", "csv"});
  add_budget(verify_cmd);
  verify_cmd->add_flag("--no-timing", o.no_timing, "Omit elapsed times for byte-stable reports");

  auto* atoms_cmd = app.add_subcommand("atoms", "Atoms of L_n(a,b,c) and their complexities");
  atoms_cmd->add_option("--n", o.n, "Number of states")->required();
  add_format(atoms_cmd, {"json", "dot", "md", "csv"});
  add_budget(atoms_cmd);

  auto* semigroup_cmd = app.add_subcommand("semigroup", "Syntactic semigroup sizes of L_n(a,b,c)");
  semigroup_cmd->add_option("--n", o.n, "Range for n, e.g. 3..6");
  add_format(semigroup_cmd, {"json", "dot", "md", "csv"});
  add_budget(semigroup_cmd);
  semigroup_cmd->add_flag("--no-timing", o.no_timing, "Omit elapsed times for byte-stable reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitMatch : kExitUsage;
  }

  try {
    if (*witness_cmd) return cmd_witness(o);
    if (*apply_cmd) return cmd_apply(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*atoms_cmd) return cmd_atoms(o);
    if (*semigroup_cmd) return cmd_semigroup(o);
  } catch (const ResourceError& e) {
    std::cerr << "sclab: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PreconditionError& e) {
    std::cerr << "sclab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "sclab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "sclab: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "sclab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
