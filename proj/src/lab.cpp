#include "sclab/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sclab/error.hpp"
#include "sclab/lang_ops.hpp"
#include "sclab/witnesses.hpp"

namespace sclab::lab {

namespace {

struct OpInfo {
  Op op;
  std::string_view name;
  std::string_view expression;
};

constexpr OpInfo kOps[] = {
    {Op::kUnion, "union", "mn+m+n+1"},
    {Op::kSymDiff, "symdiff", "mn+m+n+1"},
    {Op::kDifference, "difference", "mn+m"},
    {Op::kIntersection, "intersection", "mn"},
    {Op::kProduct, "product", "m2^n+2^(n-1)"},
    {Op::kStar, "star", "2^(n-1)+2^(n-2)"},
    {Op::kReverse, "reverse", "2^n"},
    {Op::kSemigroup, "semigroup", "n^n"},
    {Op::kAtoms, "atoms", "2^n atoms; per atom: atom_formula(n,|S|)"},
    {Op::kSameUnion, "same-alphabet-union", "mn"},
    {Op::kSameSymDiff, "same-alphabet-symdiff", "mn"},
    {Op::kSameDifference, "same-alphabet-difference", "mn"},
    {Op::kSameIntersection, "same-alphabet-intersection", "mn"},
    {Op::kSameProduct, "same-alphabet-product", "(m-1)2^n+2^(n-1)"},
};

const OpInfo& info(Op op) {
  for (const auto& i : kOps) {
    if (i.op == op) return i;
  }
  throw PreconditionError("unknown operation");
}

std::uint64_t pow2(std::size_t e) { return std::uint64_t{1} << e; }

std::string pair_desc(const WitnessPair& w, std::size_t m, std::size_t n) {
  return "L'_" + std::to_string(m) + "(" + w.left_dialect.to_string() + ") ; L_" + std::to_string(n) + "(" +
         w.right_dialect.to_string() + ")";
}

std::string unary_desc(std::size_t n, std::string_view dialect_spec) {
  return "L_" + std::to_string(n) + "(" + std::string(dialect_spec) + ")";
}

// Each unary measure uses a restricted dialect of the universal witness.
std::string_view unary_dialect(Op op) {
  switch (op) {
    case Op::kStar: return "a,b";
    default: return "a,b,c";
  }
}

std::optional<BoolOp> bool_op_of(Op op) {
  switch (op) {
    case Op::kUnion:
    case Op::kSameUnion: return BoolOp::kUnion;
    case Op::kSymDiff:
    case Op::kSameSymDiff: return BoolOp::kSymDiff;
    case Op::kDifference:
    case Op::kSameDifference: return BoolOp::kDifference;
    case Op::kIntersection:
    case Op::kSameIntersection: return BoolOp::kIntersection;
    default: return std::nullopt;
  }
}

OpKind kind_of(BoolOp op) {
  switch (op) {
    case BoolOp::kUnion: return OpKind::kUnion;
    case BoolOp::kSymDiff: return OpKind::kSymDiff;
    case BoolOp::kDifference: return OpKind::kDifference;
    case BoolOp::kIntersection: return OpKind::kIntersection;
  }
  return OpKind::kUnion;
}

bool is_same_alphabet(Op op) {
  return op == Op::kSameUnion || op == Op::kSameSymDiff || op == Op::kSameDifference ||
         op == Op::kSameIntersection || op == Op::kSameProduct;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed_ms(double ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ms;
  return out.str();
}

}  // namespace

const std::vector<Op>& all_ops() {
  static const std::vector<Op> ops = [] {
    std::vector<Op> v;
    for (const auto& i : kOps) v.push_back(i.op);
    return v;
  }();
  return ops;
}

std::string_view op_name(Op op) { return info(op).name; }

std::optional<Op> parse_op(std::string_view name) {
  for (const auto& i : kOps) {
    if (i.name == name) return i.op;
  }
  return std::nullopt;
}

bool is_unary(Op op) {
  return op == Op::kStar || op == Op::kReverse || op == Op::kSemigroup || op == Op::kAtoms;
}

std::string_view FormulaTable::expression(Op op) { return info(op).expression; }

std::uint64_t FormulaTable::value(Op op, std::size_t m, std::size_t n) {
  switch (op) {
    case Op::kUnion:
    case Op::kSymDiff: return m * n + m + n + 1;
    case Op::kDifference: return m * n + m;
    case Op::kIntersection: return m * n;
    case Op::kProduct: return m * pow2(n) + pow2(n - 1);
    case Op::kStar: return pow2(n - 1) + pow2(n - 2);
    case Op::kReverse: return pow2(n);
    case Op::kSemigroup: {
      std::uint64_t p = 1;
      for (std::size_t i = 0; i < n; ++i) p *= n;
      return p;
    }
    case Op::kAtoms: return pow2(n);
    case Op::kSameUnion:
    case Op::kSameSymDiff:
    case Op::kSameDifference:
    case Op::kSameIntersection: return m * n;
    case Op::kSameProduct: return (m - 1) * pow2(n) + pow2(n - 1);
  }
  throw PreconditionError("unknown operation");
}

Range Range::parse(std::string_view text) {
  auto number = [&](std::string_view s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError("bad range \"" + std::string(text) + "\"; expected N or LO..HI");
    return static_cast<std::size_t>(std::stoull(std::string(s)));
  };
  Range r;
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw ParseError("empty range \"" + std::string(text) + "\"");
  return r;
}

std::string Range::to_string() const {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

Range default_m_range(Op op) {
  if (is_unary(op)) return {0, 0};
  if (op == Op::kProduct || op == Op::kSameProduct) return {3, 5};
  return {3, 6};
}

Range default_n_range(Op op) {
  switch (op) {
    case Op::kProduct:
    case Op::kSameProduct: return {3, 5};
    case Op::kStar:
    case Op::kReverse: return {3, 8};
    case Op::kSemigroup: return {3, 6};
    case Op::kAtoms: return {3, 4};
    default: return {3, 6};
  }
}

Config config_from_environment() {
  Config config;
  if (const char* env = std::getenv("SCLAB_BUDGET")) {
    const std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("SCLAB_BUDGET must be a positive integer, got \"" + s + "\"");
    config.subset_budget = static_cast<std::size_t>(std::stoull(s));
  }
  return config;
}

std::vector<ComplexityRecord> run_cell(Op op, std::size_t m, std::size_t n, const Config& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ComplexityRecord> out;
  ComplexityRecord rec;
  rec.op = std::string(op_name(op));
  rec.m = is_unary(op) ? 0 : m;
  rec.n = n;

  if (auto bop = bool_op_of(op)) {
    const auto w = is_same_alphabet(op) ? same_alphabet_witness_pair(kind_of(*bop), m, n)
                                        : witness_pair(kind_of(*bop), m, n);
    rec.measured = quotient_complexity(boolean_op(w.left, w.right, *bop));
    rec.witness_desc = pair_desc(w, m, n);
  } else if (op == Op::kProduct || op == Op::kSameProduct) {
    const auto w = op == Op::kProduct ? witness_pair(OpKind::kProduct, m, n)
                                      : same_alphabet_witness_pair(OpKind::kProduct, m, n);
    rec.measured = concat(w.left, w.right, config.subset_budget).size();
    rec.witness_desc = pair_desc(w, m, n);
  } else {
    if (n < 3) throw PreconditionError("witnesses need n >= 3");
    const std::string_view spec = unary_dialect(op);
    const Dfa d = witness(n, spec);
    rec.witness_desc = unary_desc(n, spec);
    switch (op) {
      case Op::kStar: rec.measured = star(d, config.subset_budget).size(); break;
      case Op::kReverse: rec.measured = reverse(d, config.subset_budget).size(); break;
      case Op::kSemigroup: rec.measured = syntactic_semigroup_size(d); break;
      case Op::kAtoms: {
        if (n > config.atoms_max_n)
          throw ResourceError("atom enumeration is limited to n <= " + std::to_string(config.atoms_max_n),
                              config.atoms_max_n, n);
        const AtomReport report = atoms(d, config.tuple_budget);
        rec.measured = report.atom_count();
        rec.detail = "count";
        for (const auto& a : report.atoms) {
          ComplexityRecord row = rec;
          row.detail = "S=" + a.set.to_string();
          row.measured = a.measured_kappa.value_or(0);
          row.formula = atom_formula(n, a.set.size());
          row.match = a.nonempty && row.measured == row.formula;
          out.push_back(std::move(row));
        }
        break;
      }
      default: throw PreconditionError("unhandled operation");
    }
  }
  rec.formula = FormulaTable::value(op, m, n);
  rec.match = rec.measured == rec.formula;
  out.insert(out.begin(), rec);

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.elapsed_ms = ms;
  return out;
}

std::vector<Cell> grid(const std::vector<Op>& ops, const std::optional<Range>& m,
                       const std::optional<Range>& n) {
  std::vector<Cell> cells;
  for (Op op : ops) {
    const Range nr = n.value_or(default_n_range(op));
    if (is_unary(op)) {
      for (std::size_t j = nr.lo; j <= nr.hi; ++j) cells.push_back({op, 0, j});
      continue;
    }
    const Range mr = m.value_or(default_m_range(op));
    for (std::size_t i = mr.lo; i <= mr.hi; ++i) {
      for (std::size_t j = nr.lo; j <= nr.hi; ++j) cells.push_back({op, i, j});
    }
  }
  return cells;
}

std::vector<ComplexityRecord> verify(const std::vector<Cell>& cells, const Config& config) {
  std::vector<std::vector<ComplexityRecord>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = run_cell(cells[i].op, cells[i].m, cells[i].n, config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(cells.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ComplexityRecord> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

bool all_match(const std::vector<ComplexityRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.match; });
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "md" || name == "markdown") return ReportFormat::kMarkdown;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  return std::nullopt;
}

std::string render(const std::vector<ComplexityRecord>& records, ReportFormat format, bool timing) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kJson: {
      nlohmann::ordered_json j;
      j["records"] = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json e;
        e["op"] = r.op;
        e["m"] = r.m;
        e["n"] = r.n;
        e["measured"] = r.measured;
        e["formula"] = r.formula;
        e["expression"] = std::string(FormulaTable::expression(*parse_op(r.op)));
        e["match"] = r.match;
        e["witness"] = r.witness_desc;
        if (!r.detail.empty()) e["detail"] = r.detail;
        if (timing) e["elapsed_ms"] = r.elapsed_ms;
        j["records"].push_back(std::move(e));
      }
      j["all_match"] = all_match(records);
      out << j.dump(2) << "\n";
      break;
    }
    case ReportFormat::kCsv: {
      out << "op,m,n,measured,formula,match,witness,detail";
      if (timing) out << ",elapsed_ms";
      out << "\r\n";
      for (const auto& r : records) {
        out << csv_field(r.op) << ',' << r.m << ',' << r.n << ',' << r.measured << ',' << r.formula << ','
            << (r.match ? "true" : "false") << ',' << csv_field(r.witness_desc) << ',' << csv_field(r.detail);
        if (timing) out << ',' << fixed_ms(r.elapsed_ms);
        out << "\r\n";
      }
      break;
    }
    case ReportFormat::kMarkdown: {
      out << "| op | m | n | measured | formula | match | witness | detail |";
      if (timing) out << " ms |";
      out << "\n|---|---|---|---|---|---|---|---|";
      if (timing) out << "---|";
      out << "\n";
      for (const auto& r : records) {
        out << "| " << r.op << " | " << (r.m ? std::to_string(r.m) : "-") << " | " << r.n << " | " << r.measured
            << " | " << r.formula << " | " << (r.match ? "yes" : "NO") << " | " << r.witness_desc << " | "
            << r.detail << " |";
        if (timing) out << ' ' << fixed_ms(r.elapsed_ms) << " |";
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

bool atoms_match(const AtomReport& report) {
  return std::all_of(report.atoms.begin(), report.atoms.end(), [&](const AtomProfile& a) {
    return a.nonempty && a.measured_kappa == atom_formula(report.n, a.set.size());
  });
}

std::string render_atoms(const AtomReport& report, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kJson: {
      nlohmann::ordered_json j;
      j["n"] = report.n;
      j["atoms"] = nlohmann::ordered_json::array();
      for (const auto& a : report.atoms) {
        nlohmann::ordered_json e;
        e["S"] = a.set.members();
        e["kappa"] = a.measured_kappa ? nlohmann::ordered_json(*a.measured_kappa) : nlohmann::ordered_json(nullptr);
        const auto f = atom_formula(report.n, a.set.size());
        e["formula"] = f;
        e["match"] = a.nonempty && a.measured_kappa == f;
        j["atoms"].push_back(std::move(e));
      }
      out << j.dump() << "\n";
      break;
    }
    case ReportFormat::kCsv: {
      out << "S,kappa,formula,match\r\n";
      for (const auto& a : report.atoms) {
        const auto f = atom_formula(report.n, a.set.size());
        out << csv_field(a.set.to_string()) << ','
            << (a.measured_kappa ? std::to_string(*a.measured_kappa) : std::string()) << ',' << f << ','
            << (a.nonempty && a.measured_kappa == f ? "true" : "false") << "\r\n";
      }
      break;
    }
    case ReportFormat::kMarkdown: {
      out << "| S | kappa | formula | match |\n|---|---|---|---|\n";
      for (const auto& a : report.atoms) {
        const auto f = atom_formula(report.n, a.set.size());
        out << "| " << a.set.to_string() << " | "
            << (a.measured_kappa ? std::to_string(*a.measured_kappa) : std::string("empty")) << " | " << f
            << " | " << (a.nonempty && a.measured_kappa == f ? "yes" : "NO") << " |\n";
      }
      break;
    }
  }
  return out.str();
}

}  // namespace sclab::lab
