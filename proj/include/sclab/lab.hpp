#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/atoms.hpp"
#include "sclab/automata.hpp"

namespace sclab::lab {

/// Operations the harness can sweep.
enum class Op {
  kUnion,
  kSymDiff,
  kDifference,
  kIntersection,
  kProduct,
  kStar,
  kReverse,
  kSemigroup,
  kAtoms,
  kSameUnion,
  kSameSymDiff,
  kSameDifference,
  kSameIntersection,
  kSameProduct,
};

const std::vector<Op>& all_ops();
std::string_view op_name(Op op);
std::optional<Op> parse_op(std::string_view name);
/// Unary operations (and the semigroup/atom measures) ignore m.
bool is_unary(Op op);

/// Closed-form complexities, the only place the bounds are written down.
struct FormulaTable {
  /// Human-readable expression, e.g. "mn+m+n+1".
  static std::string_view expression(Op op);
  /// Value at (m, n). For kAtoms this is the number of atoms, 2^n.
  static std::uint64_t value(Op op, std::size_t m, std::size_t n);
};

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
  /// "3..6" or "4"
  static Range parse(std::string_view text);
  std::string to_string() const;
};

/// Ranges used when none are given on the command line.
Range default_m_range(Op op);
Range default_n_range(Op op);

struct ComplexityRecord {
  std::string op;
  std::size_t m = 0;  // 0 for unary operations
  std::size_t n = 0;
  std::uint64_t measured = 0;
  std::uint64_t formula = 0;
  bool match = false;
  std::string witness_desc;
  std::string detail;  // e.g. the atom's subset S
  double elapsed_ms = 0.0;
};

struct Config {
  std::size_t subset_budget = kDefaultSubsetBudget;
  std::size_t tuple_budget = kDefaultTupleBudget;
  std::size_t atoms_max_n = 5;
  unsigned jobs = 0;  // 0: hardware concurrency
};

/// Reads SCLAB_BUDGET into the subset budget when set.
Config config_from_environment();

/// Builds the witnesses for one (op, m, n) cell and measures it. Atoms yield
/// one record for the atom count and one per subset S.
std::vector<ComplexityRecord> run_cell(Op op, std::size_t m, std::size_t n, const Config& config);

struct Cell {
  Op op;
  std::size_t m;
  std::size_t n;
};

/// Cells of a sweep, ordered by (op, m, n). m is fixed to 0 for unary ops.
std::vector<Cell> grid(const std::vector<Op>& ops, const std::optional<Range>& m,
                       const std::optional<Range>& n);

/// Runs every cell, in parallel, and returns records in grid order.
std::vector<ComplexityRecord> verify(const std::vector<Cell>& cells, const Config& config);

bool all_match(const std::vector<ComplexityRecord>& records);

enum class ReportFormat { kMarkdown, kCsv, kJson };
std::optional<ReportFormat> parse_report_format(std::string_view name);

std::string render(const std::vector<ComplexityRecord>& records, ReportFormat format, bool timing);

/// Per-S table produced by the `atoms` command.
std::string render_atoms(const AtomReport& report, ReportFormat format);
bool atoms_match(const AtomReport& report);

}  // namespace sclab::lab
