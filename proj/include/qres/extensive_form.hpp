#pragma once

// Deterministic-equivalent MILP: every second-stage variable and constraint
// replicated per scenario, costs weighted by scenario probability. Exported
// as CPLEX LP text for external cross-checks; tiny forms can be solved here by
// exhaustive enumeration.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qres/instance.hpp"
#include "qres/units.hpp"

namespace qres {

enum class VarKind { integer, continuous };
enum class Sense { less_equal, greater_equal };

struct Variable {
  std::string name;
  VarKind kind = VarKind::continuous;
  Exact lower = 0;
  std::optional<Exact> upper;  // nullopt = +infinity

  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Term {
  std::size_t var = 0;
  Exact coef;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Row {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::less_equal;
  Exact rhs;

  friend bool operator==(const Row&, const Row&) = default;
};

/// Minimization problem. `objective` holds exactly one term per variable, in
/// variable order (zero coefficients included).
struct ExtensiveForm {
  std::vector<Variable> variables;
  std::vector<Term> objective;
  std::vector<Row> constraints;

  friend bool operator==(const ExtensiveForm&, const ExtensiveForm&) = default;
};

/// Throws ModelError when names repeat, indices dangle or the objective does
/// not list every variable once in order.
void check_form(const ExtensiveForm& form);

/// Variables per triple: xr, then per scenario (xu, xo, y). Rows per
/// triple-scenario: util (xu - xr <= 0), demand (xu + xo >= beta),
/// wait (-y <= alpha - t). Capacity is xr's upper bound.
ExtensiveForm build_extensive_form(const Instance& instance);

/// Writes the form as CPLEX LP text (LF line endings, ASCII). Returns the
/// number of bytes written.
std::size_t export_lp(const ExtensiveForm& form, std::ostream& out);
std::string to_lp(const ExtensiveForm& form);

/// Reads the subset of LP text written by export_lp. Throws ParseError with
/// the offending line.
ExtensiveForm parse_lp(std::string_view source);

/// Number text used in LP files: exact when the value has a terminating
/// decimal expansion, otherwise rounded to exactly 30 fraction digits. An exact
/// value needing exactly 30 digits gets a trailing zero to keep the two apart.
std::string format_lp_number(const Exact& value);

/// Inverse of format_lp_number. 30-fraction-digit values are read back as the
/// simplest rational within half a unit of the last digit, which recovers any
/// rational with denominator up to 10^15 exactly.
Exact parse_lp_number(std::string_view text);

struct EnumerationResult {
  Exact objective;
  std::vector<Exact> values;  // one per variable
  std::uint64_t leaves = 0;   // integer assignments evaluated
};

/// Exhaustive enumeration over integer assignments. The form is split into
/// connected components of its constraint graph; in each one, the integer
/// variables with finite bounds are enumerated jointly, and for every such
/// assignment the remaining variables split into independent groups that are
/// enumerated separately. Unbounded integers get ranges implied by the rows;
/// continuous variables take the smallest value their rows allow.
/// Throws GuardExceeded when more than `guard` leaves would be visited and
/// ModelError when the form is infeasible or outside this scheme.
EnumerationResult solve_enumerative(const ExtensiveForm& form, std::uint64_t guard = 5'000'000);

}  // namespace qres
