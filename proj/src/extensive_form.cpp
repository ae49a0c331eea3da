#include "qres/extensive_form.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "qres/errors.hpp"
#include "qres/scenario.hpp"

namespace qres {

namespace {

constexpr int kRoundedDigits = 30;
constexpr std::size_t kMaxNameLength = 255;
constexpr std::size_t kObjectiveLineWidth = 200;

std::string sanitize(std::string_view name) {
  std::string out;
  for (char c : name.substr(0, kMaxNameLength)) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    out += ok ? c : '_';
  }
  return out;
}

std::string suffix(const TripleRef& t) {
  return "_c" + std::to_string(t.circuit_index) + "_p" + std::to_string(t.provider_index) + "_m" +
         std::to_string(t.machine_index);
}

std::string term_text(const Term& t, const std::vector<Variable>& vars, bool first) {
  const std::string name = sanitize(vars[t.var].name);
  if (first) return format_lp_number(t.coef) + " " + name;
  if (t.coef < 0) return "- " + format_lp_number(Exact(-t.coef)) + " " + name;
  return "+ " + format_lp_number(t.coef) + " " + name;
}

mpz_class floor_of(const Exact& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_of(const Exact& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool looks_numeric(std::string_view tok) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  return i < tok.size() && ((tok[i] >= '0' && tok[i] <= '9') || tok[i] == '.');
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Saturating arithmetic for leaf counting.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return b > UINT64_MAX - a ? UINT64_MAX : a + b; }

struct Range {
  mpz_class lo;
  mpz_class hi;
  std::uint64_t size() const {
    if (hi < lo) return 0;
    mpz_class n = hi - lo + 1;
    return n.fits_ulong_p() ? n.get_ui() : UINT64_MAX;
  }
};

// A group of variables enumerated together, with the rows it owns.
struct Group {
  std::vector<std::size_t> integers;
  std::vector<std::size_t> continuous;
  std::vector<std::size_t> rows;
};

class Enumerator {
 public:
  Enumerator(const ExtensiveForm& form, std::uint64_t guard) : form_(form), guard_(guard) {
    const std::size_t n = form.variables.size();
    cost_.assign(n, Exact(0));
    for (const auto& t : form.objective) cost_[t.var] += t.coef;
    var_rows_.resize(n);
    for (std::size_t r = 0; r < form.constraints.size(); ++r) {
      for (const auto& t : form.constraints[r].terms) var_rows_[t.var].push_back(r);
    }
    for (std::size_t v = 0; v < n; ++v) {
      const Variable& var = form.variables[v];
      if (var.kind == VarKind::continuous && cost_[v] < 0) {
        throw ModelError("solve_enumerative: continuous variable '" + var.name + "' has a negative cost");
      }
    }
    values_.assign(n, Exact(0));
  }

  EnumerationResult run() {
    const std::size_t n = form_.variables.size();
    for (const auto& row : form_.constraints) {
      if (row.terms.empty() && !satisfied(row)) throw ModelError("solve_enumerative: empty row '" + row.name + "' is infeasible");
      std::size_t continuous = 0;
      for (const auto& t : row.terms) continuous += form_.variables[t.var].kind == VarKind::continuous;
      if (continuous > 1) {
        throw ModelError("solve_enumerative: row '" + row.name + "' couples several continuous variables");
      }
    }

    DisjointSets sets(n);
    for (const auto& row : form_.constraints) {
      for (std::size_t i = 1; i < row.terms.size(); ++i) sets.unite(row.terms[0].var, row.terms[i].var);
    }
    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t v = 0; v < n; ++v) components[sets.find(v)].push_back(v);

    // Plan every component before enumerating, so the guard fails fast.
    std::vector<ComponentPlan> plans;
    std::uint64_t leaves = 0;
    for (auto& [root, vars] : components) {
      plans.push_back(plan_component(vars));
      leaves = sat_add(leaves, plans.back().leaves);
    }
    if (leaves > guard_) {
      throw GuardExceeded("solve_enumerative: " + (leaves == UINT64_MAX ? std::string("too many") : std::to_string(leaves)) +
                          " leaves exceed guard " + std::to_string(guard_));
    }

    EnumerationResult result;
    for (const auto& plan : plans) result.objective += solve_component(plan);
    result.values = values_;
    result.leaves = leaves_;
    return result;
  }

 private:
  struct ComponentPlan {
    std::vector<std::size_t> vars;
    std::vector<std::size_t> outer;  // integers with finite declared bounds
    std::vector<std::size_t> outer_rows;
    std::vector<Group> groups;
    std::uint64_t leaves = 0;
  };

  bool satisfied(const Row& row) const {
    Exact lhs = 0;
    for (const auto& t : row.terms) lhs += t.coef * values_[t.var];
    return row.sense == Sense::less_equal ? lhs <= row.rhs : lhs >= row.rhs;
  }

  // Declared bounds of an integer variable, rounded inward.
  Range declared(std::size_t v) const {
    const Variable& var = form_.variables[v];
    Range r{ceil_of(var.lower), 0};
    if (var.upper) r.hi = floor_of(*var.upper);
    return r;
  }

  std::optional<Exact> upper_of(std::size_t v) const {
    if (auto it = derived_upper_.find(v); it != derived_upper_.end()) return Exact(it->second);
    return form_.variables[v].upper;
  }

  // Smallest upper bound implied for an unbounded integer variable, if any.
  std::optional<mpz_class> implied_upper(std::size_t v) const {
    std::optional<mpz_class> best;
    auto offer = [&](const mpz_class& b) {
      if (!best || b < *best) best = b;
    };
    bool covering_only = cost_[v] >= 0;
    std::optional<mpz_class> covering;
    for (std::size_t r : var_rows_[v]) {
      const Row& row = form_.constraints[r];
      Exact a = 0;
      for (const auto& t : row.terms) {
        if (t.var == v) a += t.coef;
      }
      // a*v + rest <= rhs with a > 0, rest at its minimum.
      if (row.sense == Sense::less_equal && a > 0) {
        Exact rest_min = 0;
        bool finite = true;
        for (const auto& t : row.terms) {
          if (t.var == v) continue;
          if (t.coef > 0) {
            rest_min += t.coef * form_.variables[t.var].lower;
          } else if (auto ub = upper_of(t.var)) {
            rest_min += t.coef * *ub;
          } else {
            finite = false;
          }
        }
        if (finite) offer(floor_of(Exact((row.rhs - rest_min) / a)));
      }
      // Covering row: every coefficient and lower bound non-negative, so v
      // never needs to exceed what satisfies this row on its own.
      const bool covers = row.sense == Sense::greater_equal && a > 0 &&
                          std::all_of(row.terms.begin(), row.terms.end(), [&](const Term& t) {
                            return t.coef >= 0 && form_.variables[t.var].lower >= 0;
                          });
      if (covers) {
        mpz_class need = ceil_of(Exact(row.rhs / a));
        if (!covering || need > *covering) covering = need;
      } else if (!(row.sense == Sense::less_equal && a > 0)) {
        covering_only = false;
      }
    }
    if (covering_only && covering) offer(std::max(*covering, ceil_of(form_.variables[v].lower)));
    return best;
  }

  ComponentPlan plan_component(const std::vector<std::size_t>& vars) {
    ComponentPlan plan;
    plan.vars = vars;
    std::vector<std::size_t> inner;
    for (std::size_t v : vars) {
      const Variable& var = form_.variables[v];
      if (var.kind == VarKind::integer && var.upper) {
        plan.outer.push_back(v);
      } else {
        inner.push_back(v);
      }
    }

    // Derive ranges for unbounded integers; repeat while bounds keep appearing.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v : inner) {
        if (form_.variables[v].kind != VarKind::integer || derived_upper_.contains(v)) continue;
        if (auto ub = implied_upper(v)) {
          derived_upper_[v] = *ub;
          changed = true;
        }
      }
    }
    for (std::size_t v : inner) {
      if (form_.variables[v].kind == VarKind::integer && !derived_upper_.contains(v)) {
        throw ModelError("solve_enumerative: cannot bound integer variable '" + form_.variables[v].name + "'");
      }
    }

    // Groups: connected components of the inner variables once the outer
    // ones are fixed.
    std::unordered_map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < inner.size(); ++i) local[inner[i]] = i;
    DisjointSets sets(inner.size());
    std::vector<std::size_t> component_rows;
    for (std::size_t v : vars) {
      for (std::size_t r : var_rows_[v]) {
        if (form_.constraints[r].terms.front().var == v) component_rows.push_back(r);
      }
    }
    std::sort(component_rows.begin(), component_rows.end());
    component_rows.erase(std::unique(component_rows.begin(), component_rows.end()), component_rows.end());
    for (std::size_t r : component_rows) {
      std::optional<std::size_t> first;
      for (const auto& t : form_.constraints[r].terms) {
        auto it = local.find(t.var);
        if (it == local.end()) continue;
        if (first) sets.unite(*first, it->second);
        else first = it->second;
      }
    }
    std::map<std::size_t, std::size_t> group_of_root;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const std::size_t root = sets.find(i);
      auto [it, inserted] = group_of_root.emplace(root, plan.groups.size());
      if (inserted) plan.groups.emplace_back();
      Group& g = plan.groups[it->second];
      (form_.variables[inner[i]].kind == VarKind::integer ? g.integers : g.continuous).push_back(inner[i]);
    }
    for (std::size_t r : component_rows) {
      std::optional<std::size_t> group;
      for (const auto& t : form_.constraints[r].terms) {
        if (auto it = local.find(t.var); it != local.end()) {
          group = group_of_root.at(sets.find(it->second));
          break;
        }
      }
      if (group) plan.groups[*group].rows.push_back(r);
      else plan.outer_rows.push_back(r);
    }

    std::uint64_t outer_count = 1;
    for (std::size_t v : plan.outer) outer_count = sat_mul(outer_count, declared(v).size());
    std::uint64_t per_outer = plan.groups.empty() ? 1 : 0;
    for (const auto& g : plan.groups) {
      std::uint64_t count = 1;
      for (std::size_t v : g.integers) count = sat_mul(count, range_of(v).size());
      per_outer = sat_add(per_outer, count);
    }
    plan.leaves = sat_mul(outer_count, per_outer);
    return plan;
  }

  Range range_of(std::size_t v) const {
    Range r = declared(v);
    if (auto it = derived_upper_.find(v); it != derived_upper_.end()) r.hi = it->second;
    return r;
  }

  // Sets the group's continuous variables to their smallest feasible values.
  bool resolve_continuous(const Group& g) {
    for (std::size_t v : g.continuous) {
      const Variable& var = form_.variables[v];
      Exact lo = var.lower;
      std::optional<Exact> hi = var.upper;
      for (std::size_t r : var_rows_[v]) {
        const Row& row = form_.constraints[r];
        Exact a = 0;
        Exact rest = 0;
        for (const auto& t : row.terms) {
          if (t.var == v) a += t.coef;
          else rest += t.coef * values_[t.var];
        }
        if (a == 0) continue;
        const Exact bound = (row.rhs - rest) / a;
        const bool gives_lower = (row.sense == Sense::greater_equal) == (a > 0);
        if (gives_lower) lo = std::max(lo, bound);
        else if (!hi || bound < *hi) hi = bound;
      }
      if (hi && lo > *hi) return false;
      values_[v] = lo;
    }
    return true;
  }

  bool rows_hold(const std::vector<std::size_t>& rows) const {
    return std::all_of(rows.begin(), rows.end(), [&](std::size_t r) { return satisfied(form_.constraints[r]); });
  }

  // Odometer over `vars` in lexicographic order. Calls visit() per assignment.
  template <class Visit>
  void enumerate(const std::vector<std::size_t>& vars, const std::vector<Range>& ranges, Visit&& visit) {
    for (const auto& r : ranges) {
      if (r.hi < r.lo) return;
    }
    std::vector<mpz_class> cur;
    for (const auto& r : ranges) cur.push_back(r.lo);
    while (true) {
      for (std::size_t i = 0; i < vars.size(); ++i) values_[vars[i]] = Exact(cur[i]);
      visit();
      std::size_t i = vars.size();
      while (i > 0 && cur[i - 1] == ranges[i - 1].hi) {
        cur[i - 1] = ranges[i - 1].lo;
        --i;
      }
      if (i == 0) return;
      ++cur[i - 1];
    }
  }

  Exact cost_of(const std::vector<std::size_t>& vars) const {
    Exact c = 0;
    for (std::size_t v : vars) c += cost_[v] * values_[v];
    return c;
  }

  struct GroupBest {
    Exact cost;
    std::vector<Exact> values;  // integers then continuous
  };

  std::optional<GroupBest> solve_group(const Group& g) {
    std::vector<Range> ranges;
    for (std::size_t v : g.integers) ranges.push_back(range_of(v));
    std::vector<std::size_t> all = g.integers;
    all.insert(all.end(), g.continuous.begin(), g.continuous.end());
    std::optional<GroupBest> best;
    enumerate(g.integers, ranges, [&] {
      ++leaves_;
      if (!resolve_continuous(g) || !rows_hold(g.rows)) return;
      Exact c = cost_of(all);
      if (!best || c < best->cost) {
        GroupBest b{c, {}};
        for (std::size_t v : all) b.values.push_back(values_[v]);
        best = std::move(b);
      }
    });
    return best;
  }

  Exact solve_component(const ComponentPlan& plan) {
    std::vector<Range> ranges;
    for (std::size_t v : plan.outer) ranges.push_back(declared(v));
    std::optional<Exact> best;
    std::vector<Exact> best_values;
    enumerate(plan.outer, ranges, [&] {
      if (plan.groups.empty()) ++leaves_;
      if (!rows_hold(plan.outer_rows)) return;
      Exact total = cost_of(plan.outer);
      std::vector<GroupBest> picks;
      for (const auto& g : plan.groups) {
        auto gb = solve_group(g);
        if (!gb) return;
        total += gb->cost;
        picks.push_back(std::move(*gb));
      }
      if (best && !(total < *best)) return;
      best = total;
      for (std::size_t i = 0; i < plan.groups.size(); ++i) {
        const Group& g = plan.groups[i];
        std::size_t k = 0;
        for (std::size_t v : g.integers) values_[v] = picks[i].values[k++];
        for (std::size_t v : g.continuous) values_[v] = picks[i].values[k++];
      }
      best_values.clear();
      for (std::size_t v : plan.vars) best_values.push_back(values_[v]);
    });
    if (!best) throw ModelError("solve_enumerative: infeasible");
    for (std::size_t i = 0; i < plan.vars.size(); ++i) values_[plan.vars[i]] = best_values[i];
    return *best;
  }

  const ExtensiveForm& form_;
  std::uint64_t guard_;
  std::vector<Exact> cost_;
  std::vector<std::vector<std::size_t>> var_rows_;
  std::map<std::size_t, mpz_class> derived_upper_;
  std::vector<Exact> values_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

void check_form(const ExtensiveForm& form) {
  std::unordered_map<std::string, std::size_t> names;
  for (std::size_t i = 0; i < form.variables.size(); ++i) {
    if (!names.emplace(form.variables[i].name, i).second) {
      throw ModelError("duplicate variable name '" + form.variables[i].name + "'");
    }
  }
  if (form.objective.size() != form.variables.size()) throw ModelError("objective must list every variable once");
  for (std::size_t i = 0; i < form.objective.size(); ++i) {
    if (form.objective[i].var != i) throw ModelError("objective terms out of variable order");
  }
  for (const auto& row : form.constraints) {
    for (const auto& t : row.terms) {
      if (t.var >= form.variables.size()) throw ModelError("row '" + row.name + "' references a missing variable");
    }
  }
}

ExtensiveForm build_extensive_form(const Instance& instance) {
  ExtensiveForm form;
  std::vector<ScenarioSpace> spaces;
  for (const auto& c : instance.circuits) spaces.push_back(build_space(c));

  auto add_var = [&](std::string name, VarKind kind, std::optional<Exact> upper, Exact cost) {
    const std::size_t index = form.variables.size();
    form.variables.push_back({std::move(name), kind, Exact(0), std::move(upper)});
    form.objective.push_back({index, std::move(cost)});
    return index;
  };

  for (const auto& ref : triples(instance)) {
    const Machine& machine = instance.machines[ref.machine_position];
    if (machine.capacity_qubits < 0) throw ModelError("negative capacity on " + to_string(ref.key));
    const CostRates& rates = instance.rates_for(ref.key.circuit_id, ref.key.provider_id);
    const Exact exec = to_exact(instance.exec_time(ref.key));
    const ScenarioSpace& space = spaces[ref.circuit_index];
    const std::string tag = suffix(ref);

    const std::size_t xr = add_var("xr" + tag, VarKind::integer, Exact(machine.capacity_qubits),
                                   to_exact(rates.reserve_per_qubit));
    for (std::size_t s = 0; s < space.size(); ++s) {
      const Exact& p = space.probabilities[s];
      const Scenario& w = space.scenarios[s];
      const std::string st = tag + "_s" + std::to_string(s);
      const std::size_t xu = add_var("xu" + st, VarKind::integer, std::nullopt, p * to_exact(rates.utilize_per_qubit));
      const std::size_t xo = add_var("xo" + st, VarKind::integer, std::nullopt, p * to_exact(rates.on_demand_per_qubit));
      const std::size_t y = add_var("y" + st, VarKind::continuous, std::nullopt, p * to_exact(rates.penalty_per_second));
      form.constraints.push_back({"util" + st, {{xr, Exact(-1)}, {xu, Exact(1)}}, Sense::less_equal, Exact(0)});
      form.constraints.push_back(
          {"demand" + st, {{xu, Exact(1)}, {xo, Exact(1)}}, Sense::greater_equal, Exact(w.demand_qubits)});
      form.constraints.push_back({"wait" + st, {{y, Exact(-1)}}, Sense::less_equal, to_exact(w.wait_time) - exec});
    }
  }
  return form;
}

std::string format_lp_number(const Exact& value) {
  if (!is_terminating_decimal(value)) return format_fixed(value, kRoundedDigits);
  std::string s = format_exact_decimal(value, std::numeric_limits<int>::max());
  // Exactly kRoundedDigits fraction digits would read back as a rounded value.
  const auto point = s.find('.');
  if (point != std::string::npos && s.size() - point - 1 == static_cast<std::size_t>(kRoundedDigits)) s += '0';
  return s;
}

Exact parse_lp_number(std::string_view text) {
  const Exact d = parse_decimal(text);
  const auto point = text.find('.');
  const bool exponent = text.find_first_of("eE") != std::string_view::npos;
  const std::size_t fraction = point == std::string_view::npos || exponent ? 0 : text.size() - point - 1;
  if (fraction != static_cast<std::size_t>(kRoundedDigits)) return d;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, kRoundedDigits);
  const Exact half_unit(1, scale * 2);
  return simplest_in_interval(Exact(d - half_unit), Exact(d + half_unit));
}

std::size_t export_lp(const ExtensiveForm& form, std::ostream& out) {
  check_form(form);
  std::string text;
  text += "Minimize\n";
  std::string line = " obj:";
  for (std::size_t i = 0; i < form.objective.size(); ++i) {
    std::string term = term_text(form.objective[i], form.variables, i == 0);
    if (line.size() + 1 + term.size() > kObjectiveLineWidth && i > 0) {
      text += line + "\n";
      line = "     ";
    }
    line += " " + term;
  }
  text += line + "\n";

  text += "Subject To\n";
  for (const auto& row : form.constraints) {
    text += " " + sanitize(row.name) + ":";
    for (std::size_t i = 0; i < row.terms.size(); ++i) text += " " + term_text(row.terms[i], form.variables, i == 0);
    if (row.terms.empty()) text += " 0 " + sanitize(form.variables.front().name);
    text += row.sense == Sense::less_equal ? " <= " : " >= ";
    text += format_lp_number(row.rhs) + "\n";
  }

  text += "Bounds\n";
  for (const auto& v : form.variables) {
    if (v.upper) {
      text += " " + format_lp_number(v.lower) + " <= " + sanitize(v.name) + " <= " + format_lp_number(*v.upper) + "\n";
    } else if (v.lower != 0) {
      text += " " + sanitize(v.name) + " >= " + format_lp_number(v.lower) + "\n";
    }
  }

  text += "Generals\n";
  for (const auto& v : form.variables) {
    if (v.kind == VarKind::integer) text += " " + sanitize(v.name) + "\n";
  }
  text += "End\n";
  out << text;
  if (!out) throw Error("export_lp: write failed");
  return text.size();
}

std::string to_lp(const ExtensiveForm& form) {
  std::ostringstream out;
  export_lp(form, out);
  return out.str();
}

ExtensiveForm parse_lp(std::string_view source) {
  enum class Section { none, objective, constraints, bounds, generals, end };
  ExtensiveForm form;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Exact> costs;

  auto var_of = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, form.variables.size());
    if (inserted) {
      form.variables.push_back({name, VarKind::continuous, Exact(0), std::nullopt});
      costs.emplace_back(0);
    }
    return it->second;
  };

  // Parses "[+|-] [coef] name ..." into terms.
  auto parse_terms = [&](const std::vector<std::string>& toks, std::size_t begin, std::size_t end, int line_no) {
    std::vector<Term> terms;
    Exact sign = 1;
    std::optional<Exact> coef;
    for (std::size_t i = begin; i < end; ++i) {
      const std::string& tok = toks[i];
      if (tok == "+" || tok == "-") {
        if (coef) throw ParseError("operator after a coefficient", line_no);
        sign = tok == "-" ? Exact(-sign) : sign;
      } else if (looks_numeric(tok)) {
        if (coef) throw ParseError("two coefficients in a row", line_no);
        try {
          coef = parse_lp_number(tok);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line_no);
        }
      } else {
        terms.push_back({var_of(tok), Exact(sign * coef.value_or(Exact(1)))});
        sign = 1;
        coef.reset();
      }
    }
    if (coef || sign != 1) throw ParseError("dangling coefficient or operator", line_no);
    return terms;
  };

  Section section = Section::none;
  std::istringstream in{std::string(source)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto c = raw.find('\\'); c != std::string::npos) raw.erase(c);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto toks = tokens_of(raw);
    if (toks.empty()) continue;

    std::string joined;
    for (const auto& t : toks) joined += (joined.empty() ? "" : " ") + lower(t);
    if (joined == "minimize" || joined == "minimise" || joined == "min") {
      section = Section::objective;
      continue;
    }
    if (joined == "subject to" || joined == "st" || joined == "s.t.") {
      section = Section::constraints;
      continue;
    }
    if (joined == "bounds") {
      section = Section::bounds;
      continue;
    }
    if (joined == "generals" || joined == "general" || joined == "gen") {
      section = Section::generals;
      continue;
    }
    if (joined == "end") {
      section = Section::end;
      continue;
    }

    switch (section) {
      case Section::none:
        throw ParseError("text before 'Minimize'", line_no);
      case Section::end:
        throw ParseError("text after 'End'", line_no);
      case Section::objective: {
        std::size_t begin = 0;
        if (toks[0].back() == ':') begin = 1;
        for (const auto& t : parse_terms(toks, begin, toks.size(), line_no)) costs[t.var] += t.coef;
        break;
      }
      case Section::constraints: {
        std::string name;
        std::size_t begin = 0;
        if (toks[0].back() == ':') {
          name = toks[0].substr(0, toks[0].size() - 1);
          begin = 1;
        } else if (toks.size() > 1 && toks[1] == ":") {
          name = toks[0];
          begin = 2;
        }
        if (toks.size() < begin + 3) throw ParseError("incomplete constraint", line_no);
        const std::string& op = toks[toks.size() - 2];
        Row row;
        row.name = name.empty() ? "r" + std::to_string(form.constraints.size()) : name;
        if (op == "<=" || op == "=<" || op == "<") row.sense = Sense::less_equal;
        else if (op == ">=" || op == "=>" || op == ">") row.sense = Sense::greater_equal;
        else throw ParseError("expected '<=' or '>=' before the right-hand side", line_no);
        try {
          row.rhs = parse_lp_number(toks.back());
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line_no);
        }
        row.terms = parse_terms(toks, begin, toks.size() - 2, line_no);
        form.constraints.push_back(std::move(row));
        break;
      }
      case Section::bounds: {
        auto number = [&](const std::string& t) -> std::optional<Exact> {
          const std::string l = lower(t);
          if (l == "+inf" || l == "inf" || l == "+infinity" || l == "infinity") return std::nullopt;
          try {
            return parse_lp_number(t);
          } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_no);
          }
        };
        if (toks.size() == 5 && toks[1] == "<=" && toks[3] == "<=") {
          Variable& v = form.variables[var_of(toks[2])];
          auto lo = number(toks[0]);
          if (!lo) throw ParseError("infinite lower bound is not supported", line_no);
          v.lower = *lo;
          v.upper = number(toks[4]);
        } else if (toks.size() == 3 && toks[1] == "<=" && !looks_numeric(toks[0])) {
          form.variables[var_of(toks[0])].upper = number(toks[2]);
        } else if (toks.size() == 3 && toks[1] == ">=" && !looks_numeric(toks[0])) {
          auto lo = number(toks[2]);
          if (!lo) throw ParseError("infinite lower bound is not supported", line_no);
          form.variables[var_of(toks[0])].lower = *lo;
        } else {
          throw ParseError("unsupported bound '" + raw + "'", line_no);
        }
        break;
      }
      case Section::generals:
        for (const auto& t : toks) form.variables[var_of(t)].kind = VarKind::integer;
        break;
    }
  }
  if (section != Section::end) throw ParseError("missing 'End'", line_no);
  for (std::size_t i = 0; i < form.variables.size(); ++i) form.objective.push_back({i, costs[i]});
  return form;
}

EnumerationResult solve_enumerative(const ExtensiveForm& form, std::uint64_t guard) {
  check_form(form);
  return Enumerator(form, guard).run();
}

}  // namespace qres
