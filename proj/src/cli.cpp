#include "qres/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qres/errors.hpp"
#include "qres/extensive_form.hpp"
#include "qres/instance.hpp"
#include "qres/io.hpp"
#include "qres/random_instance.hpp"
#include "qres/solver.hpp"
#include "qres/sweep.hpp"

namespace qres::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string instance_path;
  std::string output_path;
  std::string grid;
  std::string waits;
  std::string reservations_path;
  bool oracle = false;
  bool human = false;
  bool verbose = false;
  std::uint64_t seed = 20220712;
  int fuzz = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError(what + ": '" + s + "' is not an integer");
  return v;
}

Duration parse_seconds(const std::string& s, const std::string& what) {
  Exact q;
  try {
    q = parse_decimal(s) * kMicrosPerUnit;
  } catch (const std::invalid_argument&) {
    throw UsageError(what + ": '" + s + "' is not a number");
  }
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw UsageError(what + ": '" + s + "' is finer than 1 us");
  return Duration{q.get_num().get_si()};
}

std::vector<std::int64_t> parse_int_grid(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) throw UsageError("--grid expects lo:hi[:step]");
  const std::int64_t lo = parse_int(parts[0], "--grid lo");
  const std::int64_t hi = parse_int(parts[1], "--grid hi");
  const std::int64_t step = parts.size() == 3 ? parse_int(parts[2], "--grid step") : 1;
  if (step <= 0) throw UsageError("--grid step must be positive");
  if (hi < lo) throw UsageError("--grid hi < lo");
  std::vector<std::int64_t> out;
  for (std::int64_t x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

// Default step: the smallest gap between consecutive wait-set values.
std::optional<Duration> smallest_wait_gap(const Instance& inst) {
  std::optional<Duration> gap;
  for (const auto& c : inst.circuits) {
    for (std::size_t i = 1; i < c.wait_set.size(); ++i) {
      Duration d = c.wait_set[i] - c.wait_set[i - 1];
      if (!gap || d < *gap) gap = d;
    }
  }
  return gap;
}

std::vector<Duration> parse_wait_grid(const std::string& text, const Instance& inst) {
  auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) throw UsageError("--waits expects lo:hi[:step]");
  const Duration lo = parse_seconds(parts[0], "--waits lo");
  const Duration hi = parse_seconds(parts[1], "--waits hi");
  Duration step;
  if (parts.size() == 3) {
    step = parse_seconds(parts[2], "--waits step");
  } else if (auto gap = smallest_wait_gap(inst)) {
    step = *gap;
  } else {
    throw UsageError("--waits needs an explicit step: every wait set is a singleton");
  }
  if (step.micros <= 0) throw UsageError("--waits step must be positive");
  if (hi < lo) throw UsageError("--waits hi < lo");
  std::vector<Duration> out;
  for (Duration w = lo; w <= hi; w = w + step) out.push_back(w);
  return out;
}

ReservationPlan load_reservations(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header = false;
  ReservationPlan plan;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (!header) {
      header = true;
      if (cells == std::vector<std::string>{"circuit_id", "provider_id", "machine_id", "reserved"}) continue;
      throw ParseError("expected header 'circuit_id,provider_id,machine_id,reserved'", line_no);
    }
    if (cells.size() != 4) throw ParseError("malformed row '" + line + "'", line_no);
    std::int64_t x = 0;
    try {
      x = parse_int(cells[3], "reserved");
    } catch (const UsageError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!plan.emplace(TripleKey{cells[0], cells[1], cells[2]}, x).second) {
      throw ParseError("duplicate triple", line_no);
    }
  }
  return plan;
}

std::string solution_csv(const Solution& s) {
  std::ostringstream o;
  o << "circuit_id,provider_id,machine_id,reserved,first_stage,second_stage,penalty,total\n";
  std::int64_t reserved = 0;
  for (const auto& t : s.triples) {
    reserved += t.reserved;
    o << t.key.circuit_id << ',' << t.key.provider_id << ',' << t.key.machine_id << ',' << t.reserved << ','
      << format_fixed(t.first_stage) << ',' << format_fixed(t.second_stage()) << ',' << format_fixed(t.penalty) << ','
      << format_fixed(t.total()) << '\n';
  }
  o << "TOTAL,,," << reserved << ',' << format_fixed(s.expected_first_stage) << ','
    << format_fixed(s.expected_second_stage) << ',' << format_fixed(s.expected_penalty) << ','
    << format_fixed(s.expected_total) << '\n';
  return o.str();
}

std::string solution_table(const Solution& s) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"circuit", "provider", "machine", "reserved", "first_stage", "second_stage", "penalty", "total"});
  std::int64_t reserved = 0;
  for (const auto& t : s.triples) {
    reserved += t.reserved;
    rows.push_back({t.key.circuit_id, t.key.provider_id, t.key.machine_id, std::to_string(t.reserved),
                    format_fixed(t.first_stage), format_fixed(t.second_stage()), format_fixed(t.penalty),
                    format_fixed(t.total())});
  }
  rows.push_back({"TOTAL", "", "", std::to_string(reserved), format_fixed(s.expected_first_stage),
                  format_fixed(s.expected_second_stage), format_fixed(s.expected_penalty),
                  format_fixed(s.expected_total)});
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream o;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      // Text columns left-aligned, numbers right-aligned.
      if (i < 3) o << std::left;
      else o << std::right;
      o << std::setw(static_cast<int>(width[i])) << r[i] << (i + 1 < r.size() ? "  " : "");
    }
    o << '\n';
  }
  return o.str();
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    out << text;
  } else {
    write_file_atomic(cfg.output_path, text);
  }
}

// Re-derives every triple's optimum by brute force and, when small enough,
// the whole plan by joint enumeration. Returns false on any mismatch.
bool verify_with_oracles(const Instance& inst, const Solution& sol, const Config& cfg, std::ostream& err) {
  bool ok = true;
  Exact brute_total = 0;
  const auto refs = triples(inst);
  for (const auto& ref : refs) {
    const TripleProblem problem = triple_problem(inst, ref);
    const TripleOptimum fast = solve_triple(problem);
    const TripleOptimum brute = brute_force_triple(problem);
    brute_total += brute.expected_cost;
    if (!(fast == brute) || sol.reservation(ref.key) != brute.reserved) {
      err << "oracle mismatch on " << to_string(ref.key) << ": solver " << fast.reserved << " ("
          << format_fixed(fast.expected_cost) << "), brute force " << brute.reserved << " ("
          << format_fixed(brute.expected_cost) << ")\n";
      ok = false;
    }
  }
  if (brute_total != sol.expected_total) {
    err << "oracle mismatch: brute-force total " << format_fixed(brute_total) << " vs "
        << format_fixed(sol.expected_total) << '\n';
    ok = false;
  }

  std::int64_t joint = 1;
  for (const auto& ref : refs) {
    joint *= inst.machines[ref.machine_position].capacity_qubits + 1;
    if (joint > 100'000) break;
  }
  if (joint <= 100'000) {
    const Solution j = joint_enumeration_oracle(inst);
    if (j.plan() != sol.plan() || j.expected_total != sol.expected_total) {
      err << "oracle mismatch: joint enumeration disagrees with the separable solution\n";
      ok = false;
    }
  }

  std::mt19937_64 rng(cfg.seed);
  RandomShape shape;
  shape.max_capacity = 40;
  shape.max_demand = 30;
  shape.max_demand_values = 8;
  shape.max_wait_values = 4;
  for (int i = 0; i < cfg.fuzz; ++i) {
    const TripleProblem p = random_triple(rng, shape);
    if (!(solve_triple(p) == brute_force_triple(p))) {
      err << "fuzz mismatch at draw " << i << " (seed " << cfg.seed << ")\n";
      ok = false;
    }
  }
  if (cfg.verbose) {
    err << "oracle: " << refs.size() << " triples checked by brute force"
        << (joint <= 100'000 ? ", joint enumeration checked" : ", joint enumeration skipped (too large)") << ", "
        << cfg.fuzz << " fuzz draws\n";
  }
  return ok;
}

int dispatch(const std::string& command, const Config& cfg, std::ostream& out, std::ostream& err) {
  if (command == "validate") {
    const std::filesystem::path path(cfg.instance_path);
    const Instance inst = parse_instance(read_file(path), path.parent_path());
    const auto diagnostics = validate(inst);
    std::ostringstream text;
    for (const auto& d : diagnostics) text << to_string(d) << '\n';
    if (diagnostics.empty()) text << "ok\n";
    emit(cfg, out, text.str());
    return has_errors(diagnostics) ? kExitModelError : kExitOk;
  }

  const Instance inst = load_instance_file(cfg.instance_path);
  if (command == "solve") {
    const auto start = std::chrono::steady_clock::now();
    const Solution sol = solve_instance(inst);
    if (cfg.oracle && !verify_with_oracles(inst, sol, cfg, err)) return kExitModelError;
    emit(cfg, out, cfg.human ? solution_table(sol) : solution_csv(sol));
    if (cfg.verbose) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      err << "solved " << sol.triples.size() << " triples in " << ms.count() << " ms\n";
    }
    return kExitOk;
  }
  if (command == "eval") {
    const Solution sol = expected_cost(inst, load_reservations(cfg.reservations_path));
    emit(cfg, out, cfg.human ? solution_table(sol) : solution_csv(sol));
    return kExitOk;
  }
  if (command == "sweep") {
    const auto grid = parse_int_grid(cfg.grid);
    std::ostringstream text;
    emit_csv(sweep_reservation(inst, grid), text);
    emit(cfg, out, text.str());
    return kExitOk;
  }
  if (command == "surface") {
    const auto grid = parse_int_grid(cfg.grid);
    const auto waits = parse_wait_grid(cfg.waits, inst);
    std::ostringstream text;
    emit_csv(sweep_reservation_waiting(inst, grid, waits), text);
    emit(cfg, out, text.str());
    return kExitOk;
  }
  if (command == "export-lp") {
    emit(cfg, out, to_lp(build_extensive_form(inst)));
    return kExitOk;
  }
  throw UsageError("unknown subcommand '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-stage stochastic qubit reservation: validate, solve, sweep and export instances", "qres"};
  app.require_subcommand(1);
  Config cfg;
  app.add_flag("-v,--verbose", cfg.verbose, "Print progress and timing to standard error");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", cfg.instance_path, "Instance JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", cfg.output_path, "Output file (default: standard output)");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance and print diagnostics (exit 1 on errors)");
  add_common(validate_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Optimal reservations per triple with the expected cost breakdown");
  add_common(solve_cmd);
  solve_cmd->add_flag("--oracle", cfg.oracle, "Re-verify the optimum by brute force (exit 1 on mismatch)");
  solve_cmd->add_flag("--human", cfg.human, "Aligned table instead of CSV");
  solve_cmd->add_option("--fuzz", cfg.fuzz, "With --oracle: extra randomized triple checks")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--seed", cfg.seed, "Seed for --fuzz draws");

  auto* sweep_cmd = app.add_subcommand("sweep", "Expected cost vs. a uniform reservation level (CSV)");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--grid", cfg.grid, "Reservation levels lo:hi[:step], inclusive, step 1 by default")
      ->required();

  auto* surface_cmd = app.add_subcommand("surface", "Expected cost vs. reservation level and arranged wait (CSV)");
  add_common(surface_cmd);
  surface_cmd->add_option("--grid", cfg.grid, "Reservation levels lo:hi[:step], inclusive")->required();
  surface_cmd->add_option("--waits", cfg.waits,
                          "Arranged waits in seconds lo:hi[:step], inclusive; step defaults to the smallest wait-set gap")
      ->required();

  auto* export_cmd = app.add_subcommand("export-lp", "Write the deterministic-equivalent MILP in CPLEX LP format");
  add_common(export_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Expected cost of a given reservation plan");
  add_common(eval_cmd);
  eval_cmd->add_option("--reservations", cfg.reservations_path,
                       "CSV with header circuit_id,provider_id,machine_id,reserved")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_flag("--human", cfg.human, "Aligned table instead of CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitModelError;
  }
}

}  // namespace qres::cli
