#pragma once

// Static problem data: circuits, providers, machines, prices, capacities,
// execution times and the per-circuit uncertainty sets.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qres/units.hpp"

namespace qres {

inline constexpr std::int64_t kDefaultCapacity = 30;

struct CostRates {
  Money reserve_per_qubit;
  Money utilize_per_qubit;
  Money on_demand_per_qubit;
  Money penalty_per_second;

  friend bool operator==(const CostRates&, const CostRates&) = default;
};

struct Machine {
  std::string provider_id;
  std::string machine_id;
  std::int64_t capacity_qubits = kDefaultCapacity;

  friend bool operator==(const Machine&, const Machine&) = default;
};

/// A (circuit, provider, machine) combination; each one is an independent
/// subproblem of the model.
struct TripleKey {
  std::string circuit_id;
  std::string provider_id;
  std::string machine_id;

  friend auto operator<=>(const TripleKey&, const TripleKey&) = default;
  friend bool operator==(const TripleKey&, const TripleKey&) = default;
};

std::string to_string(const TripleKey& key);

struct ExecTimeTable {
  std::map<TripleKey, Duration> entries;

  friend bool operator==(const ExecTimeTable&, const ExecTimeTable&) = default;
};

struct Circuit {
  std::string id;
  std::optional<std::string> label;
  std::optional<int> num_qubits;
  std::optional<std::uint64_t> encoded_value;

  std::vector<std::int64_t> demand_set;  // B_c, strictly increasing
  std::vector<Duration> wait_set;        // E_c, strictly increasing
  // Empty means uniform.
  std::vector<Exact> demand_probs;
  std::vector<Exact> wait_probs;
  // Optional joint table over demand x wait, demand-major. Overrides the
  // marginals when present.
  std::vector<Exact> joint_probs;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Instance {
  std::vector<Circuit> circuits;
  std::vector<std::string> providers;
  std::vector<Machine> machines;
  std::map<std::pair<std::string, std::string>, CostRates> rates;  // (circuit, provider)
  ExecTimeTable exec_times;

  friend bool operator==(const Instance&, const Instance&) = default;

  const Circuit& circuit(std::string_view id) const;
  const Machine& machine(std::string_view provider_id, std::string_view machine_id) const;
  const CostRates& rates_for(std::string_view circuit_id, std::string_view provider_id) const;
  Duration exec_time(const TripleKey& key) const;
};

/// A triple with its zero-based positions in the instance. `machine_index` is
/// the position within the provider's own machine list.
struct TripleRef {
  TripleKey key;
  std::size_t circuit_index = 0;
  std::size_t provider_index = 0;
  std::size_t machine_index = 0;
  std::size_t machine_position = 0;  // index into Instance::machines
};

/// All triples in instance order: circuits, then providers, then machines.
std::vector<TripleRef> triples(const Instance& instance);

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity;
  std::string location;
  std::string message;
};

std::string to_string(const Diagnostic& d);

/// Parses the JSON instance document without semantic checks. Relative
/// `exec_times_csv` paths resolve against `base_dir`.
Instance parse_instance(std::string_view json_text, const std::filesystem::path& base_dir = {});

/// parse_instance followed by validate; throws ModelError listing every error
/// diagnostic. Warnings are dropped.
Instance load_instance(std::string_view json_text, const std::filesystem::path& base_dir = {});
Instance load_instance_file(const std::filesystem::path& path);

/// Empty iff every instance invariant holds. Pricing sanity issues are
/// warnings.
std::vector<Diagnostic> validate(const Instance& instance);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Writes the instance in the canonical form of the schema: explicit lists,
/// explicit per-pair rates, inline execution times.
std::string serialize(const Instance& instance);

/// Reads `circuit_id,provider_id,machine_id,seconds` rows.
ExecTimeTable load_exec_times(std::string_view csv);

/// Monotone execution-time surrogate: base + slope * num_qubits * popcount(v).
Duration synth_exec_time(int num_qubits, std::uint64_t encoded_value, Duration base, Duration slope);

/// The three-provider, two-machine reference configuration with one QFT
/// circuit (capacity 30, R=1.68, U=0.1, O=7, P=10, demand 10..22, wait
/// 0.001..0.009 s). Execution times are synthetic.
Instance reference_instance();

}  // namespace qres
