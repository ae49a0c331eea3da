#pragma once

// Finite scenario spaces: the Cartesian product of a circuit's demand set and
// waiting-time set, with product (or explicitly joint) probabilities.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qres/instance.hpp"
#include "qres/units.hpp"

namespace qres {

struct Scenario {
  std::int64_t demand_qubits = 0;
  Duration wait_time;
  std::size_t index = 0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// One circuit's scenarios in demand-major lexicographic order.
struct ScenarioSpace {
  std::string circuit_id;
  std::vector<std::int64_t> demand_values;
  std::vector<Duration> wait_values;
  std::vector<Scenario> scenarios;
  std::vector<Exact> probabilities;

  std::size_t size() const { return scenarios.size(); }

  friend bool operator==(const ScenarioSpace&, const ScenarioSpace&) = default;
};

template <class T>
struct Marginal {
  std::vector<T> values;
  std::vector<Exact> probs;
};
using DemandMarginal = Marginal<std::int64_t>;
using WaitMarginal = Marginal<Duration>;

/// Product space with P(beta, alpha) = P(beta) * P(alpha). Empty probability
/// spans mean uniform. Throws ModelError on empty sets, length mismatch or
/// probabilities that are negative or do not sum to 1 within 1e-9.
ScenarioSpace build_space(std::string circuit_id, std::span<const std::int64_t> demand_set,
                          std::span<const Duration> wait_set, std::span<const Exact> demand_probs = {},
                          std::span<const Exact> wait_probs = {});

/// Space with an explicit joint probability table (demand-major).
ScenarioSpace build_space_joint(std::string circuit_id, std::span<const std::int64_t> demand_set,
                                std::span<const Duration> wait_set, std::span<const Exact> joint_probs);

/// The circuit's space, honoring its joint table when present.
ScenarioSpace build_space(const Circuit& circuit);

DemandMarginal demand_marginal(const ScenarioSpace& space);
WaitMarginal wait_marginal(const ScenarioSpace& space);

/// Sum over scenarios, in index order, of P(w) * f(w).
template <class F>
Exact expectation(const ScenarioSpace& space, F&& f) {
  Exact total = 0;
  for (std::size_t i = 0; i < space.scenarios.size(); ++i) {
    total += space.probabilities[i] * Exact(f(space.scenarios[i]));
  }
  return total;
}

}  // namespace qres
