#pragma once

// Exact solution of the two-stage model. No constraint couples distinct
// (circuit, provider, machine) triples, so each triple is solved on its own as
// a newsvendor problem. Brute-force oracles check both the per-triple solver
// and the separability argument.

#include <cstdint>
#include <map>
#include <vector>

#include "qres/instance.hpp"
#include "qres/recourse.hpp"
#include "qres/scenario.hpp"
#include "qres/units.hpp"

namespace qres {

using ReservationPlan = std::map<TripleKey, std::int64_t>;

/// Expected cost of one triple, in dollars.
struct TripleCost {
  TripleKey key;
  std::int64_t reserved = 0;
  Exact first_stage;
  Exact utilization;
  Exact on_demand;
  Exact penalty;

  Exact second_stage() const { return utilization + on_demand; }
  Exact total() const { return first_stage + utilization + on_demand + penalty; }

  friend bool operator==(const TripleCost&, const TripleCost&) = default;
};

struct Solution {
  std::vector<TripleCost> triples;  // instance order
  Exact expected_first_stage;
  Exact expected_utilization;
  Exact expected_on_demand;
  Exact expected_second_stage;  // utilization + on-demand, penalty excluded
  Exact expected_penalty;
  Exact expected_total;
  // Filled only on request: [triple][scenario index].
  std::vector<std::vector<RecourseDecision>> per_scenario;

  std::int64_t reservation(const TripleKey& key) const;
  ReservationPlan plan() const;
};

/// Evaluates a reservation plan exactly. The plan must name every triple of
/// the instance and nothing else; reservations outside [0, capacity] throw
/// ModelError.
Solution expected_cost(const Instance& instance, const ReservationPlan& plan, bool keep_scenarios = false);

/// The same reservation level on every triple.
ReservationPlan uniform_plan(const Instance& instance, std::int64_t reserved);

/// One triple's data, reduced to its demand and wait marginals.
struct TripleProblem {
  CostRates rates;
  DemandMarginal demand;
  WaitMarginal wait;
  Duration exec_time;
  std::int64_t capacity = 0;
};

TripleProblem triple_problem(const Instance& instance, const TripleRef& triple);

struct TripleOptimum {
  std::int64_t reserved = 0;
  Exact expected_cost;  // dollars, penalty included

  friend bool operator==(const TripleOptimum&, const TripleOptimum&) = default;
};

/// Closed-form expected cost of reserving `reserved` qubits on one triple.
Exact expected_triple_cost(const TripleProblem& problem, std::int64_t reserved);

/// Marginal analysis. The x-th reserved qubit saves (O - U) * Pr(demand >= x)
/// and costs R; the optimum is the largest x whose saving strictly exceeds its
/// cost, clamped to capacity. Zero-benefit ties go to the smaller x.
TripleOptimum solve_triple(const TripleProblem& problem);

/// Scans every x in [0, capacity] and evaluates the expectation over the full
/// product space with optimal_recourse. Smallest x wins ties.
TripleOptimum brute_force_triple(const TripleProblem& problem, std::int64_t capacity_guard = 10'000);

/// Solves every triple independently and assembles the result with
/// expected_cost.
Solution solve_instance(const Instance& instance);

/// Enumerates every joint reservation vector (lexicographic order, first
/// minimum wins). Throws GuardExceeded when prod(capacity + 1) > guard.
Solution joint_enumeration_oracle(const Instance& instance, std::int64_t guard = 1'000'000);

}  // namespace qres
