#pragma once

// Seeded generators for randomized property checks.

#include <cstdint>
#include <random>

#include "qres/instance.hpp"
#include "qres/solver.hpp"

namespace qres {

struct RandomShape {
  int max_circuits = 1;
  int max_providers = 2;
  int max_machines_per_provider = 1;
  int max_triples = 2;
  std::int64_t max_capacity = 8;
  int max_demand_values = 4;
  std::int64_t max_demand = 8;
  int max_wait_values = 3;
  std::int64_t max_rate_micros = 10'000'000;  // $10
  bool random_probabilities = true;
};

/// Random rates, rounded to micro-dollars. Half of the draws are reordered
/// so that utilization and reservation undercut on-demand.
CostRates random_rates(std::mt19937_64& rng, std::int64_t max_micros);

/// Random valid instance within `shape`.
Instance random_instance(std::mt19937_64& rng, const RandomShape& shape = {});

/// Random single-triple problem: |B| <= max_demand_values, |E| <= max_wait_values.
TripleProblem random_triple(std::mt19937_64& rng, const RandomShape& shape);

}  // namespace qres
