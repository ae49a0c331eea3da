#pragma once

// Second-stage recourse in closed form for one triple and one scenario.

#include <cstdint>

#include "qres/instance.hpp"
#include "qres/scenario.hpp"
#include "qres/units.hpp"

namespace qres {

struct RecourseDecision {
  std::int64_t utilized = 0;   // x^u <= reserved
  std::int64_t on_demand = 0;  // x^u + x^o >= demand
  Duration over_wait;          // exec_time <= wait + over_wait
  Money utilization_cost;      // utilized * U
  Money on_demand_cost;        // on_demand * O
  Exact penalty_cost;          // over_wait * P, dollars
  Exact cost;                  // sum of the three, dollars

  friend bool operator==(const RecourseDecision&, const RecourseDecision&) = default;
};

/// max(0, exec_time - wait_time).
constexpr Duration penalty_time(Duration exec_time, Duration wait_time) {
  return exec_time > wait_time ? exec_time - wait_time : Duration{};
}

/// Cheapest (x^u, x^o, y) for the given reservation and scenario. Utilization
/// is preferred when U <= O; y is always its smallest feasible value.
RecourseDecision optimal_recourse(std::int64_t reserved, const Scenario& scenario, const CostRates& rates,
                                  Duration exec_time);

}  // namespace qres
