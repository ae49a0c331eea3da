#include "qres/recourse.hpp"

#include <algorithm>

#include "qres/errors.hpp"

namespace qres {

RecourseDecision optimal_recourse(std::int64_t reserved, const Scenario& scenario, const CostRates& rates,
                                  Duration exec_time) {
  if (reserved < 0) throw ModelError("negative reservation");
  if (scenario.demand_qubits < 0) throw ModelError("negative demand");

  RecourseDecision d;
  const std::int64_t beta = scenario.demand_qubits;
  if (rates.utilize_per_qubit <= rates.on_demand_per_qubit) {
    d.utilized = std::min(reserved, beta);
    d.on_demand = beta - d.utilized;
  } else {
    d.utilized = 0;
    d.on_demand = beta;
  }
  d.over_wait = penalty_time(exec_time, scenario.wait_time);
  d.utilization_cost = rates.utilize_per_qubit * d.utilized;
  d.on_demand_cost = rates.on_demand_per_qubit * d.on_demand;
  d.penalty_cost = time_cost(d.over_wait, rates.penalty_per_second);
  d.cost = to_exact(d.utilization_cost + d.on_demand_cost) + d.penalty_cost;
  return d;
}

}  // namespace qres
