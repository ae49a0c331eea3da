#include "qres/solver.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "qres/errors.hpp"
#include "qres/parallel.hpp"

namespace qres {

namespace {

void check_problem(const TripleProblem& p) {
  if (p.demand.values.empty() || p.demand.values.size() != p.demand.probs.size()) {
    throw ModelError("triple problem: demand marginal is empty or mismatched");
  }
  if (p.wait.values.empty() || p.wait.values.size() != p.wait.probs.size()) {
    throw ModelError("triple problem: wait marginal is empty or mismatched");
  }
  if (p.capacity < 0) throw ModelError("triple problem: negative capacity");
}

}  // namespace

std::int64_t Solution::reservation(const TripleKey& key) const {
  for (const auto& t : triples) {
    if (t.key == key) return t.reserved;
  }
  throw ModelError("no reservation for " + to_string(key));
}

ReservationPlan Solution::plan() const {
  ReservationPlan plan;
  for (const auto& t : triples) plan[t.key] = t.reserved;
  return plan;
}

Solution expected_cost(const Instance& instance, const ReservationPlan& plan, bool keep_scenarios) {
  const auto refs = triples(instance);
  if (plan.size() != refs.size()) {
    for (const auto& [key, x] : plan) {
      if (std::none_of(refs.begin(), refs.end(), [&](const TripleRef& r) { return r.key == key; })) {
        throw ModelError("reservation for unknown triple " + to_string(key));
      }
    }
  }

  std::vector<ScenarioSpace> spaces;
  spaces.reserve(instance.circuits.size());
  for (const auto& c : instance.circuits) spaces.push_back(build_space(c));

  Solution sol;
  for (const auto& ref : refs) {
    auto it = plan.find(ref.key);
    if (it == plan.end()) throw ModelError("no reservation for " + to_string(ref.key));
    const std::int64_t x = it->second;
    const Machine& machine = instance.machines[ref.machine_position];
    if (x < 0 || x > machine.capacity_qubits) {
      throw ModelError("reservation " + std::to_string(x) + " for " + to_string(ref.key) + " outside [0, " +
                       std::to_string(machine.capacity_qubits) + "]");
    }
    const CostRates& rates = instance.rates_for(ref.key.circuit_id, ref.key.provider_id);
    const Duration exec = instance.exec_time(ref.key);
    const ScenarioSpace& space = spaces[ref.circuit_index];

    TripleCost tc;
    tc.key = ref.key;
    tc.reserved = x;
    tc.first_stage = to_exact(rates.reserve_per_qubit * x);
    std::vector<RecourseDecision> decisions;
    for (std::size_t s = 0; s < space.size(); ++s) {
      RecourseDecision d = optimal_recourse(x, space.scenarios[s], rates, exec);
      const Exact& p = space.probabilities[s];
      tc.utilization += p * to_exact(d.utilization_cost);
      tc.on_demand += p * to_exact(d.on_demand_cost);
      tc.penalty += p * d.penalty_cost;
      if (keep_scenarios) decisions.push_back(std::move(d));
    }
    sol.expected_first_stage += tc.first_stage;
    sol.expected_utilization += tc.utilization;
    sol.expected_on_demand += tc.on_demand;
    sol.expected_penalty += tc.penalty;
    sol.triples.push_back(std::move(tc));
    if (keep_scenarios) sol.per_scenario.push_back(std::move(decisions));
  }
  sol.expected_second_stage = sol.expected_utilization + sol.expected_on_demand;
  sol.expected_total = sol.expected_first_stage + sol.expected_second_stage + sol.expected_penalty;
  return sol;
}

ReservationPlan uniform_plan(const Instance& instance, std::int64_t reserved) {
  ReservationPlan plan;
  for (const auto& ref : triples(instance)) plan[ref.key] = reserved;
  return plan;
}

TripleProblem triple_problem(const Instance& instance, const TripleRef& triple) {
  const ScenarioSpace space = build_space(instance.circuits[triple.circuit_index]);
  return TripleProblem{instance.rates_for(triple.key.circuit_id, triple.key.provider_id), demand_marginal(space),
                       wait_marginal(space), instance.exec_time(triple.key),
                       instance.machines[triple.machine_position].capacity_qubits};
}

Exact expected_triple_cost(const TripleProblem& p, std::int64_t reserved) {
  check_problem(p);
  const CostRates& r = p.rates;
  const bool use_reservation = r.utilize_per_qubit <= r.on_demand_per_qubit;
  Exact qubits = 0;
  for (std::size_t i = 0; i < p.demand.values.size(); ++i) {
    const std::int64_t beta = p.demand.values[i];
    Money cost = use_reservation ? r.utilize_per_qubit * std::min(reserved, beta) +
                                       r.on_demand_per_qubit * std::max<std::int64_t>(beta - reserved, 0)
                                 : r.on_demand_per_qubit * beta;
    qubits += p.demand.probs[i] * to_exact(cost);
  }
  Exact penalty = 0;
  for (std::size_t i = 0; i < p.wait.values.size(); ++i) {
    penalty += p.wait.probs[i] * time_cost(penalty_time(p.exec_time, p.wait.values[i]), r.penalty_per_second);
  }
  return to_exact(r.reserve_per_qubit * reserved) + qubits + penalty;
}

TripleOptimum solve_triple(const TripleProblem& p) {
  check_problem(p);
  const CostRates& r = p.rates;
  std::int64_t best = 0;
  if (r.utilize_per_qubit <= r.on_demand_per_qubit) {
    // Demand values ascending with their probabilities, for tail sums.
    std::vector<std::size_t> order(p.demand.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return p.demand.values[a] < p.demand.values[b]; });
    Exact tail = 0;  // Pr(demand >= x)
    for (const auto& q : p.demand.probs) tail += q;

    const Exact saving_rate = to_exact(r.on_demand_per_qubit - r.utilize_per_qubit);
    const Exact reserve = to_exact(r.reserve_per_qubit);
    const std::int64_t max_demand = p.demand.values[order.back()];
    std::size_t next = 0;  // first sorted position with value >= x
    for (std::int64_t x = 1; x <= std::min(p.capacity, max_demand); ++x) {
      while (next < order.size() && p.demand.values[order[next]] < x) tail -= p.demand.probs[order[next++]];
      if (saving_rate * tail - reserve <= 0) break;
      best = x;
    }
  }
  return {best, expected_triple_cost(p, best)};
}

TripleOptimum brute_force_triple(const TripleProblem& p, std::int64_t capacity_guard) {
  check_problem(p);
  if (p.capacity > capacity_guard) {
    throw GuardExceeded("brute_force_triple: capacity " + std::to_string(p.capacity) + " exceeds guard " +
                        std::to_string(capacity_guard));
  }
  const ScenarioSpace space = build_space("triple", p.demand.values, p.wait.values, p.demand.probs, p.wait.probs);
  TripleOptimum best{-1, 0};
  for (std::int64_t x = 0; x <= p.capacity; ++x) {
    Exact cost = to_exact(p.rates.reserve_per_qubit * x) +
                 expectation(space, [&](const Scenario& w) { return optimal_recourse(x, w, p.rates, p.exec_time).cost; });
    if (best.reserved < 0 || cost < best.expected_cost) best = {x, cost};
  }
  return best;
}

Solution solve_instance(const Instance& instance) {
  const auto refs = triples(instance);
  std::vector<std::int64_t> levels(refs.size());
  parallel_for(refs.size(), [&](std::size_t i) { levels[i] = solve_triple(triple_problem(instance, refs[i])).reserved; });
  ReservationPlan plan;
  for (std::size_t i = 0; i < refs.size(); ++i) plan[refs[i].key] = levels[i];
  return expected_cost(instance, plan);
}

Solution joint_enumeration_oracle(const Instance& instance, std::int64_t guard) {
  const auto refs = triples(instance);
  std::vector<std::int64_t> caps;
  std::int64_t product = 1;
  for (const auto& ref : refs) {
    const std::int64_t cap = instance.machines[ref.machine_position].capacity_qubits;
    if (cap < 0) throw ModelError("negative capacity on " + to_string(ref.key));
    caps.push_back(cap);
    if (product > guard / (cap + 1)) {
      throw GuardExceeded("joint enumeration: more than " + std::to_string(guard) + " reservation vectors");
    }
    product *= cap + 1;
  }

  std::vector<std::int64_t> current(refs.size(), 0);
  std::optional<Solution> best;
  while (true) {
    ReservationPlan plan;
    for (std::size_t i = 0; i < refs.size(); ++i) plan[refs[i].key] = current[i];
    Solution s = expected_cost(instance, plan);
    if (!best || s.expected_total < best->expected_total) best = std::move(s);

    // Odometer with the last triple varying fastest, i.e. lexicographic order.
    std::size_t i = refs.size();
    while (i > 0 && current[i - 1] == caps[i - 1]) current[--i] = 0;
    if (i == 0) break;
    ++current[i - 1];
  }
  return *best;
}

}  // namespace qres
