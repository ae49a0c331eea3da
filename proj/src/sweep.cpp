#include "qres/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "qres/errors.hpp"
#include "qres/parallel.hpp"
#include "qres/scenario.hpp"
#include "qres/solver.hpp"

namespace qres {

namespace {

void check_grid(const Instance& instance, std::span<const std::int64_t> grid) {
  if (grid.empty()) throw ModelError("reservation grid is empty");
  std::int64_t min_capacity = INT64_MAX;
  for (const auto& m : instance.machines) min_capacity = std::min(min_capacity, m.capacity_qubits);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0 || grid[i] > min_capacity) {
      throw ModelError("grid value " + std::to_string(grid[i]) + " outside [0, " + std::to_string(min_capacity) + "]");
    }
    if (i > 0 && grid[i] <= grid[i - 1]) throw ModelError("reservation grid must be strictly increasing");
  }
}

std::size_t write(std::ostream& out, const std::string& text) {
  out << text;
  if (!out) throw Error("CSV write failed");
  return text.size();
}

}  // namespace

CostCurve sweep_reservation(const Instance& instance, std::span<const std::int64_t> grid) {
  check_grid(instance, grid);
  CostCurve curve;
  curve.points.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const Solution s = expected_cost(instance, uniform_plan(instance, grid[i]));
    curve.points[i] = {grid[i], s.expected_first_stage, s.expected_second_stage, s.expected_penalty,
                       s.expected_total, s.expected_on_demand};
  });
  return curve;
}

Instance with_arranged_wait(const Instance& instance, Duration arranged_wait) {
  if (arranged_wait.micros < 0) throw ModelError("arranged waiting time must be non-negative");
  Instance out = instance;
  for (auto& c : out.circuits) {
    if (!c.joint_probs.empty()) {
      c.demand_probs = demand_marginal(build_space(c)).probs;
      c.joint_probs.clear();
    }
    c.wait_set = {arranged_wait};
    c.wait_probs.clear();
  }
  return out;
}

CostSurface sweep_reservation_waiting(const Instance& instance, std::span<const std::int64_t> reserved_grid,
                                      std::span<const Duration> wait_grid) {
  check_grid(instance, reserved_grid);
  if (wait_grid.empty()) throw ModelError("wait grid is empty");
  CostSurface surface;
  surface.reserved_grid.assign(reserved_grid.begin(), reserved_grid.end());
  surface.wait_grid.assign(wait_grid.begin(), wait_grid.end());
  std::vector<Instance> collapsed;
  for (Duration w : wait_grid) collapsed.push_back(with_arranged_wait(instance, w));

  surface.rows.resize(reserved_grid.size() * wait_grid.size());
  parallel_for(surface.rows.size(), [&](std::size_t i) {
    const std::size_t xi = i / wait_grid.size();
    const std::size_t wi = i % wait_grid.size();
    const Solution s = expected_cost(collapsed[wi], uniform_plan(instance, reserved_grid[xi]));
    surface.rows[i] = {reserved_grid[xi], wait_grid[wi], s.expected_total, s.expected_penalty};
  });
  return surface;
}

std::size_t emit_csv(const CostCurve& curve, std::ostream& out) {
  std::ostringstream text;
  text << "reserved,first_stage,second_stage,penalty,total\n";
  for (const auto& p : curve.points) {
    text << p.reserved << ',' << format_fixed(p.first_stage) << ',' << format_fixed(p.second_stage) << ','
         << format_fixed(p.penalty) << ',' << format_fixed(p.total) << '\n';
  }
  return write(out, text.str());
}

std::size_t emit_csv(const CostSurface& surface, std::ostream& out) {
  std::ostringstream text;
  text << "reserved,arranged_wait,total\n";
  for (const auto& r : surface.rows) {
    text << r.reserved << ',' << format_fixed(to_exact(r.arranged_wait)) << ',' << format_fixed(r.total) << '\n';
  }
  return write(out, text.str());
}

}  // namespace qres
