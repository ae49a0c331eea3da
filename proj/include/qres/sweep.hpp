#pragma once

// Cost curves over a uniform reservation level, and cost surfaces over
// (reservation level, arranged waiting time).

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "qres/instance.hpp"
#include "qres/units.hpp"

namespace qres {

struct CurvePoint {
  std::int64_t reserved = 0;
  Exact first_stage;
  Exact second_stage;
  Exact penalty;
  Exact total;
  Exact on_demand;  // part of second_stage; not written to CSV
};

struct CostCurve {
  std::vector<CurvePoint> points;
};

struct SurfaceRow {
  std::int64_t reserved = 0;
  Duration arranged_wait;
  Exact total;
  Exact penalty;  // part of total; not written to CSV
};

struct CostSurface {
  std::vector<std::int64_t> reserved_grid;
  std::vector<Duration> wait_grid;
  std::vector<SurfaceRow> rows;  // reserved-major
};

/// Forces the same reservation level on every triple for each grid value.
/// The grid must be strictly increasing and within [0, min capacity].
CostCurve sweep_reservation(const Instance& instance, std::span<const std::int64_t> grid);

/// Copy of `instance` where every circuit waits exactly `arranged_wait`; the
/// demand marginal is kept.
Instance with_arranged_wait(const Instance& instance, Duration arranged_wait);

CostSurface sweep_reservation_waiting(const Instance& instance, std::span<const std::int64_t> reserved_grid,
                                      std::span<const Duration> wait_grid);

/// CSV writers. Money and times carry six fraction digits. Return bytes
/// written.
std::size_t emit_csv(const CostCurve& curve, std::ostream& out);
std::size_t emit_csv(const CostSurface& surface, std::ostream& out);

}  // namespace qres
