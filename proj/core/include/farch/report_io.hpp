#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "farch/metrics.hpp"
#include "farch/simulator.hpp"

namespace farch {

/// JSON document for one analyzed pair. Stable field names: n, period,
/// max_diversity, mttr, mcttr, mttr_h (array), visit_counts, bounds
/// (object of value/bound/pass/applicable checks, or null when the pair
/// lacks maximal diversity). Undefined metrics serialize as null.
std::string analysis_to_json(const AnalysisReport& report, int indent = 2);

/// CSV curve `h,mttr_h,lower_bound`, one row per h = 0..h_max, where the
/// lower bound column is (h+1)*N. Rows with an undefined MTTR_h are
/// written with an empty value cell.
void write_mttr_h_csv(std::ostream& out, const MetricsReport& metrics,
                      std::size_t h_max);

/// Simulation rows. CSV columns:
///   n,x,p,traffic_mode,trials,mean_ttr,std_err,timeouts,seed
/// Skipped grid points carry nan in mean_ttr/std_err. The JSON mirror has
/// the identical fields per row plus an `error` string for skipped points.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows, int indent = 2);

}  // namespace farch
