#pragma once

#include <string>
#include <vector>

#include "croots/cluster.hpp"
#include "croots/disc.hpp"
#include "croots/oracle.hpp"
#include "croots/telemetry.hpp"

namespace croots {

enum class SolveMode { kCompression, kRefinement };

struct SolveStats {
  long long exclusion_tests = 0;  // subdivision ETs (the paper's n)
  long max_precision_bits = 0;
  double t_stage_s = 0;   // time in compression (or refinement) steps
  double t_verify_s = 0;
  double t_total_s = 0;
};

struct ClusterReport {
  bool success = false;
  SolveMode mode = SolveMode::kCompression;
  Real epsilon;
  std::vector<Cluster> clusters;
  SolveStats stats;
  std::string diagnostic;
};

struct SolveOptions {
  long long max_queue_pops = 2'000'000;
  int extra_depth = 80;  // subdivision may go ceil(log2(w0/eps)) + extra levels deep
};

/// One validated Schroeder step: tries to shrink the disc to a quarter (or
/// half) radius around c - m p(c)/p'(c), recounting with the verified counter;
/// returns the input disc unchanged on any failure.
Disc refine_disc(const OraclePair& o, const Disc& disc, long m, Telemetry* tel = nullptr);

/// Subdivision root clustering: returns discs of radius <= eps, pairwise
/// 3-disjoint, covering all roots with multiplicities summing to the degree.
ClusterReport solve(const OraclePair& o, const Real& eps, SolveMode mode,
                    const SolveOptions& options = {}, Telemetry* tel = nullptr);

}  // namespace croots
