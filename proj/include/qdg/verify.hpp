#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdg/json_io.hpp"
#include "qdg/links.hpp"
#include "qdg/topology.hpp"

namespace qdg {

  // One connectivity check of a descending link at (k, l).
  struct VerificationPlan {
    Family family = Family::QF;
    int n = 0;
    std::size_t k = 0;
    std::size_t l = 0;
    ConnectivityMode mode = ConnectivityMode::strict;
    // k or l below the bound for n; the outcome says nothing either way.
    bool exploratory = false;
  };

  // Smallest (k, l) the connectivity bound covers: QF/QT k = 3n+5, QV
  // k = 4n+5; l = 2n+3 for all three.
  std::pair<std::size_t, std::size_t> bound_for(Family f, int n);

  // Fills k and l from the bound when absent. Throws Error("below_bound")
  // for smaller values unless allow_override, in which case the plan is
  // exploratory. QV with n >= 1 defaults to homology-only.
  VerificationPlan make_plan(Family f, int n, std::optional<std::size_t> k = {},
                             std::optional<std::size_t> l = {}, bool allow_override = false,
                             std::optional<ConnectivityMode> mode = {});

  struct VerificationResult {
    VerificationPlan plan;
    std::vector<std::size_t> face_counts;
    HomologyReport report;
    // QF only: the skeleton cover by neighborhoods of (m, m+1, b).
    std::optional<CoverCertificate> cover;
    bool passed = false;
  };

  VerificationResult run_plan(VerificationPlan const& plan);

  // Runs the plans on at most `workers` threads; results keep the input order.
  std::vector<VerificationResult> run_plans(std::vector<VerificationPlan> const& plans, std::size_t workers);

  // QDG_THREADS if set and positive, else the hardware concurrency (>= 1).
  std::size_t worker_limit();

  Json to_json(VerificationResult const& r);

}  // namespace qdg
