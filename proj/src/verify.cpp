#include "qdg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "qdg/error.hpp"

namespace qdg {

  std::pair<std::size_t, std::size_t> bound_for(Family f, int n) {
    auto const un = static_cast<std::size_t>(n);
    return {(f == Family::QV ? 4 * un : 3 * un) + 5, 2 * un + 3};
  }

  VerificationPlan make_plan(Family f, int n, std::optional<std::size_t> k, std::optional<std::size_t> l,
                             bool allow_override, std::optional<ConnectivityMode> mode) {
    if (n < 0) {
      throw Error("bad_dimension", "n must be nonnegative");
    }
    auto const [kb, lb] = bound_for(f, n);
    VerificationPlan plan;
    plan.family = f;
    plan.n = n;
    plan.k = k.value_or(kb);
    plan.l = l.value_or(lb);
    if (plan.k < kb || plan.l < lb) {
      if (!allow_override) {
        throw Error("below_bound", "(k, l) = (" + std::to_string(plan.k) + ", " + std::to_string(plan.l)
                                       + ") is below the bound (" + std::to_string(kb) + ", "
                                       + std::to_string(lb) + ") for " + to_string(f) + " at n = "
                                       + std::to_string(n) + "; pass --override to explore");
      }
      plan.exploratory = true;
    }
    plan.mode = mode.value_or(f == Family::QV && n >= 1 ? ConnectivityMode::homology_only
                                                         : ConnectivityMode::strict);
    return plan;
  }

  VerificationResult run_plan(VerificationPlan const& plan) {
    VerificationResult out;
    out.plan = plan;
    auto link = abstract_descending_link(plan.k, plan.l, plan.family, plan.n + 1);
    for (int d = 0; d <= link.complex.dimension(); ++d) {
      out.face_counts.push_back(link.complex.count(d));
    }
    HomologyOptions options;
    options.modular = plan.mode == ConnectivityMode::homology_only && plan.n >= 1;
    out.report = check_n_connected(link.complex, plan.n, plan.mode, options);
    out.passed = out.report.verdict.value_or(false);
    if (plan.family == Family::QF) {
      out.cover = cover_by_skeleton_neighborhoods(plan.k, plan.l, plan.family, plan.n);
      out.passed = out.passed && out.cover->ok() && (plan.n == 0 || out.cover->subfamilies_meet);
    }
    return out;
  }

  std::size_t worker_limit() {
    if (char const* env = std::getenv("QDG_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }

  std::vector<VerificationResult> run_plans(std::vector<VerificationPlan> const& plans, std::size_t workers) {
    std::vector<VerificationResult> results(plans.size());
    std::vector<std::exception_ptr> errors(plans.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < plans.size(); i = next++) {
        try {
          results[i] = run_plan(plans[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, plans.size()));
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return results;
  }

  namespace {
    Json vertex_list(std::vector<LinkVertex> const& vs) {
      Json out = Json::array();
      for (auto const& v : vs) {
        out.push_back(to_string(v));
      }
      return out;
    }
  }  // namespace

  Json to_json(VerificationResult const& r) {
    Json out{{"family", to_string(r.plan.family)},
             {"n", r.plan.n},
             {"k", r.plan.k},
             {"l", r.plan.l},
             {"mode", r.plan.mode == ConnectivityMode::strict ? "strict" : "homology-only"},
             {"exploratory", r.plan.exploratory},
             {"face_counts", r.face_counts},
             {"report", to_json(r.report)},
             {"passed", r.passed}};
    if (r.cover) {
      auto const& c = *r.cover;
      Json cover{{"skeleton_dim", c.skeleton_dim},
                 {"centers", c.centers.size()},
                 {"simplices_checked", c.simplices_checked},
                 {"covered", c.covered},
                 {"subfamilies_checked", c.subfamilies_checked},
                 {"subfamilies_meet", c.subfamilies_meet}};
      if (c.witness) {
        cover["witness"] = vertex_list(*c.witness);
      }
      if (c.subfamily_witness) {
        cover["subfamily_witness"] = vertex_list(*c.subfamily_witness);
      }
      out["cover"] = std::move(cover);
    } else {
      out["cover"] = nullptr;
    }
    return out;
  }

}  // namespace qdg
