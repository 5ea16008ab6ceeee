#include <algorithm>
#include <chrono>
#include <numeric>

#include "qdg/error.hpp"
#include "qdg/topology.hpp"

namespace qdg {

  namespace {
    struct DisjointSets {
      std::vector<std::size_t> parent;

      explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x = parent[x];
        }
        return x;
      }
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }
    };

    class Stopwatch {
     public:
      double lap_ms() {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - _last).count();
        _last = now;
        return ms;
      }

     private:
      std::chrono::steady_clock::time_point _last = std::chrono::steady_clock::now();
    };
  }  // namespace

  std::size_t connected_components(SimplicialComplex const& k) {
    if (k.vertex_count() == 0) {
      throw Error("empty_complex", "the complex has no vertices");
    }
    DisjointSets sets(k.labels().size());
    std::size_t components = k.vertex_count();
    for (std::size_t i = 0; i < k.count(1); ++i) {
      auto e = k.simplex(1, i);
      if (sets.unite(e[0], e[1])) {
        --components;
      }
    }
    return components;
  }

  // -- matrices ----------------------------------------------------------------------

  IntegerMatrix IntegerMatrix::from_dense(std::vector<std::vector<std::int64_t>> const& rows) {
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) {
          throw Error("ragged_matrix", "rows have different lengths");
        }
        if (rows[i][j] != 0) {
          m.push(j, static_cast<std::uint32_t>(i), rows[i][j]);
        }
      }
    }
    return m;
  }

  void IntegerMatrix::push(std::size_t col, std::uint32_t row, std::int64_t value) {
    auto& c = _columns.at(col);
    if (row >= _rows || (!c.empty() && c.back().first >= row)) {
      throw Error("bad_entry", "entries must be pushed in increasing row order");
    }
    if (value != 0) {
      c.emplace_back(row, value);
    }
  }

  std::int64_t IntegerMatrix::at(std::size_t row, std::size_t col) const {
    for (auto const& [r, v] : _columns.at(col)) {
      if (r == row) {
        return v;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::int64_t>> IntegerMatrix::dense() const {
    std::vector<std::vector<std::int64_t>> out(_rows, std::vector<std::int64_t>(cols(), 0));
    for (std::size_t j = 0; j < cols(); ++j) {
      for (auto const& [r, v] : _columns[j]) {
        out[r][j] = v;
      }
    }
    return out;
  }

  IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols(), _rows);
    for (std::size_t j = 0; j < cols(); ++j) {
      for (auto const& [r, v] : _columns[j]) {
        t._columns[r].emplace_back(static_cast<std::uint32_t>(j), v);
      }
    }
    return t;
  }

  std::size_t IntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (auto const& c : _columns) {
      n += c.size();
    }
    return n;
  }

  IntegerMatrix multiply(IntegerMatrix const& a, IntegerMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw Error("shape_mismatch", "cannot multiply matrices of incompatible shapes");
    }
    IntegerMatrix out(a.rows(), b.cols());
    std::vector<std::int64_t> acc(a.rows());
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (auto const& [k, v] : b.column(j)) {
        for (auto const& [i, u] : a.column(k)) {
          acc[i] += u * v;
        }
      }
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (acc[i] != 0) {
          out.push(j, static_cast<std::uint32_t>(i), acc[i]);
        }
      }
    }
    return out;
  }

  IntegerMatrix boundary_matrix(SimplicialComplex const& k, int d) {
    if (d < 1 || d > k.dimension() + 1 || !k.complete_through(d)) {
      throw Error("bad_dimension", "no boundary map in dimension " + std::to_string(d));
    }
    IntegerMatrix m(k.count(d - 1), k.count(d));
    std::vector<std::pair<std::uint32_t, std::int64_t>> entries;
    Simplex face;
    for (std::size_t j = 0; j < k.count(d); ++j) {
      auto s = k.simplex(d, j);
      entries.clear();
      for (std::size_t i = 0; i < s.size(); ++i) {
        face.assign(s.begin(), s.end());
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto row = k.index_of(face);
        if (!row) {
          throw Error("not_closed", "complex is missing a face");
        }
        entries.emplace_back(static_cast<std::uint32_t>(*row), i % 2 == 0 ? 1 : -1);
      }
      std::sort(entries.begin(), entries.end());
      for (auto const& [r, v] : entries) {
        m.push(j, r, v);
      }
    }
    return m;
  }

  // -- homology ----------------------------------------------------------------------

  std::string to_string(Pi1Status s) {
    switch (s) {
      case Pi1Status::trivial: return "trivial";
      case Pi1Status::nontrivial: return "nontrivial";
      case Pi1Status::inconclusive: return "inconclusive";
    }
    return "?";
  }

  char const* const homology_only_caveat =
      "pi1 not decided: vanishing homology does not imply simple connectivity";

  namespace {
    struct Ranks {
      std::vector<std::size_t> rank;  // rank[d] of the boundary C_d -> C_{d-1}, d >= 1
      std::vector<std::vector<BigInt>> torsion;  // invariants > 1 of that map
    };

    Ranks exact_ranks(SimplicialComplex const& k, int top) {
      Ranks r;
      r.rank.assign(static_cast<std::size_t>(top) + 1, 0);
      r.torsion.assign(static_cast<std::size_t>(top) + 1, {});
      for (int d = 1; d <= top && d <= k.dimension(); ++d) {
        auto invariants = smith_normal_form(boundary_matrix(k, d));
        r.rank[static_cast<std::size_t>(d)] = invariants.size();
        for (auto const& v : invariants) {
          if (v > 1) {
            r.torsion[static_cast<std::size_t>(d)].push_back(v);
          }
        }
      }
      return r;
    }

    // Ranks mod p; rank of the top map is capped by the cycle space below.
    std::optional<std::vector<std::size_t>> modular_ranks(SimplicialComplex const& k, int top,
                                                          std::size_t components,
                                                          std::vector<std::uint64_t> const& primes) {
      std::optional<std::vector<std::size_t>> agreed;
      for (auto p : primes) {
        std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 1, 0);
        for (int d = 1; d <= top && d <= k.dimension(); ++d) {
          if (d == 1) {
            // a graph's incidence matrix has rank V - c over every field
            rank[1] = k.count(0) - components;
            continue;
          }
          auto const cycles = k.count(d - 1) - rank[static_cast<std::size_t>(d) - 1];
          rank[static_cast<std::size_t>(d)] = rank_mod_p(boundary_matrix(k, d), p, cycles);
        }
        if (agreed && *agreed != rank) {
          return std::nullopt;
        }
        agreed = rank;
      }
      return agreed;
    }
  }  // namespace

  HomologyReport homology(SimplicialComplex const& k, int max_degree, HomologyOptions const& options) {
    if (max_degree < 0 || !k.complete_through(max_degree + 1)) {
      throw Error("insufficient_dimension", "homology up to degree " + std::to_string(max_degree)
                                                + " needs simplices of dimension "
                                                + std::to_string(max_degree + 1));
    }
    Stopwatch clock;
    HomologyReport report;
    report.components = connected_components(k);
    report.timings_ms.emplace_back("components", clock.lap_ms());

    int const top = max_degree + 1;
    Ranks ranks;
    bool exact = !options.modular;
    if (options.modular) {
      auto mod = modular_ranks(k, top, report.components, options.primes);
      report.timings_ms.emplace_back("rank_mod_p", clock.lap_ms());
      if (mod) {
        ranks.rank = *mod;
        ranks.torsion.assign(static_cast<std::size_t>(top) + 1, {});
        report.method = "mod p (";
        for (std::size_t i = 0; i < options.primes.size(); ++i) {
          report.method += (i ? ", " : "") + std::to_string(options.primes[i]);
        }
        report.method += ")";
      } else {
        exact = true;
      }
    }
    if (exact) {
      ranks = exact_ranks(k, top);
      report.method = "exact";
      report.timings_ms.emplace_back("smith_normal_form", clock.lap_ms());
    }

    report.betti.push_back(report.components - 1);
    report.torsion.push_back(ranks.torsion[1]);
    for (int i = 1; i <= max_degree; ++i) {
      auto const ui = static_cast<std::size_t>(i);
      auto const cycles = k.count(i) - ranks.rank[ui];
      report.betti.push_back(cycles - ranks.rank[ui + 1]);
      report.torsion.push_back(ranks.torsion[ui + 1]);
    }
    return report;
  }

  HomologyReport check_n_connected(SimplicialComplex const& k, int n, ConnectivityMode mode,
                                   HomologyOptions const& options) {
    if (n < 0) {
      throw Error("bad_dimension", "connectivity degree must be nonnegative");
    }
    auto report = homology(k, n, options);
    bool pass = report.components == 1;
    for (int i = 1; i <= n; ++i) {
      auto const ui = static_cast<std::size_t>(i);
      pass = pass && report.betti[ui] == 0 && report.torsion[ui].empty();
    }
    if (n >= 1) {
      if (mode == ConnectivityMode::homology_only) {
        report.pi1 = Pi1Status::inconclusive;
        report.caveat = homology_only_caveat;
      } else if (report.components == 1) {
        auto clock = Stopwatch();
        auto t = tietze_simplify(fundamental_group(k), options.tietze_budget);
        report.timings_ms.emplace_back("tietze", clock.lap_ms());
        if (t.trivial) {
          report.pi1 = Pi1Status::trivial;
        } else if (t.presentation.relators.empty() || report.betti[1] != 0 || !report.torsion[1].empty()) {
          // free group of positive rank, or nonzero abelianization
          report.pi1 = Pi1Status::nontrivial;
        } else {
          report.pi1 = Pi1Status::inconclusive;
          report.caveat = "Tietze simplification stopped with " + std::to_string(t.presentation.generators)
                          + " generators and " + std::to_string(t.presentation.relators.size())
                          + " relators";
        }
        pass = pass && report.pi1 == Pi1Status::trivial;
      } else {
        report.pi1 = Pi1Status::inconclusive;
        report.caveat = "pi1 not computed for a disconnected complex";
      }
    }
    report.verdict = pass;
    return report;
  }

}  // namespace qdg
