#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdg/simplicial.hpp"

namespace qdg {

  using BigInt = boost::multiprecision::cpp_int;

  // Union-find over the 1-skeleton. Throws Error("empty_complex").
  std::size_t connected_components(SimplicialComplex const& k);

  // Sparse integer matrix stored by columns; each column is sorted by row.
  class IntegerMatrix {
   public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _columns(cols) {}

    static IntegerMatrix from_dense(std::vector<std::vector<std::int64_t>> const& rows);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _columns.size();
    }
    std::vector<Entry> const& column(std::size_t j) const {
      return _columns.at(j);
    }
    // Entries must be pushed in increasing row order per column.
    void push(std::size_t col, std::uint32_t row, std::int64_t value);

    std::int64_t at(std::size_t row, std::size_t col) const;
    std::vector<std::vector<std::int64_t>> dense() const;
    IntegerMatrix transpose() const;
    std::size_t nonzeros() const;

    bool operator==(IntegerMatrix const&) const = default;

   private:
    std::size_t _rows = 0;
    std::vector<std::vector<Entry>> _columns;
  };

  IntegerMatrix multiply(IntegerMatrix const& a, IntegerMatrix const& b);

  // Boundary C_d -> C_{d-1}: rows are (d-1)-simplices, columns d-simplices,
  // both in the complex's order; the i-th face (vertex i removed) gets sign
  // (-1)^i. Throws Error("bad_dimension").
  IntegerMatrix boundary_matrix(SimplicialComplex const& k, int d);

  // The nonzero invariant factors d1 | d2 | ..., all positive. Runs in
  // checked 64-bit arithmetic and restarts with big integers on overflow.
  std::vector<BigInt> smith_normal_form(IntegerMatrix const& m);

  // Rank over Z/p by sparse elimination; eliminates along the shorter side.
  // Stops early once `stop_at` pivots are found. Throws Error("not_prime").
  std::size_t rank_mod_p(IntegerMatrix const& m, std::uint64_t p,
                         std::optional<std::size_t> stop_at = std::nullopt);

  bool is_prime(std::uint64_t p);

  // Group presentation; letters are +-(g+1) for generator g.
  struct GroupPresentation {
    std::size_t generators = 0;
    std::vector<std::vector<int>> relators;
  };

  // Edge-path presentation: generators are the edges outside a breadth-first
  // spanning tree rooted at the seed-th vertex (0 = lowest index), relators
  // the triangle boundaries. Throws Error("disconnected").
  GroupPresentation fundamental_group(SimplicialComplex const& k, std::size_t spanning_tree_seed = 0);

  struct TietzeResult {
    bool trivial = false;
    bool budget_exhausted = false;
    std::size_t moves = 0;
    GroupPresentation presentation;
  };

  // Free and cyclic reduction, then repeatedly eliminates a generator that
  // occurs exactly once in some relator, shortest relator first.
  TietzeResult tietze_simplify(GroupPresentation p, std::size_t move_budget);

  enum class Pi1Status { trivial, nontrivial, inconclusive };
  std::string to_string(Pi1Status s);

  struct HomologyReport {
    std::size_t components = 0;
    // reduced: betti[0] = components - 1
    std::vector<std::size_t> betti;
    std::vector<std::vector<BigInt>> torsion;
    std::optional<Pi1Status> pi1;
    std::optional<std::string> caveat;
    // "exact" (Smith normal form) or "mod p" with the primes used
    std::string method = "exact";
    std::optional<bool> verdict;
    std::vector<std::pair<std::string, double>> timings_ms;
  };

  struct HomologyOptions {
    // Ranks over Z/p for the listed primes instead of Smith normal form.
    // Torsion is then not computed; disagreement falls back to exact.
    bool modular = false;
    std::vector<std::uint64_t> primes{2, 3, 46337};
    std::size_t tietze_budget = 1000000;
  };

  // Throws Error("insufficient_dimension") unless k is complete through
  // max_degree + 1.
  HomologyReport homology(SimplicialComplex const& k, int max_degree, HomologyOptions const& options = {});

  enum class ConnectivityMode { strict, homology_only };

  // Pass iff one component and vanishing reduced homology (no torsion) in
  // degrees 1..n; strict mode also needs pi1 trivial when n >= 1.
  HomologyReport check_n_connected(SimplicialComplex const& k, int n, ConnectivityMode mode,
                                   HomologyOptions const& options = {});

  extern char const* const homology_only_caveat;

}  // namespace qdg
