#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qdg {

  using VertexId = std::uint32_t;
  using Simplex = std::vector<VertexId>;

  // A finite simplicial complex on the vertex set {0, ..., labels.size()-1}.
  // Simplices are ascending vertex tuples, stored flat per dimension in
  // lexicographic order. Only vertices listed as 0-cells belong to the
  // complex, so subcomplexes keep the ambient numbering.
  //
  // A complex may be a capped enumeration: `stored_dimension()` >= 0 means
  // simplices above that dimension were not generated and may exist.
  class SimplicialComplex {
   public:
    SimplicialComplex() = default;

    // Face-closes `simplices`. The 0-cells are the vertices that occur.
    // Simplices above max_dim are truncated to their max_dim-faces.
    static SimplicialComplex from_simplices(std::vector<std::string> labels,
                                            std::vector<Simplex> const& simplices, int max_dim = -1);

    // Flag complex of a graph on all labels.size() vertices; neighbors[v] is
    // sorted. With max_dim >= 0 only that skeleton is generated.
    static SimplicialComplex clique_complex(std::vector<std::string> labels,
                                            std::vector<std::vector<VertexId>> const& neighbors,
                                            int max_dim = -1);

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::size_t vertex_count() const noexcept {
      return count(0);
    }
    // Highest dimension holding a simplex; -1 for the empty complex.
    int dimension() const noexcept {
      return static_cast<int>(_flat.size()) - 1;
    }
    // -1 when every simplex is present.
    int stored_dimension() const noexcept {
      return _cap;
    }
    bool complete_through(int d) const noexcept {
      return _cap < 0 || d <= _cap;
    }

    std::size_t count(int d) const noexcept;
    std::span<VertexId const> simplex(int d, std::size_t i) const;
    std::optional<std::size_t> index_of(std::span<VertexId const> s) const;
    bool contains(std::span<VertexId const> s) const {
      return index_of(s).has_value();
    }
    bool has_vertex(VertexId v) const {
      return contains(std::span<VertexId const>(&v, 1));
    }
    std::vector<Simplex> simplices(int d) const;
    // Simplices of dimension <= d; the result is capped at d.
    SimplicialComplex skeleton(int d) const;
    // Neighbors of v in the 1-skeleton, ascending.
    std::vector<std::vector<VertexId>> adjacency() const;

    bool operator==(SimplicialComplex const&) const = default;

   private:
    std::vector<std::string> _labels;
    int _cap = -1;
    std::vector<std::vector<VertexId>> _flat;

    void append(int d, std::span<VertexId const> s);

    friend SimplicialComplex full_subcomplex(SimplicialComplex const&, std::vector<bool> const&);
    friend SimplicialComplex simplicial_neighborhood(SimplicialComplex const&, VertexId, int);
  };

  // Every clique of the 1-skeleton (up to the stored dimension) spans a simplex.
  bool is_flag(SimplicialComplex const& k);

  // sub maps into ambient by `injection` (indexed by sub vertex id); true iff
  // the image of sub is a subcomplex and every ambient simplex on image
  // vertices comes from sub. Throws Error("not_injective").
  bool full_subcomplex_check(SimplicialComplex const& sub, SimplicialComplex const& ambient,
                             std::vector<VertexId> const& injection);

  // The skeleton_dim-skeleton of the closed star of v. For simplices one
  // dimension above what k stores, membership of tau + v is decided from
  // the 1-skeleton, which is exact for flag complexes.
  SimplicialComplex simplicial_neighborhood(SimplicialComplex const& k, VertexId v, int skeleton_dim);

  // One vertex per member; a simplex for every set of members that share a
  // vertex (members are subcomplexes of one ambient complex).
  SimplicialComplex nerve_of_cover(std::vector<SimplicialComplex> const& members, int max_dim);

  // The subcomplex induced on `keep`: every simplex all of whose vertices are kept.
  SimplicialComplex full_subcomplex(SimplicialComplex const& k, std::vector<bool> const& keep);

}  // namespace qdg
