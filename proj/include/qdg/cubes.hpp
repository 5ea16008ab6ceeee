#pragma once

#include <cstddef>
#include <vector>

#include "qdg/canonical.hpp"
#include "qdg/diagram.hpp"
#include "qdg/links.hpp"
#include "qdg/simplicial.hpp"

namespace qdg {

  // A vertex of the diagram complex: a reduced diagram up to permuting its
  // bottom contacts.
  struct ComplexVertex {
    Diagram representative;
    CanonicalCode code;
  };

  // Reduces d and records its bottom-unordered code.
  ComplexVertex make_vertex(Diagram const& d);
  bool operator==(ComplexVertex const& a, ComplexVertex const& b);

  // delta on top of the thin diagram psi; numbering[i] is the transistor of
  // psi controlled by bit i of a corner.
  struct MarkedCube {
    Diagram delta;
    Diagram psi;
    std::vector<TransistorId> numbering;
  };

  // Throws Error(...) when psi is not thin, the labels do not meet, or the
  // numbering is not a permutation of psi's transistors.
  void validate_cube(MarkedCube const& c);

  // Drops the psi transistors whose bit is 0 (their upper wires run straight
  // to the bottom) and reduces delta on top of the rest.
  ComplexVertex realize_cube(MarkedCube const& c, std::vector<bool> const& corner);

  // Two single-transistor diagrams with the same top label act on disjoint
  // sets of top contacts.
  bool are_disjoint(Diagram const& psi1, Diagram const& psi2);

  struct DiagramLink {
    // one single-transistor diagram per equivalence class
    std::vector<Diagram> moves;
    // the move's (m,n,p)/(m) form, when the presentation is <x,a | x = xax>
    std::vector<LinkVertex> coordinates;
    SimplicialComplex complex;
  };

  // Link of v: single-transistor (w,*)-diagrams on the bottom label w of v,
  // up to bottom permutation, with a simplex per pairwise-disjoint family.
  DiagramLink link_from_diagrams(ComplexVertex const& v, int max_dim = -1);

  // j with |w|_x = j and |w|_a = j - 1 for the bottom label w; throws
  // Error("not_in_filtration") for other labels.
  std::size_t filtration_level(ComplexVertex const& v);

  // Equal bottom-label multisets.
  bool same_orbit(ComplexVertex const& a, ComplexVertex const& b);

}  // namespace qdg
