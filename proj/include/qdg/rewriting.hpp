#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qdg/diagram.hpp"

namespace qdg {

  // Two transistors forming a dipole: every top wire of `lower` runs, in
  // order, onto the full bottom of `upper`, and top(upper) = bottom(lower).
  struct DipoleSite {
    TransistorId lower = 0;
    TransistorId upper = 0;

    auto operator<=>(DipoleSite const&) const = default;
  };

  enum class RelationDirection { lhs_to_rhs, rhs_to_lhs };

  // All dipoles, ordered by (lower, upper).
  std::vector<DipoleSite> find_dipoles(Diagram const& d);

  bool is_reduced(Diagram const& d);

  // Throws Error("stale_site") if `site` is not a dipole of d.
  Diagram remove_dipole(Diagram const& d, DipoleSite site);

  // Cuts the given wires (which must read the relation's source side, in
  // order) and splices in a cancelling pair of transistors.
  Diagram insert_dipole(Diagram const& d, std::span<WireId const> wires, Relation const& relation,
                        RelationDirection direction);

  // Removes the first dipole until none is left.
  Diagram reduce(Diagram const& d);

  // Same, but `choose` picks which of the current sites to remove.
  using DipoleChooser = std::function<std::size_t(std::vector<DipoleSite> const&)>;
  Diagram reduce(Diagram const& d, DipoleChooser const& choose);

}  // namespace qdg
