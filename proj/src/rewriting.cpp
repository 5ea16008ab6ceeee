#include "qdg/rewriting.hpp"

#include <algorithm>

namespace qdg {

  namespace {
    std::optional<TransistorId> dipole_partner(Diagram const& d, Incidence const& inc,
                                               TransistorId lower) {
      auto const& t1 = d.transistors[lower];
      auto const& up = inc.upper[t1.top.front()];
      if (up.owner != PortOwner::transistor_bottom) {
        return std::nullopt;
      }
      auto const& t2 = d.transistors[up.transistor];
      if (t2.bottom != t1.top) {
        return std::nullopt;
      }
      if (top_letters(d, t2) != bottom_letters(d, t1)) {
        return std::nullopt;
      }
      return up.transistor;
    }
  }  // namespace

  std::vector<DipoleSite> find_dipoles(Diagram const& d) {
    auto inc = incidence(d);
    std::vector<DipoleSite> sites;
    for (TransistorId t = 0; t < d.transistor_count(); ++t) {
      if (auto partner = dipole_partner(d, inc, t)) {
        sites.push_back({t, *partner});
      }
    }
    return sites;
  }

  bool is_reduced(Diagram const& d) {
    auto inc = incidence(d);
    for (TransistorId t = 0; t < d.transistor_count(); ++t) {
      if (dipole_partner(d, inc, t)) {
        return false;
      }
    }
    return true;
  }

  Diagram remove_dipole(Diagram const& d, DipoleSite site) {
    if (site.lower >= d.transistor_count() || site.upper >= d.transistor_count()) {
      throw Error("stale_site", "dipole site refers to a missing transistor");
    }
    auto inc = incidence(d);
    auto partner = dipole_partner(d, inc, site.lower);
    if (!partner || *partner != site.upper) {
      throw Error("stale_site", "transistors " + std::to_string(site.lower) + " and "
                                    + std::to_string(site.upper) + " do not form a dipole");
    }
    auto const& lower = d.transistors[site.lower];
    auto const& upper = d.transistors[site.upper];

    Diagram out = d;
    std::vector<bool> keep_wire(d.wire_count(), true);
    std::vector<bool> keep_transistor(d.transistor_count(), true);
    keep_transistor[site.lower] = keep_transistor[site.upper] = false;
    for (auto w : lower.top) {
      keep_wire[w] = false;
    }
    // the wire entering `lower` from below continues where the wire leaving
    // `upper` at the same position ended
    for (std::size_t i = 0; i < upper.top.size(); ++i) {
      auto const below = lower.bottom[i];
      auto const above = upper.top[i];
      keep_wire[above] = false;
      auto const& end = inc.upper[above];
      if (end.owner == PortOwner::frame_top) {
        out.frame_top[end.index] = below;
      } else {
        out.transistors[end.transistor].bottom[end.index] = below;
      }
    }
    return compact(out, keep_wire, keep_transistor);
  }

  Diagram insert_dipole(Diagram const& d, std::span<WireId const> wires, Relation const& relation,
                        RelationDirection direction) {
    auto const& p = *d.presentation;
    auto source = p.to_letters(direction == RelationDirection::lhs_to_rhs ? relation.lhs : relation.rhs);
    auto target = p.to_letters(direction == RelationDirection::lhs_to_rhs ? relation.rhs : relation.lhs);
    if (!p.relates(source, target)) {
      throw Error("not_a_relation", "the given relation is not in the presentation");
    }
    if (wires.size() != source.size()) {
      throw Error("label_mismatch", "number of cut wires does not match the relation side");
    }
    LetterWord cut;
    for (auto w : wires) {
      if (w >= d.wire_count()) {
        throw Error("unknown_wire", "cannot cut missing wire " + std::to_string(w));
      }
      cut.push_back(d.labels[w]);
    }
    if (cut != source) {
      throw Error("label_mismatch", "cut wires do not read the relation side");
    }

    auto inc = incidence(d);
    Diagram out = d;
    Transistor lower, upper;
    auto new_wire = [&out](Letter l) {
      out.labels.push_back(l);
      return static_cast<WireId>(out.labels.size() - 1);
    };
    for (auto w : wires) {
      // the original wire keeps its lower end and now stops at `lower`
      lower.bottom.push_back(w);
      auto above = new_wire(d.labels[w]);
      upper.top.push_back(above);
      auto const& end = inc.upper[w];
      if (end.owner == PortOwner::frame_top) {
        out.frame_top[end.index] = above;
      } else {
        out.transistors[end.transistor].bottom[end.index] = above;
      }
    }
    for (auto l : target) {
      auto middle = new_wire(l);
      lower.top.push_back(middle);
      upper.bottom.push_back(middle);
    }
    out.transistors.push_back(std::move(lower));
    out.transistors.push_back(std::move(upper));
    if (!topological_order(out)) {
      throw Error("not_parallel", "cut wires are not parallel; inserting would create a cycle");
    }
    return out;
  }

  Diagram reduce(Diagram const& d) {
    return reduce(d, [](std::vector<DipoleSite> const&) { return std::size_t{0}; });
  }

  Diagram reduce(Diagram const& d, DipoleChooser const& choose) {
    Diagram current = d;
    while (true) {
      auto sites = find_dipoles(current);
      if (sites.empty()) {
        return current;
      }
      auto i = choose(sites);
      current = remove_dipole(current, sites.at(i));
    }
  }

}  // namespace qdg
