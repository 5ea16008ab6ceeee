#include <algorithm>

#include "qdg/diagram.hpp"

namespace qdg {

  namespace {
    // Position of the block `wires` inside `frontier`: consecutive in matching
    // order (cyclically consecutive when `cyclic`). Returns the start index.
    std::optional<std::size_t> find_block(std::vector<WireId> const& frontier,
                                          std::vector<WireId> const& wires, bool cyclic) {
      auto it = std::find(frontier.begin(), frontier.end(), wires.front());
      if (it == frontier.end()) {
        return std::nullopt;
      }
      auto const start = static_cast<std::size_t>(it - frontier.begin());
      auto const len = frontier.size();
      if (!cyclic && start + wires.size() > len) {
        return std::nullopt;
      }
      if (wires.size() > len) {
        return std::nullopt;
      }
      for (std::size_t i = 1; i < wires.size(); ++i) {
        if (frontier[(start + i) % len] != wires[i]) {
          return std::nullopt;
        }
      }
      return start;
    }

    bool is_rotation(std::vector<WireId> const& a, std::vector<WireId> const& b) {
      if (a.size() != b.size()) {
        return false;
      }
      if (a.empty()) {
        return true;
      }
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (std::equal(a.begin() + static_cast<std::ptrdiff_t>(r), a.end(), b.begin())
            && std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r),
                          b.begin() + static_cast<std::ptrdiff_t>(a.size() - r))) {
          return true;
        }
      }
      return false;
    }

    // Repeatedly splice a transistor whose top wires sit as a block on the
    // current frontier. Any two peelable transistors have disjoint blocks and
    // peeling never joins separated wires, so the order does not matter.
    bool peel(Diagram const& d, bool cyclic) {
      std::vector<WireId> frontier = d.frame_top;
      std::vector<bool> done(d.transistor_count(), false);
      std::size_t remaining = d.transistor_count();
      bool progress = true;
      while (remaining > 0 && progress) {
        progress = false;
        for (std::size_t t = 0; t < d.transistor_count(); ++t) {
          if (done[t]) {
            continue;
          }
          auto const& tr = d.transistors[t];
          auto start = find_block(frontier, tr.top, cyclic);
          if (!start) {
            continue;
          }
          if (*start + tr.top.size() > frontier.size()) {
            std::rotate(frontier.begin(), frontier.begin() + static_cast<std::ptrdiff_t>(*start),
                        frontier.end());
            start = 0;
          }
          auto first = frontier.begin() + static_cast<std::ptrdiff_t>(*start);
          frontier.erase(first, first + static_cast<std::ptrdiff_t>(tr.top.size()));
          frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(*start), tr.bottom.begin(),
                          tr.bottom.end());
          done[t] = true;
          --remaining;
          progress = true;
        }
      }
      if (remaining > 0) {
        return false;
      }
      return cyclic ? is_rotation(frontier, d.frame_bottom) : frontier == d.frame_bottom;
    }
  }  // namespace

  bool is_planar(Diagram const& d) {
    return peel(d, false);
  }

  bool is_annular(Diagram const& d) {
    return peel(d, true);
  }

}  // namespace qdg
