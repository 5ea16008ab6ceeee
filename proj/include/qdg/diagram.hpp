#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qdg/presentation.hpp"

namespace qdg {

  using WireId = std::uint32_t;
  using TransistorId = std::uint32_t;

  enum class PortOwner : std::uint8_t { frame_top, frame_bottom, transistor_top, transistor_bottom };

  // A contact: position `index` on one side of the frame or of a transistor.
  struct Port {
    PortOwner owner = PortOwner::frame_top;
    TransistorId transistor = 0;
    std::uint32_t index = 0;

    bool operator==(Port const&) const = default;
  };

  // The ordered contact lists of a transistor. `top` lists the wires whose
  // lower end sits on the top side (left to right); `bottom` the wires whose
  // upper end sits on the bottom side.
  struct Transistor {
    std::vector<WireId> top;
    std::vector<WireId> bottom;

    bool operator==(Transistor const&) const = default;
  };

  // A braided diagram as a pure incidence structure. Wire ids are the indices
  // into `labels`, transistor ids the indices into `transistors`. No crossing
  // or embedding data is stored.
  //
  // Every wire appears exactly once in a "top attachment" list (frame_top or
  // some transistor's `bottom`) and exactly once in a "bottom attachment"
  // list (frame_bottom or some transistor's `top`). Operations take diagrams
  // by const reference and return new values.
  struct Diagram {
    PresentationPtr presentation;
    bool annular = false;
    std::vector<Letter> labels;
    std::vector<WireId> frame_top;
    std::vector<WireId> frame_bottom;
    std::vector<Transistor> transistors;

    std::size_t wire_count() const noexcept {
      return labels.size();
    }
    std::size_t transistor_count() const noexcept {
      return transistors.size();
    }
  };

  // Where each wire ends. upper[w] is on the frame top or a transistor bottom;
  // lower[w] on the frame bottom or a transistor top. Requires port bijectivity.
  struct Incidence {
    std::vector<Port> upper;
    std::vector<Port> lower;
  };

  Incidence incidence(Diagram const& d);

  std::vector<Violation> validate_diagram(Diagram const& d);
  // Throws Error("invalid_diagram") listing the first violation.
  void require_valid(Diagram const& d);

  // Transistors ordered bottom to top, or nullopt when < is not a strict order.
  std::optional<std::vector<TransistorId>> topological_order(Diagram const& d);

  LetterWord top_letters(Diagram const& d);
  LetterWord bottom_letters(Diagram const& d);
  LetterWord top_letters(Diagram const& d, Transistor const& t);
  LetterWord bottom_letters(Diagram const& d, Transistor const& t);
  Word top_label(Diagram const& d);
  Word bottom_label(Diagram const& d);

  // d1 stacked on top of d2.
  Diagram concatenate(Diagram const& d1, Diagram const& d2);
  // Top/bottom reflection.
  Diagram invert(Diagram const& d);

  bool is_permutation(Diagram const& d);
  bool is_thin(Diagram const& d);

  // reach[i][j] is true iff transistor i < transistor j (i strictly below j).
  std::vector<std::vector<bool>> transistor_order(Diagram const& d);

  // Deletes every wire labelled g; the result lives over erase_generator(P, g).
  Diagram erase_letter(Diagram const& d, Generator const& g);

  bool is_planar(Diagram const& d);
  bool is_annular(Diagram const& d);

  // A transistor-free diagram with top label `top`; the i-th bottom contact is
  // the wire leaving top position bottom_order[i]. Empty order = identity.
  Diagram permutation_diagram(PresentationPtr p, Word const& top,
                              std::span<std::size_t const> bottom_order = {});

  // One transistor consuming the frame-top wires at `positions` (in that
  // left-to-right order) and emitting wires labelled `emitted`. The frame
  // bottom lists the untouched wires in order followed by the emitted ones.
  Diagram single_transistor_diagram(PresentationPtr p, Word const& top,
                                    std::span<std::size_t const> positions,
                                    Word const& emitted);

  // Drops wires and transistors no list refers to, keeping relative order.
  Diagram compact(Diagram const& d, std::vector<bool> const& keep_wire,
                  std::vector<bool> const& keep_transistor);

}  // namespace qdg
