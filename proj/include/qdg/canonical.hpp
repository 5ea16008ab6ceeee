#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qdg/diagram.hpp"

namespace qdg {

  // How much freedom the frame bottom has when comparing diagrams.
  //   full              - contact order matters (diagram equivalence)
  //   bottom_unordered  - any permutation of the bottom (vertices of the complex)
  //   bottom_cyclic     - rotations of the bottom only
  enum class CodeFlavor : std::uint8_t { full, bottom_unordered, bottom_cyclic };

  struct CanonicalCode {
    CodeFlavor flavor = CodeFlavor::full;
    std::vector<std::uint8_t> bytes;

    auto operator<=>(CanonicalCode const&) const = default;
  };

  // Breadth-first renumbering from the frame-top contacts: at each newly
  // reached transistor the bottom ports then the top ports are enqueued in
  // index order. Equal codes of equal flavor <=> equivalent diagrams.
  CanonicalCode canonical_code(Diagram const& d, CodeFlavor flavor = CodeFlavor::full);

  bool is_equivalent(Diagram const& d1, Diagram const& d2, CodeFlavor flavor = CodeFlavor::full);

  // The representative whose ids follow the canonical numbering; for the
  // looser flavors the frame bottom is put in its canonical order too.
  Diagram canonical_form(Diagram const& d, CodeFlavor flavor = CodeFlavor::full);

  std::string to_hex(CanonicalCode const& c);
  std::string to_string(CodeFlavor f);
  CodeFlavor parse_flavor(std::string const& s);

  struct CanonicalCodeHash {
    std::size_t operator()(CanonicalCode const& c) const noexcept;
  };

}  // namespace qdg
