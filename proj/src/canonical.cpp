#include "qdg/canonical.hpp"

#include <algorithm>
#include <limits>

namespace qdg {

  namespace {
    constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();

    struct Numbering {
      std::vector<std::uint32_t> wire;        // old id -> canonical id
      std::vector<std::uint32_t> transistor;  // old id -> canonical id
      std::vector<WireId> wire_order;         // canonical id -> old id
      std::vector<TransistorId> transistor_order;
    };

    Numbering traverse(Diagram const& d) {
      Numbering n;
      n.wire.assign(d.wire_count(), unseen);
      n.transistor.assign(d.transistor_count(), unseen);
      auto inc = incidence(d);

      auto visit_wire = [&](WireId w) {
        if (n.wire[w] == unseen) {
          n.wire[w] = static_cast<std::uint32_t>(n.wire_order.size());
          n.wire_order.push_back(w);
        }
      };
      auto visit_transistor = [&](TransistorId t) {
        if (n.transistor[t] != unseen) {
          return;
        }
        n.transistor[t] = static_cast<std::uint32_t>(n.transistor_order.size());
        n.transistor_order.push_back(t);
        for (auto w : d.transistors[t].bottom) {
          visit_wire(w);
        }
        for (auto w : d.transistors[t].top) {
          visit_wire(w);
        }
      };

      for (auto w : d.frame_top) {
        visit_wire(w);
      }
      // wire_order doubles as the queue
      for (std::size_t head = 0; head < n.wire_order.size(); ++head) {
        auto w = n.wire_order[head];
        if (inc.upper[w].owner == PortOwner::transistor_bottom) {
          visit_transistor(inc.upper[w].transistor);
        }
        if (inc.lower[w].owner == PortOwner::transistor_top) {
          visit_transistor(inc.lower[w].transistor);
        }
      }
      if (n.wire_order.size() != d.wire_count() || n.transistor_order.size() != d.transistor_count()) {
        throw Error("unreachable_component", "diagram has parts not reachable from the frame top");
      }
      return n;
    }

    std::vector<std::uint32_t> canonical_bottom(Diagram const& d, Numbering const& n,
                                                CodeFlavor flavor) {
      std::vector<std::uint32_t> bottom;
      for (auto w : d.frame_bottom) {
        bottom.push_back(n.wire[w]);
      }
      if (flavor == CodeFlavor::bottom_unordered) {
        std::sort(bottom.begin(), bottom.end());
      } else if (flavor == CodeFlavor::bottom_cyclic && !bottom.empty()) {
        auto best = bottom;
        for (std::size_t r = 1; r < bottom.size(); ++r) {
          std::rotate(bottom.begin(), bottom.begin() + 1, bottom.end());
          if (bottom < best) {
            best = bottom;
          }
        }
        bottom = std::move(best);
      }
      return bottom;
    }

    void put(std::vector<std::uint8_t>& out, std::uint64_t v) {
      do {
        std::uint8_t byte = v & 0x7f;
        v >>= 7;
        out.push_back(v ? static_cast<std::uint8_t>(byte | 0x80) : byte);
      } while (v);
    }

    void put_list(std::vector<std::uint8_t>& out, std::vector<std::uint32_t> const& xs) {
      put(out, xs.size());
      for (auto x : xs) {
        put(out, x);
      }
    }
  }  // namespace

  CanonicalCode canonical_code(Diagram const& d, CodeFlavor flavor) {
    auto n = traverse(d);
    CanonicalCode code;
    code.flavor = flavor;
    auto& out = code.bytes;
    out.push_back(d.annular ? 1 : 0);
    put(out, d.wire_count());
    put(out, d.transistor_count());
    for (auto w : n.wire_order) {
      auto const& name = d.presentation->generator(d.labels[w]).name;
      put(out, name.size());
      out.insert(out.end(), name.begin(), name.end());
    }
    auto renumber = [&](std::vector<WireId> const& list) {
      std::vector<std::uint32_t> r;
      r.reserve(list.size());
      for (auto w : list) {
        r.push_back(n.wire[w]);
      }
      return r;
    };
    for (auto t : n.transistor_order) {
      put_list(out, renumber(d.transistors[t].top));
      put_list(out, renumber(d.transistors[t].bottom));
    }
    put_list(out, renumber(d.frame_top));
    put_list(out, canonical_bottom(d, n, flavor));
    return code;
  }

  bool is_equivalent(Diagram const& d1, Diagram const& d2, CodeFlavor flavor) {
    return canonical_code(d1, flavor) == canonical_code(d2, flavor);
  }

  Diagram canonical_form(Diagram const& d, CodeFlavor flavor) {
    auto n = traverse(d);
    Diagram out;
    out.presentation = d.presentation;
    out.annular = d.annular;
    for (auto w : n.wire_order) {
      out.labels.push_back(d.labels[w]);
    }
    auto renumber = [&](std::vector<WireId> const& list) {
      std::vector<WireId> r;
      r.reserve(list.size());
      for (auto w : list) {
        r.push_back(n.wire[w]);
      }
      return r;
    };
    for (auto t : n.transistor_order) {
      out.transistors.push_back({renumber(d.transistors[t].top), renumber(d.transistors[t].bottom)});
    }
    out.frame_top = renumber(d.frame_top);
    auto bottom = canonical_bottom(d, n, flavor);
    out.frame_bottom.assign(bottom.begin(), bottom.end());
    return out;
  }

  std::string to_hex(CanonicalCode const& c) {
    static char const digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * c.bytes.size());
    for (auto b : c.bytes) {
      out += digits[b >> 4];
      out += digits[b & 0xf];
    }
    return out;
  }

  std::string to_string(CodeFlavor f) {
    switch (f) {
      case CodeFlavor::full:
        return "full";
      case CodeFlavor::bottom_unordered:
        return "bottom-unordered";
      case CodeFlavor::bottom_cyclic:
        return "bottom-cyclic";
    }
    return "full";
  }

  CodeFlavor parse_flavor(std::string const& s) {
    if (s == "full") {
      return CodeFlavor::full;
    }
    if (s == "bottom-unordered") {
      return CodeFlavor::bottom_unordered;
    }
    if (s == "bottom-cyclic") {
      return CodeFlavor::bottom_cyclic;
    }
    throw Error("bad_flavor", "unknown code flavor '" + s + "'");
  }

  std::size_t CanonicalCodeHash::operator()(CanonicalCode const& c) const noexcept {
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint8_t>(c.flavor);
    for (auto b : c.bytes) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

}  // namespace qdg
