#include "qdg/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qdg {

  namespace {
    std::string wire_name(std::size_t w) {
      return "wire " + std::to_string(w);
    }
    std::string transistor_name(std::size_t t) {
      return "transistor " + std::to_string(t);
    }

    template <typename F>
    void for_each_upper_list(Diagram const& d, F&& f) {
      f(d.frame_top, Port{PortOwner::frame_top, 0, 0});
      for (TransistorId t = 0; t < d.transistors.size(); ++t) {
        f(d.transistors[t].bottom, Port{PortOwner::transistor_bottom, t, 0});
      }
    }

    template <typename F>
    void for_each_lower_list(Diagram const& d, F&& f) {
      f(d.frame_bottom, Port{PortOwner::frame_bottom, 0, 0});
      for (TransistorId t = 0; t < d.transistors.size(); ++t) {
        f(d.transistors[t].top, Port{PortOwner::transistor_top, t, 0});
      }
    }
  }  // namespace

  Incidence incidence(Diagram const& d) {
    Incidence inc;
    inc.upper.resize(d.wire_count());
    inc.lower.resize(d.wire_count());
    for_each_upper_list(d, [&](std::vector<WireId> const& list, Port base) {
      for (std::uint32_t i = 0; i < list.size(); ++i) {
        if (list[i] < inc.upper.size()) {
          base.index = i;
          inc.upper[list[i]] = base;
        }
      }
    });
    for_each_lower_list(d, [&](std::vector<WireId> const& list, Port base) {
      for (std::uint32_t i = 0; i < list.size(); ++i) {
        if (list[i] < inc.lower.size()) {
          base.index = i;
          inc.lower[list[i]] = base;
        }
      }
    });
    return inc;
  }

  std::optional<std::vector<TransistorId>> topological_order(Diagram const& d) {
    auto const n = d.transistor_count();
    auto inc = incidence(d);
    std::vector<std::vector<TransistorId>> above(n);
    std::vector<std::size_t> indegree(n, 0);
    for (TransistorId t = 0; t < n; ++t) {
      for (auto w : d.transistors[t].top) {
        if (w >= d.wire_count()) {
          continue;
        }
        auto const& up = inc.upper[w];
        if (up.owner == PortOwner::transistor_bottom) {
          above[t].push_back(up.transistor);
          ++indegree[up.transistor];
        }
      }
    }
    std::vector<TransistorId> order;
    order.reserve(n);
    for (TransistorId t = 0; t < n; ++t) {
      if (indegree[t] == 0) {
        order.push_back(t);
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto s : above[order[i]]) {
        if (--indegree[s] == 0) {
          order.push_back(s);
        }
      }
    }
    if (order.size() != n) {
      return std::nullopt;
    }
    return order;
  }

  std::vector<Violation> validate_diagram(Diagram const& d) {
    std::vector<Violation> out;
    if (!d.presentation) {
      out.push_back({"no_presentation", "diagram has no presentation"});
      return out;
    }
    auto const alphabet_size = d.presentation->alphabet().size();
    if (d.wire_count() == 0) {
      out.push_back({"no_wires", "a diagram needs at least one wire"});
    }
    if (d.frame_top.empty() || d.frame_bottom.empty()) {
      out.push_back({"empty_frame_side", "frame top and bottom need at least one contact each"});
    }
    for (std::size_t w = 0; w < d.wire_count(); ++w) {
      if (d.labels[w] >= alphabet_size) {
        out.push_back({"unknown_letter", wire_name(w) + " has a label outside the alphabet"});
      }
    }

    std::vector<int> upper_hits(d.wire_count(), 0), lower_hits(d.wire_count(), 0);
    bool ids_ok = true;
    auto count_hits = [&](std::vector<int>& hits) {
      return [&](std::vector<WireId> const& list, Port) {
        for (auto w : list) {
          if (w >= hits.size()) {
            ids_ok = false;
            out.push_back({"unknown_wire", "contact refers to missing " + wire_name(w)});
          } else {
            ++hits[w];
          }
        }
      };
    };
    for_each_upper_list(d, count_hits(upper_hits));
    for_each_lower_list(d, count_hits(lower_hits));
    bool bijective = ids_ok;
    for (std::size_t w = 0; w < d.wire_count(); ++w) {
      if (upper_hits[w] != 1) {
        bijective = false;
        out.push_back({"port_mismatch", wire_name(w) + " has " + std::to_string(upper_hits[w])
                                            + " upper attachments, expected 1"});
      }
      if (lower_hits[w] != 1) {
        bijective = false;
        out.push_back({"port_mismatch", wire_name(w) + " has " + std::to_string(lower_hits[w])
                                            + " lower attachments, expected 1"});
      }
    }

    for (std::size_t t = 0; t < d.transistor_count(); ++t) {
      auto const& tr = d.transistors[t];
      if (tr.top.empty() || tr.bottom.empty()) {
        out.push_back({"empty_transistor_side", transistor_name(t) + " has an empty side"});
        continue;
      }
      if (!ids_ok) {
        continue;
      }
      bool labels_ok = true;
      for (auto const* side : {&tr.top, &tr.bottom}) {
        for (auto w : *side) {
          labels_ok = labels_ok && d.labels[w] < alphabet_size;
        }
      }
      if (labels_ok && !d.presentation->relates(top_letters(d, tr), bottom_letters(d, tr))) {
        out.push_back({"not_a_relation", transistor_name(t) + " labels are not a relation"});
      }
    }

    if (bijective && !topological_order(d)) {
      out.push_back({"order_not_strict", "the transistor order has a cycle"});
    }
    return out;
  }

  void require_valid(Diagram const& d) {
    auto v = validate_diagram(d);
    if (!v.empty()) {
      throw Error("invalid_diagram", v.front().code + ": " + v.front().message);
    }
  }

  LetterWord top_letters(Diagram const& d) {
    LetterWord out;
    for (auto w : d.frame_top) {
      out.push_back(d.labels[w]);
    }
    return out;
  }

  LetterWord bottom_letters(Diagram const& d) {
    LetterWord out;
    for (auto w : d.frame_bottom) {
      out.push_back(d.labels[w]);
    }
    return out;
  }

  LetterWord top_letters(Diagram const& d, Transistor const& t) {
    LetterWord out;
    for (auto w : t.top) {
      out.push_back(d.labels[w]);
    }
    return out;
  }

  LetterWord bottom_letters(Diagram const& d, Transistor const& t) {
    LetterWord out;
    for (auto w : t.bottom) {
      out.push_back(d.labels[w]);
    }
    return out;
  }

  Word top_label(Diagram const& d) {
    return d.presentation->to_word(top_letters(d));
  }

  Word bottom_label(Diagram const& d) {
    return d.presentation->to_word(bottom_letters(d));
  }

  Diagram compact(Diagram const& d, std::vector<bool> const& keep_wire,
                  std::vector<bool> const& keep_transistor) {
    std::vector<WireId> remap(d.wire_count(), 0);
    Diagram out;
    out.presentation = d.presentation;
    out.annular = d.annular;
    for (std::size_t w = 0; w < d.wire_count(); ++w) {
      if (keep_wire[w]) {
        remap[w] = static_cast<WireId>(out.labels.size());
        out.labels.push_back(d.labels[w]);
      }
    }
    auto map_list = [&](std::vector<WireId> const& list) {
      std::vector<WireId> r;
      r.reserve(list.size());
      for (auto w : list) {
        r.push_back(remap[w]);
      }
      return r;
    };
    out.frame_top = map_list(d.frame_top);
    out.frame_bottom = map_list(d.frame_bottom);
    for (std::size_t t = 0; t < d.transistor_count(); ++t) {
      if (keep_transistor[t]) {
        out.transistors.push_back({map_list(d.transistors[t].top), map_list(d.transistors[t].bottom)});
      }
    }
    return out;
  }

  Diagram concatenate(Diagram const& d1, Diagram const& d2) {
    if (!d1.presentation || !d2.presentation
        || (d1.presentation != d2.presentation && !(*d1.presentation == *d2.presentation))) {
      throw Error("presentation_mismatch", "cannot stack diagrams over different presentations");
    }
    if (d1.annular != d2.annular) {
      throw Error("mode_mismatch", "cannot stack an annular diagram with a non-annular one");
    }
    if (bottom_letters(d1) != top_letters(d2)) {
      throw Error("label_mismatch", "bottom label " + to_string(bottom_label(d1))
                                        + " does not match top label " + to_string(top_label(d2)));
    }
    auto const offset = static_cast<WireId>(d1.wire_count());
    std::vector<WireId> remap(d2.wire_count());
    for (WireId w = 0; w < d2.wire_count(); ++w) {
      remap[w] = w + offset;
    }
    std::vector<bool> keep(d1.wire_count() + d2.wire_count(), true);
    for (std::size_t i = 0; i < d2.frame_top.size(); ++i) {
      remap[d2.frame_top[i]] = d1.frame_bottom[i];
      keep[d2.frame_top[i] + offset] = false;
    }
    auto map_list = [&](std::vector<WireId> const& list) {
      std::vector<WireId> r;
      r.reserve(list.size());
      for (auto w : list) {
        r.push_back(remap[w]);
      }
      return r;
    };

    Diagram joined;
    joined.presentation = d1.presentation;
    joined.annular = d1.annular;
    joined.labels = d1.labels;
    joined.labels.insert(joined.labels.end(), d2.labels.begin(), d2.labels.end());
    joined.frame_top = d1.frame_top;
    joined.frame_bottom = map_list(d2.frame_bottom);
    joined.transistors = d1.transistors;
    for (auto const& t : d2.transistors) {
      joined.transistors.push_back({map_list(t.top), map_list(t.bottom)});
    }
    return compact(joined, keep, std::vector<bool>(joined.transistor_count(), true));
  }

  Diagram invert(Diagram const& d) {
    Diagram out = d;
    std::swap(out.frame_top, out.frame_bottom);
    for (auto& t : out.transistors) {
      std::swap(t.top, t.bottom);
    }
    return out;
  }

  bool is_permutation(Diagram const& d) {
    return d.transistors.empty();
  }

  bool is_thin(Diagram const& d) {
    // any comparable pair forces a wire running between two transistors
    auto inc = incidence(d);
    for (auto const& t : d.transistors) {
      for (auto w : t.top) {
        if (inc.upper[w].owner == PortOwner::transistor_bottom) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<bool>> transistor_order(Diagram const& d) {
    auto const n = d.transistor_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    auto order = topological_order(d);
    if (!order) {
      throw Error("order_not_strict", "the transistor order has a cycle");
    }
    auto inc = incidence(d);
    // walk top to bottom so every successor's row is complete
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
      auto t = *it;
      for (auto w : d.transistors[t].top) {
        auto const& up = inc.upper[w];
        if (up.owner != PortOwner::transistor_bottom) {
          continue;
        }
        reach[t][up.transistor] = true;
        for (std::size_t s = 0; s < n; ++s) {
          if (reach[up.transistor][s]) {
            reach[t][s] = true;
          }
        }
      }
    }
    return reach;
  }

  Diagram erase_letter(Diagram const& d, Generator const& g) {
    auto induced = erase_generator(*d.presentation, g);
    auto problems = validate(induced);
    if (!problems.empty()) {
      throw Error("invalid_induced_presentation",
                  "erasing '" + g.name + "' gives an invalid presentation: " + problems.front().message);
    }
    PresentationPtr target = (induced == *v_presentation())
                                 ? v_presentation()
                                 : std::make_shared<Presentation const>(std::move(induced));

    auto erased = d.presentation->letter(g);
    std::vector<Letter> relabel(d.presentation->alphabet().size(), 0);
    for (Letter l = 0; l < relabel.size(); ++l) {
      if (!erased || l != *erased) {
        relabel[l] = *target->letter(d.presentation->generator(l));
      }
    }

    std::vector<bool> keep(d.wire_count(), true);
    for (std::size_t w = 0; w < d.wire_count(); ++w) {
      keep[w] = !erased || d.labels[w] != *erased;
    }
    Diagram filtered = d;
    auto drop = [&](std::vector<WireId>& list) {
      std::erase_if(list, [&](WireId w) { return !keep[w]; });
    };
    drop(filtered.frame_top);
    drop(filtered.frame_bottom);
    if (filtered.frame_top.empty() || filtered.frame_bottom.empty()) {
      throw Error("empty_side", "erasing '" + g.name + "' empties a side of the frame");
    }
    for (std::size_t t = 0; t < filtered.transistor_count(); ++t) {
      drop(filtered.transistors[t].top);
      drop(filtered.transistors[t].bottom);
      if (filtered.transistors[t].top.empty() || filtered.transistors[t].bottom.empty()) {
        throw Error("empty_side", "erasing '" + g.name + "' empties a side of " + transistor_name(t));
      }
    }
    auto out = compact(filtered, keep, std::vector<bool>(d.transistor_count(), true));
    out.presentation = target;
    for (auto& l : out.labels) {
      l = relabel[l];
    }
    return out;
  }

  Diagram permutation_diagram(PresentationPtr p, Word const& top,
                              std::span<std::size_t const> bottom_order) {
    Diagram d;
    d.labels = p->to_letters(top);
    d.presentation = std::move(p);
    d.frame_top.resize(top.size());
    std::iota(d.frame_top.begin(), d.frame_top.end(), WireId{0});
    if (bottom_order.empty()) {
      d.frame_bottom = d.frame_top;
    } else {
      if (bottom_order.size() != top.size()) {
        throw Error("bad_permutation", "bottom order has the wrong length");
      }
      std::vector<bool> seen(top.size(), false);
      for (auto i : bottom_order) {
        if (i >= top.size() || seen[i]) {
          throw Error("bad_permutation", "bottom order is not a permutation");
        }
        seen[i] = true;
        d.frame_bottom.push_back(static_cast<WireId>(i));
      }
    }
    return d;
  }

  Diagram single_transistor_diagram(PresentationPtr p, Word const& top,
                                    std::span<std::size_t const> positions,
                                    Word const& emitted) {
    auto d = permutation_diagram(p, top);
    std::vector<bool> used(top.size(), false);
    Transistor t;
    for (auto i : positions) {
      if (i >= top.size() || used[i]) {
        throw Error("bad_positions", "transistor positions must be distinct frame positions");
      }
      used[i] = true;
      t.top.push_back(static_cast<WireId>(i));
    }
    d.frame_bottom.clear();
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (!used[i]) {
        d.frame_bottom.push_back(static_cast<WireId>(i));
      }
    }
    for (auto l : p->to_letters(emitted)) {
      auto w = static_cast<WireId>(d.labels.size());
      d.labels.push_back(l);
      t.bottom.push_back(w);
      d.frame_bottom.push_back(w);
    }
    d.transistors.push_back(std::move(t));
    return d;
  }

}  // namespace qdg
