#include "qdg/cubes.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qdg/rewriting.hpp"

namespace qdg {

  ComplexVertex make_vertex(Diagram const& d) {
    require_valid(d);
    auto r = reduce(d);
    auto code = canonical_code(r, CodeFlavor::bottom_unordered);
    return {std::move(r), std::move(code)};
  }

  bool operator==(ComplexVertex const& a, ComplexVertex const& b) {
    return a.code == b.code;
  }

  void validate_cube(MarkedCube const& c) {
    require_valid(c.delta);
    require_valid(c.psi);
    if (!is_thin(c.psi)) {
      throw Error("not_thin", "psi has two comparable transistors");
    }
    if (bottom_letters(c.delta) != top_letters(c.psi)) {
      throw Error("label_mismatch", "bottom of delta does not match top of psi");
    }
    auto sorted = c.numbering;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i) {
        sorted.clear();
        break;
      }
    }
    if (sorted.size() != c.psi.transistor_count()) {
      throw Error("bad_numbering", "numbering must list every transistor of psi once");
    }
  }

  ComplexVertex realize_cube(MarkedCube const& c, std::vector<bool> const& corner) {
    validate_cube(c);
    if (corner.size() != c.psi.transistor_count()) {
      throw Error("length_mismatch", "corner has " + std::to_string(corner.size()) + " bits, psi has "
                                         + std::to_string(c.psi.transistor_count()) + " transistors");
    }
    Diagram psi = c.psi;
    std::vector<bool> keep_wire(psi.wire_count(), true);
    std::vector<bool> keep_transistor(psi.transistor_count(), true);
    for (std::size_t i = 0; i < corner.size(); ++i) {
      if (corner[i]) {
        continue;
      }
      auto const t = c.numbering[i];
      auto const& tr = c.psi.transistors[t];
      keep_transistor[t] = false;
      // psi is thin: the bottom wires of tr end on the frame bottom
      auto& bottom = psi.frame_bottom;
      auto at = bottom.size();
      for (auto w : tr.bottom) {
        keep_wire[w] = false;
        auto pos = static_cast<std::size_t>(std::find(bottom.begin(), bottom.end(), w) - bottom.begin());
        at = std::min(at, pos);
      }
      std::erase_if(bottom, [&](WireId w) { return !keep_wire[w]; });
      bottom.insert(bottom.begin() + static_cast<std::ptrdiff_t>(at), tr.top.begin(), tr.top.end());
    }
    auto remaining = compact(psi, keep_wire, keep_transistor);
    return make_vertex(concatenate(c.delta, remaining));
  }

  namespace {
    // Frame-top positions wired into the only transistor of d.
    std::vector<std::size_t> consumed_positions(Diagram const& d) {
      if (d.transistor_count() != 1) {
        throw Error("arity_mismatch", "expected a single-transistor diagram");
      }
      auto inc = incidence(d);
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < d.frame_top.size(); ++i) {
        if (inc.lower[d.frame_top[i]].owner == PortOwner::transistor_top) {
          out.push_back(i);
        }
      }
      return out;
    }
  }  // namespace

  bool are_disjoint(Diagram const& psi1, Diagram const& psi2) {
    auto s1 = consumed_positions(psi1);
    auto s2 = consumed_positions(psi2);
    if (top_label(psi1) != top_label(psi2)) {
      throw Error("label_mismatch", "single-transistor diagrams have different top labels");
    }
    std::vector<std::size_t> both;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(both));
    return both.empty();
  }

  DiagramLink link_from_diagrams(ComplexVertex const& v, int max_dim) {
    auto const& d = v.representative;
    auto const p = d.presentation;
    auto const w = bottom_label(d);
    auto const letters = bottom_letters(d);

    DiagramLink out;
    std::map<CanonicalCode, std::size_t> seen;
    std::vector<std::vector<std::size_t>> used;

    auto consider = [&](LetterWord const& source, Word const& target) {
      // all injective position sequences reading `source`
      std::vector<std::size_t> chosen;
      std::vector<bool> taken(letters.size(), false);
      std::function<void()> pick = [&] {
        if (chosen.size() == source.size()) {
          auto move = single_transistor_diagram(p, w, chosen, target);
          auto code = canonical_code(move, CodeFlavor::bottom_unordered);
          if (seen.emplace(code, out.moves.size()).second) {
            out.moves.push_back(std::move(move));
            auto s = chosen;
            std::sort(s.begin(), s.end());
            used.push_back(std::move(s));
          }
          return;
        }
        for (std::size_t i = 0; i < letters.size(); ++i) {
          if (!taken[i] && letters[i] == source[chosen.size()]) {
            taken[i] = true;
            chosen.push_back(i);
            pick();
            chosen.pop_back();
            taken[i] = false;
          }
        }
      };
      pick();
    };
    for (auto const& r : p->relations()) {
      consider(p->to_letters(r.lhs), r.rhs);
      consider(p->to_letters(r.rhs), r.lhs);
    }

    std::vector<std::string> labels;
    std::vector<std::vector<VertexId>> nb(out.moves.size());
    for (std::size_t i = 0; i < out.moves.size(); ++i) {
      labels.emplace_back();
      for (std::size_t j = 0; j < out.moves.size(); ++j) {
        std::vector<std::size_t> both;
        std::set_intersection(used[i].begin(), used[i].end(), used[j].begin(), used[j].end(),
                              std::back_inserter(both));
        if (i != j && both.empty()) {
          nb[i].push_back(static_cast<VertexId>(j));
        }
      }
    }

    // (m,n,p) coordinates over <x,a | x = xax>
    if (*p == *qv_presentation()) {
      auto const x = *p->letter(letter_x());
      std::vector<std::uint32_t> rank(letters.size());
      std::uint32_t xs = 0, as = 0;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        rank[i] = letters[i] == x ? ++xs : ++as;
      }
      for (std::size_t i = 0; i < out.moves.size(); ++i) {
        auto const& m = out.moves[i];
        auto inc = incidence(m);
        // top contacts of the transistor in order, as frame-top positions
        std::vector<std::uint32_t> pos;
        for (auto wire : m.transistors[0].top) {
          pos.push_back(inc.upper[wire].index);
        }
        out.coordinates.push_back(pos.size() == 1 ? LinkVertex::up(rank[pos[0]])
                                                  : LinkVertex::descending(rank[pos[0]], rank[pos[2]],
                                                                           rank[pos[1]]));
        labels[i] = to_string(out.coordinates.back());
      }
    } else {
      for (std::size_t i = 0; i < out.moves.size(); ++i) {
        labels[i] = to_hex(canonical_code(out.moves[i], CodeFlavor::bottom_unordered));
      }
    }
    out.complex = SimplicialComplex::clique_complex(std::move(labels), nb, max_dim);
    return out;
  }

  std::size_t filtration_level(ComplexVertex const& v) {
    auto w = bottom_label(v.representative);
    auto xs = count_letter(w, letter_x());
    auto as = count_letter(w, letter_a());
    if (xs == 0 || as + 1 != xs || xs + as != w.size()) {
      throw Error("not_in_filtration", "bottom label " + to_string(w) + " is not a permutation of x^j a^(j-1)");
    }
    return xs;
  }

  bool same_orbit(ComplexVertex const& a, ComplexVertex const& b) {
    auto wa = bottom_label(a.representative);
    auto wb = bottom_label(b.representative);
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    return wa == wb;
  }

}  // namespace qdg
