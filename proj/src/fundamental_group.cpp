#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "qdg/error.hpp"
#include "qdg/topology.hpp"

namespace qdg {

  GroupPresentation fundamental_group(SimplicialComplex const& k, std::size_t spanning_tree_seed) {
    if (connected_components(k) != 1) {
      throw Error("disconnected", "the fundamental group needs a connected complex");
    }
    if (!k.complete_through(2)) {
      throw Error("insufficient_dimension", "the fundamental group needs the 2-skeleton");
    }
    auto const nb = k.adjacency();
    auto const root = k.simplex(0, spanning_tree_seed % k.vertex_count())[0];

    // breadth-first tree, neighbors in index order
    std::set<std::pair<VertexId, VertexId>> tree;
    std::vector<bool> seen(k.labels().size(), false);
    std::deque<VertexId> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto u : nb[v]) {
        if (!seen[u]) {
          seen[u] = true;
          tree.emplace(std::min(u, v), std::max(u, v));
          queue.push_back(u);
        }
      }
    }

    GroupPresentation p;
    std::map<std::pair<VertexId, VertexId>, int> generator;
    for (std::size_t i = 0; i < k.count(1); ++i) {
      auto e = k.simplex(1, i);
      std::pair<VertexId, VertexId> key{e[0], e[1]};
      if (!tree.count(key)) {
        generator[key] = static_cast<int>(++p.generators);
      }
    }
    // the edge u->v (u < v) is generator g; v->u its inverse
    auto letter = [&](VertexId u, VertexId v) {
      auto it = generator.find({u, v});
      return it == generator.end() ? 0 : it->second;
    };
    for (std::size_t i = 0; i < k.count(2); ++i) {
      auto t = k.simplex(2, i);
      // a -> b -> c -> a
      std::vector<int> r;
      for (int g : {letter(t[0], t[1]), letter(t[1], t[2]), -letter(t[0], t[2])}) {
        if (g != 0) {
          r.push_back(g);
        }
      }
      p.relators.push_back(std::move(r));
    }
    return p;
  }

  namespace {
    // Free and cyclic reduction.
    void reduce_word(std::vector<int>& w) {
      std::vector<int> out;
      for (int g : w) {
        if (!out.empty() && out.back() == -g) {
          out.pop_back();
        } else {
          out.push_back(g);
        }
      }
      std::size_t a = 0, b = out.size();
      while (b - a >= 2 && out[a] == -out[b - 1]) {
        ++a;
        --b;
      }
      w.assign(out.begin() + static_cast<std::ptrdiff_t>(a), out.begin() + static_cast<std::ptrdiff_t>(b));
    }

    std::vector<int> inverse_word(std::vector<int> const& w) {
      std::vector<int> out(w.rbegin(), w.rend());
      for (auto& g : out) {
        g = -g;
      }
      return out;
    }

    void normalize(std::vector<std::vector<int>>& relators) {
      for (auto& r : relators) {
        reduce_word(r);
      }
      std::erase_if(relators, [](auto const& r) { return r.empty(); });
      std::sort(relators.begin(), relators.end());
      relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
    }
  }  // namespace

  TietzeResult tietze_simplify(GroupPresentation p, std::size_t move_budget) {
    TietzeResult out;
    std::vector<bool> alive(p.generators + 1, true);
    std::size_t remaining = p.generators;
    normalize(p.relators);
    while (remaining > 0 && !p.relators.empty()) {
      if (out.moves >= move_budget) {
        out.budget_exhausted = true;
        break;
      }
      // shortest relator with a generator occurring exactly once
      std::size_t best = p.relators.size();
      int gen = 0;
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        auto const& r = p.relators[i];
        if (best < p.relators.size() && r.size() >= p.relators[best].size()) {
          continue;
        }
        std::map<int, int> count;
        for (int g : r) {
          ++count[std::abs(g)];
        }
        for (auto const& [g, c] : count) {
          if (c == 1) {
            best = i;
            gen = g;
            break;
          }
        }
      }
      if (best == p.relators.size()) {
        break;
      }
      // rotate r to g^e w, so g = w^-1 (e = 1) or g = w (e = -1)
      auto r = p.relators[best];
      auto at = std::find_if(r.begin(), r.end(), [&](int g) { return std::abs(g) == gen; });
      std::rotate(r.begin(), at, r.end());
      int const sign = r.front() > 0 ? 1 : -1;
      std::vector<int> w(r.begin() + 1, r.end());
      auto const image = sign > 0 ? inverse_word(w) : w;
      auto const image_inv = inverse_word(image);

      p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(best));
      for (auto& rel : p.relators) {
        if (std::none_of(rel.begin(), rel.end(), [&](int g) { return std::abs(g) == gen; })) {
          continue;
        }
        std::vector<int> next;
        for (int g : rel) {
          if (g == gen) {
            next.insert(next.end(), image.begin(), image.end());
          } else if (g == -gen) {
            next.insert(next.end(), image_inv.begin(), image_inv.end());
          } else {
            next.push_back(g);
          }
        }
        rel = std::move(next);
        ++out.moves;
      }
      alive[static_cast<std::size_t>(gen)] = false;
      --remaining;
      ++out.moves;
      normalize(p.relators);
    }

    // renumber the surviving generators
    std::vector<int> renumber(p.generators + 1, 0);
    int next = 0;
    for (std::size_t g = 1; g <= p.generators; ++g) {
      if (alive[g]) {
        renumber[g] = ++next;
      }
    }
    for (auto& r : p.relators) {
      for (auto& g : r) {
        g = g > 0 ? renumber[static_cast<std::size_t>(g)] : -renumber[static_cast<std::size_t>(-g)];
      }
    }
    out.presentation.generators = remaining;
    out.presentation.relators = std::move(p.relators);
    out.trivial = remaining == 0;
    return out;
  }

}  // namespace qdg
