#include "qdg/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qdg/error.hpp"

namespace qdg {

  namespace {
    // Appends every k-element subset of s (ascending) to out.
    void subsets_of_size(Simplex const& s, std::size_t k, std::vector<Simplex>& out) {
      if (k == 0 || k > s.size()) {
        return;
      }
      std::vector<bool> pick(s.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (pick[i]) {
            face.push_back(s[i]);
          }
        }
        out.push_back(std::move(face));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }  // namespace

  void SimplicialComplex::append(int d, std::span<VertexId const> s) {
    if (static_cast<int>(_flat.size()) <= d) {
      _flat.resize(static_cast<std::size_t>(d) + 1);
    }
    auto& row = _flat[static_cast<std::size_t>(d)];
    row.insert(row.end(), s.begin(), s.end());
  }

  std::size_t SimplicialComplex::count(int d) const noexcept {
    if (d < 0 || d >= static_cast<int>(_flat.size())) {
      return 0;
    }
    return _flat[static_cast<std::size_t>(d)].size() / static_cast<std::size_t>(d + 1);
  }

  std::span<VertexId const> SimplicialComplex::simplex(int d, std::size_t i) const {
    auto const w = static_cast<std::size_t>(d + 1);
    return std::span<VertexId const>(_flat.at(static_cast<std::size_t>(d)).data() + i * w, w);
  }

  std::optional<std::size_t> SimplicialComplex::index_of(std::span<VertexId const> s) const {
    if (s.empty()) {
      return std::nullopt;
    }
    int const d = static_cast<int>(s.size()) - 1;
    std::size_t lo = 0, hi = count(d);
    while (lo < hi) {
      auto mid = lo + (hi - lo) / 2;
      auto t = simplex(d, mid);
      if (std::lexicographical_compare(t.begin(), t.end(), s.begin(), s.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo < count(d) && std::equal(s.begin(), s.end(), simplex(d, lo).begin())) {
      return lo;
    }
    return std::nullopt;
  }

  std::vector<Simplex> SimplicialComplex::simplices(int d) const {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < count(d); ++i) {
      auto s = simplex(d, i);
      out.emplace_back(s.begin(), s.end());
    }
    return out;
  }

  SimplicialComplex SimplicialComplex::skeleton(int d) const {
    SimplicialComplex out;
    out._labels = _labels;
    out._cap = (_cap < 0 || _cap > d) ? d : _cap;
    for (int i = 0; i <= d && i <= dimension(); ++i) {
      out._flat.push_back(_flat[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  std::vector<std::vector<VertexId>> SimplicialComplex::adjacency() const {
    std::vector<std::vector<VertexId>> nb(_labels.size());
    for (std::size_t i = 0; i < count(1); ++i) {
      auto e = simplex(1, i);
      nb[e[0]].push_back(e[1]);
      nb[e[1]].push_back(e[0]);
    }
    for (auto& n : nb) {
      std::sort(n.begin(), n.end());
    }
    return nb;
  }

  SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> labels,
                                                      std::vector<Simplex> const& simplices,
                                                      int max_dim) {
    std::vector<std::set<Simplex>> faces;
    for (auto s : simplices) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (s.empty()) {
        continue;
      }
      if (s.back() >= labels.size()) {
        throw Error("unknown_vertex", "simplex refers to vertex " + std::to_string(s.back())
                                          + " of a complex with " + std::to_string(labels.size()));
      }
      auto const top = max_dim < 0 ? s.size() : std::min(s.size(), static_cast<std::size_t>(max_dim) + 1);
      if (faces.size() < top) {
        faces.resize(top);
      }
      for (std::size_t k = 1; k <= top; ++k) {
        std::vector<Simplex> sub;
        subsets_of_size(s, k, sub);
        faces[k - 1].insert(sub.begin(), sub.end());
      }
    }
    SimplicialComplex out;
    out._labels = std::move(labels);
    out._cap = max_dim;
    for (std::size_t d = 0; d < faces.size(); ++d) {
      for (auto const& s : faces[d]) {
        out.append(static_cast<int>(d), s);
      }
    }
    return out;
  }

  SimplicialComplex SimplicialComplex::clique_complex(std::vector<std::string> labels,
                                                      std::vector<std::vector<VertexId>> const& neighbors,
                                                      int max_dim) {
    SimplicialComplex out;
    out._cap = max_dim;
    auto const n = labels.size();
    out._labels = std::move(labels);
    Simplex current;
    // candidates: common neighbors of `current` greater than its last vertex
    std::function<void(std::vector<VertexId> const&)> extend = [&](std::vector<VertexId> const& candidates) {
      out.append(static_cast<int>(current.size()) - 1, current);
      if (max_dim >= 0 && static_cast<int>(current.size()) > max_dim) {
        return;
      }
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        auto const v = candidates[i];
        std::vector<VertexId> next;
        auto const& nb = neighbors[v];
        std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                              nb.begin(), nb.end(), std::back_inserter(next));
        current.push_back(v);
        extend(next);
        current.pop_back();
      }
    };
    for (VertexId v = 0; v < n; ++v) {
      std::vector<VertexId> up;
      for (auto u : neighbors[v]) {
        if (u > v) {
          up.push_back(u);
        }
      }
      current = {v};
      extend(up);
    }
    // DFS emits each dimension in lexicographic order; nothing to sort
    return out;
  }

  bool is_flag(SimplicialComplex const& k) {
    std::vector<std::vector<VertexId>> nb = k.adjacency();
    auto cliques = SimplicialComplex::clique_complex(k.labels(), nb, k.stored_dimension());
    for (int d = 1; d <= cliques.dimension(); ++d) {
      if (cliques.count(d) != k.count(d)) {
        return false;
      }
    }
    return true;
  }

  bool full_subcomplex_check(SimplicialComplex const& sub, SimplicialComplex const& ambient,
                             std::vector<VertexId> const& injection) {
    std::vector<long> preimage(ambient.labels().size(), -1);
    for (std::size_t i = 0; i < sub.count(0); ++i) {
      auto v = sub.simplex(0, i)[0];
      if (v >= injection.size() || injection[v] >= ambient.labels().size()) {
        throw Error("not_injective", "injection does not cover every vertex of the subcomplex");
      }
      if (preimage[injection[v]] >= 0) {
        throw Error("not_injective", "two vertices map to ambient vertex " + std::to_string(injection[v]));
      }
      preimage[injection[v]] = v;
    }
    int const top = std::max(sub.dimension(), ambient.dimension());
    for (int d = 0; d <= top; ++d) {
      if (!sub.complete_through(d) || !ambient.complete_through(d)) {
        break;
      }
      for (std::size_t i = 0; i < sub.count(d); ++i) {
        Simplex image;
        for (auto v : sub.simplex(d, i)) {
          image.push_back(injection[v]);
        }
        std::sort(image.begin(), image.end());
        if (!ambient.contains(image)) {
          return false;
        }
      }
      for (std::size_t i = 0; i < ambient.count(d); ++i) {
        Simplex back;
        bool inside = true;
        for (auto v : ambient.simplex(d, i)) {
          if (preimage[v] < 0) {
            inside = false;
            break;
          }
          back.push_back(static_cast<VertexId>(preimage[v]));
        }
        if (!inside) {
          continue;
        }
        std::sort(back.begin(), back.end());
        if (!sub.contains(back)) {
          return false;
        }
      }
    }
    return true;
  }

  SimplicialComplex simplicial_neighborhood(SimplicialComplex const& k, VertexId v, int skeleton_dim) {
    if (!k.has_vertex(v)) {
      throw Error("unknown_vertex", "vertex " + std::to_string(v) + " is not in the complex");
    }
    auto const nb = k.adjacency();
    auto const& around = nb[v];
    SimplicialComplex out;
    out._labels = k.labels();
    out._cap = skeleton_dim;
    int const top = std::min(skeleton_dim, k.dimension());
    for (int d = 0; d <= top; ++d) {
      for (std::size_t i = 0; i < k.count(d); ++i) {
        auto s = k.simplex(d, i);
        if (std::find(s.begin(), s.end(), v) != s.end()) {
          out.append(d, s);
          continue;
        }
        bool in_star;
        if (k.complete_through(d + 1)) {
          Simplex cone(s.begin(), s.end());
          cone.insert(std::upper_bound(cone.begin(), cone.end(), v), v);
          in_star = k.contains(cone);
        } else {
          in_star = std::all_of(s.begin(), s.end(), [&](VertexId u) {
            return std::binary_search(around.begin(), around.end(), u);
          });
        }
        if (in_star) {
          out.append(d, s);
        }
      }
    }
    // faces of cones over v are cones over v, so `out` is closed and sorted
    return out;
  }

  SimplicialComplex nerve_of_cover(std::vector<SimplicialComplex> const& members, int max_dim) {
    std::size_t ambient = 0;
    for (auto const& m : members) {
      ambient = std::max(ambient, m.labels().size());
    }
    std::vector<Simplex> owners(ambient);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members[i].count(0); ++j) {
        owners[members[i].simplex(0, j)[0]].push_back(static_cast<VertexId>(i));
      }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < members.size(); ++i) {
      labels.push_back("U" + std::to_string(i));
    }
    std::sort(owners.begin(), owners.end());
    owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
    return SimplicialComplex::from_simplices(std::move(labels), owners, max_dim);
  }

  SimplicialComplex full_subcomplex(SimplicialComplex const& k, std::vector<bool> const& keep) {
    SimplicialComplex out;
    out._labels = k.labels();
    out._cap = k.stored_dimension();
    for (int d = 0; d <= k.dimension(); ++d) {
      for (std::size_t i = 0; i < k.count(d); ++i) {
        auto s = k.simplex(d, i);
        if (std::all_of(s.begin(), s.end(), [&](VertexId v) { return keep[v]; })) {
          out.append(d, s);
        }
      }
    }
    return out;
  }

}  // namespace qdg
