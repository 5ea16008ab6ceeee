#include "qdg/links.hpp"

#include <algorithm>
#include <cctype>

#include "qdg/error.hpp"

namespace qdg {

  std::string to_string(Family f) {
    switch (f) {
      case Family::QF: return "QF";
      case Family::QT: return "QT";
      case Family::QV: return "QV";
    }
    return "?";
  }

  Family parse_family(std::string const& s) {
    std::string lower;
    for (char c : s) {
      lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (lower == "qf") {
      return Family::QF;
    }
    if (lower == "qt") {
      return Family::QT;
    }
    if (lower == "qv") {
      return Family::QV;
    }
    throw Error("bad_family", "family must be qf, qt or qv, got '" + s + "'");
  }

  std::string to_string(LinkVertex const& v) {
    if (v.ascending) {
      return "(" + std::to_string(v.m) + ")";
    }
    return "(" + std::to_string(v.m) + "," + std::to_string(v.n) + "," + std::to_string(v.p) + ")";
  }

  bool compatible(LinkVertex const& a, LinkVertex const& b) {
    auto uses = [](LinkVertex const& v, std::uint32_t slot) {
      return v.m == slot || (!v.ascending && v.n == slot);
    };
    if (uses(b, a.m) || (!a.ascending && uses(b, a.n))) {
      return false;
    }
    return a.ascending || b.ascending || a.p != b.p;
  }

  SimplicialComplex link_complex(std::vector<LinkVertex> const& vertices, int max_dim) {
    std::vector<std::string> labels;
    std::vector<std::vector<VertexId>> nb(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      labels.push_back(to_string(vertices[i]));
      for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (i != j && compatible(vertices[i], vertices[j])) {
          nb[i].push_back(static_cast<VertexId>(j));
        }
      }
    }
    return SimplicialComplex::clique_complex(std::move(labels), nb, max_dim);
  }

  namespace {
    Link make_link(Family family, bool descending_only, std::size_t k, std::size_t l,
                   std::vector<LinkVertex> vertices, int max_dim) {
      std::sort(vertices.begin(), vertices.end());
      Link out;
      out.family = family;
      out.descending_only = descending_only;
      out.k = k;
      out.l = l;
      out.complex = link_complex(vertices, max_dim);
      out.vertices = std::move(vertices);
      return out;
    }

    std::vector<LinkVertex> descending_vertices(std::size_t k, std::size_t l, Family family) {
      std::vector<LinkVertex> vs;
      auto const K = static_cast<std::uint32_t>(k);
      auto const L = static_cast<std::uint32_t>(l);
      for (std::uint32_t p = 1; p <= L; ++p) {
        if (family == Family::QV) {
          for (std::uint32_t m = 1; m <= K; ++m) {
            for (std::uint32_t n = 1; n <= K; ++n) {
              if (m != n) {
                vs.push_back(LinkVertex::descending(m, n, p));
              }
            }
          }
          continue;
        }
        for (std::uint32_t m = 1; m < K; ++m) {
          vs.push_back(LinkVertex::descending(m, m + 1, p));
        }
        if (family == Family::QT && K >= 2) {
          vs.push_back(LinkVertex::descending(K, 1, p));
        }
      }
      return vs;
    }
  }  // namespace

  Link abstract_link(std::size_t k, std::size_t l, int max_dim) {
    auto vs = descending_vertices(k, l, Family::QV);
    for (std::uint32_t m = 1; m <= k; ++m) {
      vs.push_back(LinkVertex::up(m));
    }
    return make_link(Family::QV, false, k, l, std::move(vs), max_dim);
  }

  Link abstract_descending_link(std::size_t k, std::size_t l, Family family, int max_dim) {
    return make_link(family, true, k, l, descending_vertices(k, l, family), max_dim);
  }

  Link segmented_descending_link(std::vector<std::size_t> const& blocks, std::size_t l, int max_dim) {
    std::vector<LinkVertex> vs;
    std::uint32_t offset = 0;
    for (auto len : blocks) {
      for (std::uint32_t i = 1; i < len; ++i) {
        for (std::uint32_t p = 1; p <= l; ++p) {
          vs.push_back(LinkVertex::descending(offset + i, offset + i + 1, p));
        }
      }
      offset += static_cast<std::uint32_t>(len);
    }
    return make_link(Family::QF, true, offset, l, std::move(vs), max_dim);
  }

  LinkVertex relabel(Recognition const& r, LinkVertex const& v) {
    if (v.ascending) {
      return LinkVertex::up(r.x_relabel.at(v.m));
    }
    return LinkVertex::descending(r.x_relabel.at(v.m), r.x_relabel.at(v.n), r.p_relabel.at(v.p));
  }

  Intersection intersect_links(Link const& k, std::vector<LinkVertex> const& s) {
    std::vector<bool> x_used(k.k + 1, false), p_used(k.l + 1, false);
    for (auto const& v : s) {
      if (v.m == 0 || v.m > k.k || (!v.ascending && (v.n == 0 || v.n > k.k || v.p == 0 || v.p > k.l))) {
        throw Error("unknown_vertex", "vertex " + to_string(v) + " is not a move at this word");
      }
      x_used[v.m] = true;
      if (!v.ascending) {
        x_used[v.n] = true;
        p_used[v.p] = true;
      }
    }

    Recognition r;
    r.family = k.family;
    r.x_relabel.assign(k.k + 1, 0);
    r.p_relabel.assign(k.l + 1, 0);
    for (std::size_t p = 1; p <= k.l; ++p) {
      if (!p_used[p]) {
        r.p_relabel[p] = static_cast<std::uint32_t>(++r.l);
      }
    }

    // free x-contacts in the order they are renumbered
    std::vector<std::size_t> order;
    bool cyclic = k.family == Family::QT && !s.empty() && k.descending_only;
    std::size_t start = 1;
    if (cyclic) {
      for (std::size_t m = 1; m <= k.k; ++m) {
        if (x_used[m]) {
          start = m % k.k + 1;
        }
      }
    }
    for (std::size_t i = 0; i < k.k; ++i) {
      auto m = (start - 1 + i) % k.k + 1;
      if (!x_used[m]) {
        order.push_back(m);
      }
    }
    for (auto m : order) {
      r.x_relabel[m] = static_cast<std::uint32_t>(++r.k);
    }
    if (k.family != Family::QV && k.descending_only) {
      auto adjacent = [&](std::size_t a, std::size_t b) {
        return b == a + 1 || (cyclic && a == k.k && b == 1);
      };
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || !adjacent(order[i - 1], order[i])) {
          r.blocks.push_back(0);
        }
        ++r.blocks.back();
      }
      if (cyclic) {
        r.family = Family::QF;
        r.qt_to_qf = true;
      }
    }

    std::vector<bool> keep(k.vertices.size(), false);
    for (std::size_t i = 0; i < k.vertices.size(); ++i) {
      keep[i] = std::all_of(s.begin(), s.end(),
                            [&](LinkVertex const& t) { return compatible(k.vertices[i], t); });
    }

    Intersection out;
    out.recognized = std::move(r);
    out.link.family = out.recognized.family;
    out.link.descending_only = k.descending_only;
    out.link.k = out.recognized.k;
    out.link.l = out.recognized.l;
    out.link.vertices = k.vertices;
    out.link.complex = full_subcomplex(k.complex, keep);
    return out;
  }

  namespace {
    bool in_star(std::vector<LinkVertex> const& simplex, LinkVertex const& center) {
      if (std::find(simplex.begin(), simplex.end(), center) != simplex.end()) {
        return true;
      }
      return std::all_of(simplex.begin(), simplex.end(),
                         [&](LinkVertex const& u) { return compatible(u, center); });
    }

    // Calls f on every r-subset of {0..n-1}; stops when f returns false.
    template <typename F>
    bool for_each_subset(std::size_t n, std::size_t r, F&& f) {
      if (r > n) {
        return true;
      }
      std::vector<std::size_t> idx(r);
      for (std::size_t i = 0; i < r; ++i) {
        idx[i] = i;
      }
      while (true) {
        if (!f(idx)) {
          return false;
        }
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) {
          --i;
        }
        if (i == 0) {
          return true;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
      }
    }
  }  // namespace

  CoverCertificate certify_cover(Link const& k, std::vector<LinkVertex> const& centers, int skeleton_dim) {
    CoverCertificate cert;
    cert.centers = centers;
    cert.skeleton_dim = skeleton_dim;
    auto const& cx = k.complex.complete_through(skeleton_dim) ? k.complex
                                                              : link_complex(k.vertices, skeleton_dim);

    cert.covered = true;
    for (int d = 0; d <= std::min(skeleton_dim, cx.dimension()) && cert.covered; ++d) {
      for (std::size_t i = 0; i < cx.count(d); ++i) {
        ++cert.simplices_checked;
        std::vector<LinkVertex> simplex;
        for (auto v : cx.simplex(d, i)) {
          simplex.push_back(k.vertices[v]);
        }
        bool hit = std::any_of(centers.begin(), centers.end(),
                               [&](LinkVertex const& c) { return in_star(simplex, c); });
        if (!hit) {
          cert.covered = false;
          cert.witness = simplex;
          break;
        }
      }
    }

    // a vertex u lies in star(c) iff u == c or u is compatible with c
    auto const r = static_cast<std::size_t>(skeleton_dim + 1);
    cert.subfamilies_meet = for_each_subset(centers.size(), r, [&](std::vector<std::size_t> const& idx) {
      ++cert.subfamilies_checked;
      for (auto const& u : k.vertices) {
        bool common = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) {
          return u == centers[i] || compatible(u, centers[i]);
        });
        if (common) {
          return true;
        }
      }
      std::vector<LinkVertex> family;
      for (auto i : idx) {
        family.push_back(centers[i]);
      }
      cert.subfamily_witness = family;
      return false;
    });
    return cert;
  }

  CoverCertificate cover_by_skeleton_neighborhoods(std::size_t k, std::size_t l, Family family, int n) {
    if (family == Family::QV) {
      throw Error("bad_family", "the neighborhood cover is defined for QF and QT");
    }
    auto link = abstract_descending_link(k, l, family, n + 2);
    std::vector<LinkVertex> centers;
    for (std::uint32_t m = 1; m <= 2; ++m) {
      for (std::uint32_t b = 1; b <= l; ++b) {
        if (m + 1 <= k) {
          centers.push_back(LinkVertex::descending(m, m + 1, b));
        }
      }
    }
    return certify_cover(link, centers, n + 2);
  }

  std::vector<SimplicialComplex> cover_members(Link const& k, std::vector<LinkVertex> const& centers,
                                               int skeleton_dim) {
    std::vector<SimplicialComplex> out;
    for (auto const& c : centers) {
      auto it = std::find(k.vertices.begin(), k.vertices.end(), c);
      if (it == k.vertices.end()) {
        throw Error("unknown_vertex", "center " + to_string(c) + " is not a vertex of the link");
      }
      out.push_back(simplicial_neighborhood(k.complex, static_cast<VertexId>(it - k.vertices.begin()),
                                            skeleton_dim));
    }
    return out;
  }

}  // namespace qdg
