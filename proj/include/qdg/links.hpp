#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdg/simplicial.hpp"

namespace qdg {

  enum class Family { QF, QT, QV };

  std::string to_string(Family f);
  // Accepts qf/qt/qv in either case; throws Error("bad_family").
  Family parse_family(std::string const& s);

  // A downward move (m,n,p) merging the m-th and n-th x-contacts with the
  // p-th a-contact, or an upward move (m) splitting the m-th x-contact.
  // Indices are 1-based.
  struct LinkVertex {
    bool ascending = false;
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::uint32_t p = 0;

    static LinkVertex descending(std::uint32_t m, std::uint32_t n, std::uint32_t p) {
      return {false, m, n, p};
    }
    static LinkVertex up(std::uint32_t m) {
      return {true, m, 0, 0};
    }

    auto operator<=>(LinkVertex const&) const = default;
  };

  std::string to_string(LinkVertex const& v);

  // Two moves can be applied together iff they share no contact.
  bool compatible(LinkVertex const& a, LinkVertex const& b);

  // A link in the closed-form model. Vertex i of `complex` is vertices[i].
  struct Link {
    Family family = Family::QV;
    bool descending_only = true;
    std::size_t k = 0;
    std::size_t l = 0;
    std::vector<LinkVertex> vertices;
    SimplicialComplex complex;
  };

  // The flag complex of `compatible` on the given vertices.
  SimplicialComplex link_complex(std::vector<LinkVertex> const& vertices, int max_dim = -1);

  // Descending and ascending moves at x^k a^l (vertex set D + A).
  Link abstract_link(std::size_t k, std::size_t l, int max_dim = -1);

  // QV: all (m,n,p) with m != n; QF: (m,m+1,p); QT: QF plus (k,1,p).
  Link abstract_descending_link(std::size_t k, std::size_t l, Family family, int max_dim = -1);

  // QF-type link on several blocks of consecutive x-contacts: vertices
  // (m,m+1,p) with m, m+1 in one block, contacts numbered across blocks.
  // One block of length k is lk(QF; k, l).
  Link segmented_descending_link(std::vector<std::size_t> const& blocks, std::size_t l,
                                 int max_dim = -1);

  // What an intersection of a link with the links of S looks like.
  struct Recognition {
    Family family = Family::QV;
    std::size_t k = 0;
    std::size_t l = 0;
    // Free x-contacts split into maximal consecutive blocks (QF/QT only;
    // cyclically for QT). A single block means lk(family; k, l) exactly.
    std::vector<std::size_t> blocks;
    // The input was QT and S was nonempty: the result is QF-type.
    bool qt_to_qf = false;
    // Old contact index -> new contact index, 0 for used contacts.
    std::vector<std::uint32_t> x_relabel;
    std::vector<std::uint32_t> p_relabel;

    bool single_block() const {
      return blocks.size() <= 1;
    }
  };

  struct Intersection {
    Link link;
    Recognition recognized;
  };

  // The full subcomplex of K on the vertices compatible with every member
  // of S, with the free contacts renumbered.
  Intersection intersect_links(Link const& k, std::vector<LinkVertex> const& s);

  // The relabeled vertex (undefined for vertices touching used contacts).
  LinkVertex relabel(Recognition const& r, LinkVertex const& v);

  struct CoverCertificate {
    std::vector<LinkVertex> centers;
    int skeleton_dim = 0;
    std::size_t simplices_checked = 0;
    bool covered = false;
    // A simplex in no member, when coverage fails.
    std::optional<std::vector<LinkVertex>> witness;
    // Every (skeleton_dim + 1)-element subfamily has a common vertex. Not
    // part of ok(): at n = 0 the stars on (1,2,b) use up every color.
    bool subfamilies_meet = false;
    std::size_t subfamilies_checked = 0;
    std::optional<std::vector<LinkVertex>> subfamily_witness;

    bool ok() const {
      return covered;
    }
  };

  // Checks that the skeleton_dim-skeleton of K lies in the union of the
  // closed stars of `centers` (each cut to that skeleton), and that every
  // skeleton_dim + 1 of those stars share a vertex.
  CoverCertificate certify_cover(Link const& k, std::vector<LinkVertex> const& centers,
                                 int skeleton_dim);

  // Centers (m,m+1,b) for m in {1,2} and every color b; skeleton n+2.
  CoverCertificate cover_by_skeleton_neighborhoods(std::size_t k, std::size_t l, Family family, int n);

  // The members of the cover as subcomplexes of K.link.complex.
  std::vector<SimplicialComplex> cover_members(Link const& k, std::vector<LinkVertex> const& centers,
                                               int skeleton_dim);

}  // namespace qdg
