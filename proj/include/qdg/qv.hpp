#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdg/diagram.hpp"

namespace qdg {

  // A vertex of the forest of k binary trees followed by l isolated points.
  // `bits` is the path from the root ('0' = left child); isolated points and
  // roots have empty bits. Ordering is (tree, lexicographic bits), i.e.
  // depth-first with 0 before 1.
  struct Address {
    std::uint32_t tree = 0;
    std::string bits;

    auto operator<=>(Address const&) const = default;
  };

  // "ε" for the root of tree 0, the bits otherwise; other trees get a "t:" prefix.
  std::string to_string(Address const& a);
  // Accepts "", "e" and "ε" for the empty sequence.
  Address parse_address(std::string_view bits, std::uint32_t tree = 0);

  // A finite rooted binary tree given by its leaves (sorted).
  struct FiniteBinaryTree {
    std::vector<std::string> leaves;

    // Sorts the leaves and throws Error("bad_tree") unless they form a
    // complete prefix-free set.
    static FiniteBinaryTree from_leaves(std::vector<std::string> leaves);
    static FiniteBinaryTree trivial();

    std::vector<std::string> interior() const;
    std::size_t depth() const;

    bool operator==(FiniteBinaryTree const&) const = default;
  };

  // ((t1, sigma, t2), f): sigma[i] is the index of the t2 leaf receiving the
  // i-th leaf of t1; f[i] the index of the t2 interior node receiving the
  // i-th interior node of t1 (all in lexicographic order).
  struct TreePair {
    FiniteBinaryTree t1;
    FiniteBinaryTree t2;
    std::vector<std::size_t> sigma;
    std::vector<std::size_t> f;

    bool operator==(TreePair const&) const = default;
  };

  std::vector<Violation> validate_treepair(TreePair const& tp);

  // The same data for a forest of `trees` binary trees and `points` isolated
  // points. Vertex lists hold interior nodes and isolated points.
  struct ForestPair {
    std::size_t trees = 1;
    std::size_t points = 0;
    std::vector<Address> domain_leaves;
    std::vector<Address> range_leaves;
    std::vector<std::size_t> sigma;
    std::vector<Address> domain_vertices;
    std::vector<Address> range_vertices;
    std::vector<std::size_t> f;

    bool operator==(ForestPair const&) const = default;
  };

  ForestPair to_forest_pair(TreePair const& tp);

  // A reduced (w,w)-diagram. Construction validates and reduces.
  class GroupElement {
   public:
    GroupElement(Diagram d, Word base);

    Diagram const& diagram() const noexcept {
      return _diagram;
    }
    Word const& base() const noexcept {
      return _base;
    }

   private:
    Diagram _diagram;
    Word _base;
  };

  GroupElement identity(PresentationPtr p, Word const& base);
  GroupElement identity(std::size_t trees = 1, std::size_t points = 0);
  // g stacked on h: as maps, h acts first.
  GroupElement multiply(GroupElement const& g, GroupElement const& h);
  GroupElement inverse(GroupElement const& g);
  bool is_identity(GroupElement const& g);
  bool operator==(GroupElement const& g, GroupElement const& h);

  GroupElement treepair_to_diagram(TreePair const& tp);
  TreePair diagram_to_treepair(GroupElement const& g);
  GroupElement forest_pair_to_diagram(ForestPair const& fp);
  ForestPair diagram_to_forest_pair(GroupElement const& g);

  // The quasi-automorphism of the forest carried by an element over
  // <x,a | x = xax> with base word x^k a^l.
  class QuasiAutomorphism {
   public:
    explicit QuasiAutomorphism(GroupElement const& g);
    explicit QuasiAutomorphism(ForestPair fp);

    Address operator()(Address const& v) const;
    ForestPair const& pieces() const noexcept {
      return _pieces;
    }

   private:
    ForestPair _pieces;
    std::map<Address, Address> _leaves;
    std::map<Address, Address> _vertices;
  };

  Address evaluate(GroupElement const& g, Address const& v);

  // Delete the a-wires and reduce: the image in V over <x | x = x^2>.
  GroupElement project_to_V(GroupElement const& g);

  bool member_QF(GroupElement const& g);
  bool member_QT(GroupElement const& g);
  bool is_kernel_element(GroupElement const& g);

  // Every (v, g(v)) with v != g(v) and |v| <= depth.
  std::vector<std::pair<Address, Address>> support(GroupElement const& g, std::size_t depth);

  // Random tree (forest) pair with at most caret_budget carets per side,
  // uniformly random sigma and f; deterministic per seed.
  GroupElement random_element(std::uint64_t seed, std::size_t caret_budget, std::size_t trees = 1,
                              std::size_t points = 0);

  // Builds a random forest pair without turning it into a diagram.
  ForestPair random_forest_pair(std::uint64_t seed, std::size_t caret_budget, std::size_t trees = 1,
                                std::size_t points = 0);

}  // namespace qdg
