#include "qdg/qv.hpp"

#include <algorithm>
#include <set>

#include "qdg/canonical.hpp"
#include "qdg/random.hpp"
#include "qdg/rewriting.hpp"

namespace qdg {

  std::string to_string(Address const& a) {
    std::string bits = a.bits.empty() ? "ε" : a.bits;
    if (a.tree == 0) {
      return bits;
    }
    return std::to_string(a.tree) + ":" + bits;
  }

  Address parse_address(std::string_view bits, std::uint32_t tree) {
    if (bits == "e" || bits == "ε") {
      return {tree, ""};
    }
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw Error("bad_address", "address must be a 0/1 string, got '" + std::string(bits) + "'");
      }
    }
    return {tree, std::string(bits)};
  }

  // -- trees ------------------------------------------------------------------

  namespace {
    // A complete prefix-free set of strings is exactly what is produced by
    // repeatedly splitting a leaf; check by merging sibling pairs bottom up.
    bool is_complete_prefix_code(std::vector<std::string> leaves) {
      std::set<std::string> s(leaves.begin(), leaves.end());
      if (s.size() != leaves.size()) {
        return false;
      }
      while (!(s.size() == 1 && s.begin()->empty())) {
        // deepest leaf must have its sibling present
        auto deepest = std::max_element(s.begin(), s.end(), [](auto const& a, auto const& b) {
          return a.size() < b.size();
        });
        if (deepest->empty()) {
          return false;
        }
        std::string parent = deepest->substr(0, deepest->size() - 1);
        if (!s.count(parent + "0") || !s.count(parent + "1")) {
          return false;
        }
        s.erase(parent + "0");
        s.erase(parent + "1");
        if (!s.insert(parent).second) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  FiniteBinaryTree FiniteBinaryTree::from_leaves(std::vector<std::string> leaves) {
    for (auto& l : leaves) {
      if (l == "e" || l == "ε") {
        l.clear();
      }
      if (l.find_first_not_of("01") != std::string::npos) {
        throw Error("bad_tree", "leaf '" + l + "' is not a 0/1 string");
      }
    }
    std::sort(leaves.begin(), leaves.end());
    if (leaves.empty() || !is_complete_prefix_code(leaves)) {
      throw Error("bad_tree", "leaves do not form a finite rooted binary tree");
    }
    return FiniteBinaryTree{std::move(leaves)};
  }

  FiniteBinaryTree FiniteBinaryTree::trivial() {
    return FiniteBinaryTree{{""}};
  }

  std::vector<std::string> FiniteBinaryTree::interior() const {
    std::set<std::string> nodes;
    for (auto const& l : leaves) {
      for (std::size_t n = 0; n < l.size(); ++n) {
        nodes.insert(l.substr(0, n));
      }
    }
    return {nodes.begin(), nodes.end()};
  }

  std::size_t FiniteBinaryTree::depth() const {
    std::size_t d = 0;
    for (auto const& l : leaves) {
      d = std::max(d, l.size());
    }
    return d;
  }

  namespace {
    bool is_permutation_of(std::vector<std::size_t> const& p, std::size_t n) {
      if (p.size() != n) {
        return false;
      }
      std::vector<bool> seen(n, false);
      for (auto i : p) {
        if (i >= n || seen[i]) {
          return false;
        }
        seen[i] = true;
      }
      return true;
    }
  }  // namespace

  std::vector<Violation> validate_treepair(TreePair const& tp) {
    std::vector<Violation> out;
    auto tree_ok = [&](FiniteBinaryTree const& t, char const* name) {
      auto sorted = t.leaves;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != t.leaves || t.leaves.empty() || !is_complete_prefix_code(t.leaves)) {
        out.push_back({"bad_tree", std::string(name) + " is not a sorted complete leaf set"});
        return false;
      }
      return true;
    };
    bool ok1 = tree_ok(tp.t1, "t1");
    bool ok2 = tree_ok(tp.t2, "t2");
    if (!ok1 || !ok2) {
      return out;
    }
    if (tp.t1.leaves.size() != tp.t2.leaves.size()) {
      out.push_back({"leaf_count_mismatch", "t1 and t2 have different numbers of leaves"});
      return out;
    }
    if (!is_permutation_of(tp.sigma, tp.t1.leaves.size())) {
      out.push_back({"bad_sigma", "sigma is not a bijection of the leaves"});
    }
    if (!is_permutation_of(tp.f, tp.t1.leaves.size() - 1)) {
      out.push_back({"bad_f", "f is not a bijection of the interior nodes"});
    }
    return out;
  }

  ForestPair to_forest_pair(TreePair const& tp) {
    auto problems = validate_treepair(tp);
    if (!problems.empty()) {
      throw Error(problems.front().code, problems.front().message);
    }
    ForestPair fp;
    fp.trees = 1;
    fp.points = 0;
    auto lift = [](std::vector<std::string> const& xs) {
      std::vector<Address> out;
      for (auto const& x : xs) {
        out.push_back({0, x});
      }
      return out;
    };
    fp.domain_leaves = lift(tp.t1.leaves);
    fp.range_leaves = lift(tp.t2.leaves);
    fp.sigma = tp.sigma;
    fp.domain_vertices = lift(tp.t1.interior());
    fp.range_vertices = lift(tp.t2.interior());
    fp.f = tp.f;
    return fp;
  }

  // -- group elements ------------------------------------------------------------

  GroupElement::GroupElement(Diagram d, Word base) : _base(std::move(base)) {
    require_valid(d);
    auto const w = d.presentation->to_letters(_base);
    if (top_letters(d) != w || bottom_letters(d) != w) {
      throw Error("label_mismatch", "group elements must be (" + to_string(_base) + ","
                                        + to_string(_base) + ")-diagrams");
    }
    _diagram = reduce(d);
  }

  GroupElement identity(PresentationPtr p, Word const& base) {
    return GroupElement(permutation_diagram(std::move(p), base), base);
  }

  GroupElement identity(std::size_t trees, std::size_t points) {
    return identity(qv_presentation(), power_word(trees, points));
  }

  GroupElement multiply(GroupElement const& g, GroupElement const& h) {
    if (g.base() != h.base()) {
      throw Error("label_mismatch", "factors have different base words");
    }
    return GroupElement(concatenate(g.diagram(), h.diagram()), g.base());
  }

  GroupElement inverse(GroupElement const& g) {
    return GroupElement(invert(g.diagram()), g.base());
  }

  bool is_identity(GroupElement const& g) {
    return g.diagram().transistors.empty() && is_permutation(g.diagram())
           && g.diagram().frame_top == g.diagram().frame_bottom;
  }

  bool operator==(GroupElement const& g, GroupElement const& h) {
    return g.base() == h.base() && *g.diagram().presentation == *h.diagram().presentation
           && is_equivalent(g.diagram(), h.diagram());
  }

  // -- diagrams <-> forest pairs -----------------------------------------------------

  namespace {
    // Returns the letter of x.
    Letter require_qv(Diagram const& d) {
      if (!(*d.presentation == *qv_presentation())) {
        throw Error("wrong_presentation", "expected the presentation <x,a | x = xax>");
      }
      return *d.presentation->letter(letter_x());
    }

    // Splits x^k a^l; throws for any other base.
    std::pair<std::size_t, std::size_t> base_shape(Word const& base) {
      std::size_t k = 0;
      while (k < base.size() && base[k] == letter_x()) {
        ++k;
      }
      std::size_t l = 0;
      while (k + l < base.size() && base[k + l] == letter_a()) {
        ++l;
      }
      if (k + l != base.size()) {
        throw Error("bad_base", "base word must be of the form x^k a^l");
      }
      return {k, l};
    }
  }  // namespace

  // In a reduced diagram no positive transistor (x -> xax) lies below a
  // negative one, so the negatives hang as a forest from the frame bottom and
  // the positives from the frame top; the wires between them are the pieces.
  ForestPair diagram_to_forest_pair(GroupElement const& g) {
    auto const& d = g.diagram();
    auto const X = require_qv(d);
    auto const [k, l] = base_shape(g.base());
    auto const inc = incidence(d);
    auto const n = d.transistor_count();

    std::vector<bool> positive(n);
    for (std::size_t t = 0; t < n; ++t) {
      positive[t] = d.transistors[t].top.size() == 1;
    }

    std::vector<std::optional<Address>> domain(d.wire_count()), range(d.wire_count());
    auto not_split = [] {
      return Error("not_split", "diagram does not separate into a negative and a positive forest");
    };

    // range addresses, top down
    for (std::size_t i = 0; i < d.frame_top.size(); ++i) {
      range[d.frame_top[i]] = Address{static_cast<std::uint32_t>(i), ""};
    }
    auto order = *topological_order(d);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto const& tr = d.transistors[*it];
      if (!positive[*it]) {
        continue;
      }
      auto const& parent = range[tr.top[0]];
      if (!parent) {
        throw not_split();
      }
      range[tr.bottom[0]] = Address{parent->tree, parent->bits + "0"};
      range[tr.bottom[1]] = *parent;
      range[tr.bottom[2]] = Address{parent->tree, parent->bits + "1"};
    }
    // domain addresses, bottom up
    for (std::size_t i = 0; i < d.frame_bottom.size(); ++i) {
      domain[d.frame_bottom[i]] = Address{static_cast<std::uint32_t>(i), ""};
    }
    for (auto t : order) {
      auto const& tr = d.transistors[t];
      if (positive[t]) {
        continue;
      }
      auto const& parent = domain[tr.bottom[0]];
      if (!parent) {
        throw not_split();
      }
      domain[tr.top[0]] = Address{parent->tree, parent->bits + "0"};
      domain[tr.top[1]] = *parent;
      domain[tr.top[2]] = Address{parent->tree, parent->bits + "1"};
    }

    // A middle wire has its lower end on the frame bottom or a negative and
    // its upper end on the frame top or a positive.
    auto on_negative_or_bottom = [&](Port const& p) {
      return p.owner == PortOwner::frame_bottom || !positive[p.transistor];
    };
    auto on_positive_or_top = [&](Port const& p) {
      return p.owner == PortOwner::frame_top || positive[p.transistor];
    };

    ForestPair fp;
    fp.trees = k;
    fp.points = l;
    std::map<Address, Address> leaves, vertices;
    for (WireId w = 0; w < d.wire_count(); ++w) {
      auto const& lo = inc.lower[w];
      auto const& up = inc.upper[w];
      // positive directly below negative would be a dipole
      if (lo.owner == PortOwner::transistor_top && positive[lo.transistor]
          && up.owner == PortOwner::transistor_bottom && !positive[up.transistor]) {
        throw not_split();
      }
      if (!on_negative_or_bottom(lo) || !on_positive_or_top(up)) {
        continue;
      }
      if (!domain[w] || !range[w]) {
        throw not_split();
      }
      (d.labels[w] == X ? leaves : vertices)[*domain[w]] = *range[w];
    }

    for (auto const& [dom, ran] : leaves) {
      fp.domain_leaves.push_back(dom);
      fp.range_leaves.push_back(ran);
    }
    std::sort(fp.range_leaves.begin(), fp.range_leaves.end());
    for (auto const& [dom, ran] : leaves) {
      auto pos = std::lower_bound(fp.range_leaves.begin(), fp.range_leaves.end(), ran);
      fp.sigma.push_back(static_cast<std::size_t>(pos - fp.range_leaves.begin()));
    }
    for (auto const& [dom, ran] : vertices) {
      fp.domain_vertices.push_back(dom);
      fp.range_vertices.push_back(ran);
    }
    std::sort(fp.range_vertices.begin(), fp.range_vertices.end());
    for (auto const& [dom, ran] : vertices) {
      auto pos = std::lower_bound(fp.range_vertices.begin(), fp.range_vertices.end(), ran);
      fp.f.push_back(static_cast<std::size_t>(pos - fp.range_vertices.begin()));
    }
    return fp;
  }

  TreePair diagram_to_treepair(GroupElement const& g) {
    if (g.base() != Word{letter_x()}) {
      throw Error("bad_base", "tree pairs need the base word x");
    }
    auto fp = diagram_to_forest_pair(g);
    TreePair tp;
    for (auto const& a : fp.domain_leaves) {
      tp.t1.leaves.push_back(a.bits);
    }
    for (auto const& a : fp.range_leaves) {
      tp.t2.leaves.push_back(a.bits);
    }
    tp.sigma = fp.sigma;
    tp.f = fp.f;
    return tp;
  }

  namespace {
    void validate_forest_pair(ForestPair const& fp) {
      auto check_side = [&](std::vector<Address> const& leaves, std::vector<Address> const& vertices,
                            char const* side) {
        if (!std::is_sorted(leaves.begin(), leaves.end())
            || !std::is_sorted(vertices.begin(), vertices.end())) {
          throw Error("bad_forest", std::string(side) + " lists must be sorted");
        }
        std::vector<std::vector<std::string>> per_tree(fp.trees);
        for (auto const& a : leaves) {
          if (a.tree >= fp.trees) {
            throw Error("bad_forest", std::string(side) + " leaf outside the forest");
          }
          per_tree[a.tree].push_back(a.bits);
        }
        std::size_t interior = 0;
        for (std::size_t t = 0; t < fp.trees; ++t) {
          if (per_tree[t].empty() || !is_complete_prefix_code(per_tree[t])) {
            throw Error("bad_forest", std::string(side) + " tree " + std::to_string(t)
                                          + " is not a finite binary tree");
          }
          auto tree = FiniteBinaryTree{per_tree[t]};
          for (auto const& bits : tree.interior()) {
            if (!std::binary_search(vertices.begin(), vertices.end(),
                                    Address{static_cast<std::uint32_t>(t), bits})) {
              throw Error("bad_forest", std::string(side) + " vertex list misses an interior node");
            }
            ++interior;
          }
        }
        for (std::size_t p = 0; p < fp.points; ++p) {
          if (!std::binary_search(vertices.begin(), vertices.end(),
                                  Address{static_cast<std::uint32_t>(fp.trees + p), ""})) {
            throw Error("bad_forest", std::string(side) + " vertex list misses an isolated point");
          }
        }
        if (vertices.size() != interior + fp.points) {
          throw Error("bad_forest", std::string(side) + " vertex list has extra entries");
        }
      };
      check_side(fp.domain_leaves, fp.domain_vertices, "domain");
      check_side(fp.range_leaves, fp.range_vertices, "range");
      if (fp.domain_leaves.size() != fp.range_leaves.size()
          || !is_permutation_of(fp.sigma, fp.domain_leaves.size())) {
        throw Error("bad_sigma", "sigma is not a bijection of the leaves");
      }
      if (fp.domain_vertices.size() != fp.range_vertices.size()
          || !is_permutation_of(fp.f, fp.domain_vertices.size())) {
        throw Error("bad_f", "f is not a bijection of the vertices");
      }
    }

    // Where a wire end is attached.
    struct Slot {
      enum Kind { frame_top, frame_bottom, top_of, bottom_of } kind;
      std::size_t transistor = 0;
      std::size_t index = 0;
    };
  }  // namespace

  GroupElement forest_pair_to_diagram(ForestPair const& fp) {
    validate_forest_pair(fp);
    auto p = qv_presentation();
    auto const X = *p->letter(letter_x());
    auto const A = *p->letter(letter_a());
    auto const k = fp.trees;
    auto const base = power_word(k, fp.points);

    Diagram d;
    d.presentation = p;
    d.frame_top.resize(base.size());
    d.frame_bottom.resize(base.size());

    std::map<Address, std::size_t> positive, negative;
    for (auto const& v : fp.range_vertices) {
      if (v.tree < k) {
        positive[v] = d.transistors.size();
        d.transistors.push_back({std::vector<WireId>(1), std::vector<WireId>(3)});
      }
    }
    for (auto const& v : fp.domain_vertices) {
      if (v.tree < k) {
        negative[v] = d.transistors.size();
        d.transistors.push_back({std::vector<WireId>(3), std::vector<WireId>(1)});
      }
    }

    auto set = [&d](Slot s, WireId w) {
      switch (s.kind) {
        case Slot::frame_top: d.frame_top[s.index] = w; break;
        case Slot::frame_bottom: d.frame_bottom[s.index] = w; break;
        case Slot::top_of: d.transistors[s.transistor].top[s.index] = w; break;
        case Slot::bottom_of: d.transistors[s.transistor].bottom[s.index] = w; break;
      }
    };
    auto wire = [&](Letter label, Slot upper, Slot lower) {
      auto w = static_cast<WireId>(d.labels.size());
      d.labels.push_back(label);
      set(upper, w);
      set(lower, w);
    };
    // upper end of the x-wire entering range node `a` from above
    auto range_slot = [&](Address const& a) -> Slot {
      if (a.bits.empty()) {
        return {Slot::frame_top, 0, a.tree};
      }
      Address parent{a.tree, a.bits.substr(0, a.bits.size() - 1)};
      return {Slot::bottom_of, positive.at(parent), a.bits.back() == '0' ? 0u : 2u};
    };
    // lower end of the x-wire leaving domain node `a` downwards
    auto domain_slot = [&](Address const& a) -> Slot {
      if (a.bits.empty()) {
        return {Slot::frame_bottom, 0, a.tree};
      }
      Address parent{a.tree, a.bits.substr(0, a.bits.size() - 1)};
      return {Slot::top_of, negative.at(parent), a.bits.back() == '0' ? 0u : 2u};
    };

    for (auto const& [a, t] : positive) {
      wire(X, range_slot(a), {Slot::top_of, t, 0});
    }
    for (auto const& [a, t] : negative) {
      wire(X, {Slot::bottom_of, t, 0}, domain_slot(a));
    }
    for (std::size_t i = 0; i < fp.domain_leaves.size(); ++i) {
      wire(X, range_slot(fp.range_leaves[fp.sigma[i]]), domain_slot(fp.domain_leaves[i]));
    }
    for (std::size_t i = 0; i < fp.domain_vertices.size(); ++i) {
      auto const& dom = fp.domain_vertices[i];
      auto const& ran = fp.range_vertices[fp.f[i]];
      Slot upper = ran.tree < k ? Slot{Slot::bottom_of, positive.at(ran), 1}
                                : Slot{Slot::frame_top, 0, ran.tree};
      Slot lower = dom.tree < k ? Slot{Slot::top_of, negative.at(dom), 1}
                                : Slot{Slot::frame_bottom, 0, dom.tree};
      wire(A, upper, lower);
    }
    return GroupElement(std::move(d), base);
  }

  GroupElement treepair_to_diagram(TreePair const& tp) {
    return forest_pair_to_diagram(to_forest_pair(tp));
  }

  // -- evaluation ------------------------------------------------------------------

  QuasiAutomorphism::QuasiAutomorphism(GroupElement const& g)
      : QuasiAutomorphism(diagram_to_forest_pair(g)) {}

  QuasiAutomorphism::QuasiAutomorphism(ForestPair fp) : _pieces(std::move(fp)) {
    for (std::size_t i = 0; i < _pieces.domain_leaves.size(); ++i) {
      _leaves[_pieces.domain_leaves[i]] = _pieces.range_leaves[_pieces.sigma[i]];
    }
    for (std::size_t i = 0; i < _pieces.domain_vertices.size(); ++i) {
      _vertices[_pieces.domain_vertices[i]] = _pieces.range_vertices[_pieces.f[i]];
    }
  }

  Address QuasiAutomorphism::operator()(Address const& v) const {
    if (auto it = _vertices.find(v); it != _vertices.end()) {
      return it->second;
    }
    for (std::size_t n = 0; n <= v.bits.size(); ++n) {
      auto it = _leaves.find(Address{v.tree, v.bits.substr(0, n)});
      if (it != _leaves.end()) {
        return Address{it->second.tree, it->second.bits + v.bits.substr(n)};
      }
    }
    throw Error("bad_address", "address " + to_string(v) + " is not in the forest");
  }

  Address evaluate(GroupElement const& g, Address const& v) {
    return QuasiAutomorphism(g)(v);
  }

  // -- projection and subgroups -------------------------------------------------------

  GroupElement project_to_V(GroupElement const& g) {
    Word base;
    for (auto const& gen : g.base()) {
      if (gen != letter_a()) {
        base.push_back(gen);
      }
    }
    return GroupElement(erase_letter(g.diagram(), letter_a()), base);
  }

  bool member_QF(GroupElement const& g) {
    auto fp = diagram_to_forest_pair(g);
    for (std::size_t i = 0; i < fp.sigma.size(); ++i) {
      if (fp.sigma[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool member_QT(GroupElement const& g) {
    auto fp = diagram_to_forest_pair(g);
    auto const n = fp.sigma.size();
    if (n == 0) {
      return true;
    }
    auto const r = fp.sigma[0];
    for (std::size_t i = 0; i < n; ++i) {
      if (fp.sigma[i] != (i + r) % n) {
        return false;
      }
    }
    return true;
  }

  bool is_kernel_element(GroupElement const& g) {
    return is_identity(project_to_V(g));
  }

  std::vector<std::pair<Address, Address>> support(GroupElement const& g, std::size_t depth) {
    QuasiAutomorphism h(g);
    std::vector<std::pair<Address, Address>> out;
    auto const roots = h.pieces().trees + h.pieces().points;
    for (std::uint32_t t = 0; t < roots; ++t) {
      auto const max_len = t < h.pieces().trees ? depth : 0;
      std::vector<std::string> level{""};
      for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (auto const& bits : level) {
          Address v{t, bits};
          auto image = h(v);
          if (image != v) {
            out.emplace_back(v, image);
          }
          next.push_back(bits + "0");
          next.push_back(bits + "1");
        }
        level = std::move(next);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // -- random elements ----------------------------------------------------------------

  ForestPair random_forest_pair(std::uint64_t seed, std::size_t caret_budget, std::size_t trees,
                                std::size_t points) {
    if (trees == 0) {
      throw Error("bad_base", "need at least one tree");
    }
    Rng rng(seed);
    auto const carets = rng.between(0, caret_budget);
    auto grow = [&](std::vector<Address>& leaves, std::vector<Address>& vertices) {
      for (std::uint32_t t = 0; t < trees; ++t) {
        leaves.push_back({t, ""});
      }
      for (std::size_t c = 0; c < carets; ++c) {
        auto i = rng.index(leaves.size());
        auto node = leaves[i];
        leaves[i] = Address{node.tree, node.bits + "0"};
        leaves.push_back(Address{node.tree, node.bits + "1"});
        vertices.push_back(node);
      }
      for (std::size_t p = 0; p < points; ++p) {
        vertices.push_back({static_cast<std::uint32_t>(trees + p), ""});
      }
      std::sort(leaves.begin(), leaves.end());
      std::sort(vertices.begin(), vertices.end());
    };
    ForestPair fp;
    fp.trees = trees;
    fp.points = points;
    grow(fp.domain_leaves, fp.domain_vertices);
    grow(fp.range_leaves, fp.range_vertices);
    fp.sigma = rng.permutation(fp.domain_leaves.size());
    fp.f = rng.permutation(fp.domain_vertices.size());
    return fp;
  }

  GroupElement random_element(std::uint64_t seed, std::size_t caret_budget, std::size_t trees,
                              std::size_t points) {
    return forest_pair_to_diagram(random_forest_pair(seed, caret_budget, trees, points));
  }

}  // namespace qdg
