#include <catch_amalgamated.hpp>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qdg/cubes.hpp"
#include "qdg/json_io.hpp"
#include "qdg/links.hpp"
#include "qdg/rewriting.hpp"
#include "support/generators.hpp"

using namespace qdg;

namespace {
  Diagram fixture(std::string const& name) {
    std::ifstream in(std::string(QDG_FIXTURES) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return diagram_from_json(parse_json(ss.str(), name));
  }

  LinkVertex D(std::uint32_t m, std::uint32_t n, std::uint32_t p) {
    return LinkVertex::descending(m, n, p);
  }

  // Simplices of k as sets of vertex labels, per dimension.
  std::set<std::vector<std::string>> labelled(SimplicialComplex const& k) {
    std::set<std::vector<std::string>> out;
    for (int d = 0; d <= k.dimension(); ++d) {
      for (auto const& s : k.simplices(d)) {
        std::vector<std::string> names;
        for (auto v : s) {
          names.push_back(k.labels()[v]);
        }
        std::sort(names.begin(), names.end());
        out.insert(names);
      }
    }
    return out;
  }

  SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_simplices(testing::vertex_names(3), {{0, 1}, {1, 2}, {0, 2}});
  }
}  // namespace

TEST_CASE("simplicial complex basics") {
  auto k = SimplicialComplex::from_simplices(testing::vertex_names(4), {{0, 1, 2}, {2, 3}});
  CHECK(k.count(0) == 4);
  CHECK(k.count(1) == 4);
  CHECK(k.count(2) == 1);
  CHECK(k.dimension() == 2);
  std::vector<VertexId> s{0, 2};
  CHECK(k.contains(s));
  std::vector<VertexId> t{1, 3};
  CHECK_FALSE(k.contains(t));
  CHECK(k.skeleton(1).dimension() == 1);
  CHECK_THROWS_AS(SimplicialComplex::from_simplices(testing::vertex_names(2), {{0, 5}}), Error);
}

TEST_CASE("is_flag") {
  CHECK_FALSE(is_flag(hollow_triangle()));
  CHECK_FALSE(is_flag(testing::sphere(2)));
  CHECK(is_flag(testing::full_simplex(3)));
  CHECK(is_flag(abstract_descending_link(5, 3, Family::QV).complex));
}

TEST_CASE("full_subcomplex_check") {
  auto filled = testing::full_simplex(2);
  std::vector<VertexId> id{0, 1, 2};
  CHECK_FALSE(full_subcomplex_check(hollow_triangle(), filled, id));
  auto point = SimplicialComplex::from_simplices({"p"}, {{0}});
  std::vector<VertexId> one{1};
  CHECK(full_subcomplex_check(point, filled, one));
  std::vector<VertexId> clash{0, 0, 1};
  CHECK_THROWS_AS(full_subcomplex_check(hollow_triangle(), filled, clash), Error);
}

TEST_CASE("nerve of a cover") {
  auto k = SimplicialComplex::from_simplices(testing::vertex_names(3), {{0, 1}, {1, 2}});
  std::vector<bool> left{true, true, false}, right{false, true, true}, first{true, false, false},
      last{false, false, true};
  auto meet = nerve_of_cover({full_subcomplex(k, left), full_subcomplex(k, right)}, 2);
  CHECK(meet.count(0) == 2);
  CHECK(meet.count(1) == 1);
  auto apart = nerve_of_cover({full_subcomplex(k, first), full_subcomplex(k, last)}, 2);
  CHECK(apart.count(0) == 2);
  CHECK(apart.count(1) == 0);
}

TEST_CASE("abstract links: counts and small cases") {
  CHECK(abstract_descending_link(3, 2, Family::QV).vertices.size() == 12);
  auto qf21 = abstract_descending_link(2, 1, Family::QF);
  CHECK(qf21.vertices.size() == 1);
  auto qv21 = abstract_descending_link(2, 1, Family::QV);
  CHECK(qv21.vertices.size() == 2);
  CHECK(qv21.complex.count(1) == 0);
  for (std::size_t k = 2; k <= 6; ++k) {
    for (std::size_t l = 1; l <= 3; ++l) {
      auto qv = abstract_descending_link(k, l, Family::QV);
      auto qf = abstract_descending_link(k, l, Family::QF);
      auto qt = abstract_descending_link(k, l, Family::QT);
      CHECK(qv.vertices.size() == k * (k - 1) * l);
      CHECK(qf.vertices.size() == (k - 1) * l);
      CHECK(qt.vertices.size() == k * l);
      CHECK(abstract_link(k, l).vertices.size() == k * (k - 1) * l + k);
      CHECK(qv.complex.dimension() == static_cast<int>(std::min(k / 2, l)) - 1);
      for (auto const* sub : {&qf, &qt}) {
        std::vector<VertexId> inj;
        for (auto const& v : sub->vertices) {
          auto it = std::lower_bound(qv.vertices.begin(), qv.vertices.end(), v);
          REQUIRE(it != qv.vertices.end());
          REQUIRE(*it == v);
          inj.push_back(static_cast<VertexId>(it - qv.vertices.begin()));
        }
        CHECK(full_subcomplex_check(sub->complex, qv.complex, inj));
        CHECK(is_flag(sub->complex));
      }
      CHECK(is_flag(qv.complex));
      CHECK(is_flag(abstract_link(k, l).complex));
    }
  }
}

TEST_CASE("compatibility of moves") {
  CHECK(compatible(D(1, 2, 1), D(3, 4, 2)));
  CHECK_FALSE(compatible(D(1, 2, 1), D(3, 4, 1)));
  CHECK_FALSE(compatible(D(1, 2, 1), D(2, 3, 2)));
  CHECK(compatible(D(1, 2, 1), LinkVertex::up(3)));
  CHECK_FALSE(compatible(D(1, 2, 1), LinkVertex::up(2)));
  CHECK(compatible(LinkVertex::up(1), LinkVertex::up(2)));
}

TEST_CASE("intersections of links") {
  auto qv = abstract_descending_link(7, 4, Family::QV);
  auto none = intersect_links(qv, {});
  CHECK(none.link.complex == qv.complex);
  auto one = intersect_links(qv, {D(1, 2, 1)});
  CHECK(one.recognized.k == 5);
  CHECK(one.recognized.l == 3);
  CHECK(relabel(one.recognized, D(3, 4, 2)) == D(1, 2, 1));

  auto qt = abstract_descending_link(8, 5, Family::QT);
  auto wrap = intersect_links(qt, {D(8, 1, 1)});
  CHECK(wrap.recognized.qt_to_qf);
  CHECK(wrap.recognized.blocks == std::vector<std::size_t>{6});

  auto qf = abstract_descending_link(8, 5, Family::QF);
  auto middle = intersect_links(qf, {D(3, 4, 2)});
  CHECK(middle.recognized.blocks == std::vector<std::size_t>{2, 4});
}

TEST_CASE("skeleton covers") {
  auto c0 = cover_by_skeleton_neighborhoods(5, 3, Family::QF, 0);
  CHECK(c0.ok());
  CHECK(c0.centers.size() == 6);
  // the three stars on (1,2,b) exhaust the colors
  CHECK_FALSE(c0.subfamilies_meet);
  REQUIRE(c0.subfamily_witness);
  auto c1 = cover_by_skeleton_neighborhoods(8, 5, Family::QF, 1);
  CHECK(c1.ok());
  CHECK(c1.subfamilies_meet);

  // without the m = 1 centers, a simplex on (1,2,*) escapes
  auto qf = abstract_descending_link(8, 5, Family::QF, 3);
  std::vector<LinkVertex> only_two;
  for (std::uint32_t b = 1; b <= 5; ++b) {
    only_two.push_back(D(2, 3, b));
  }
  auto bad = certify_cover(qf, only_two, 3);
  CHECK_FALSE(bad.covered);
  REQUIRE(bad.witness);

  // the QF(5,3) cover has a complete nerve graph
  auto k53 = abstract_descending_link(5, 3, Family::QF, 2);
  auto members = cover_members(k53, c0.centers, 2);
  auto nerve = nerve_of_cover(members, 1);
  CHECK(nerve.count(0) == 6);
  CHECK(nerve.count(1) == 15);

  CHECK_THROWS_AS(cover_by_skeleton_neighborhoods(9, 5, Family::QV, 1), Error);
}

TEST_CASE("realizing the marked square") {
  MarkedCube cube{fixture("figure1_delta1.json"), fixture("figure2_psi.json"), {0, 1}};
  validate_cube(cube);
  auto count = [&](bool b0, bool b1) {
    return realize_cube(cube, {b0, b1}).representative.transistor_count();
  };
  CHECK(count(false, false) == 3);
  CHECK(count(true, false) == 2);
  CHECK(count(false, true) == 4);
  CHECK(count(true, true) == 3);
  CHECK(realize_cube(cube, {false, false}) == make_vertex(cube.delta));
  CHECK(realize_cube(cube, {true, true}) == make_vertex(concatenate(cube.delta, cube.psi)));
  CHECK_THROWS_AS(realize_cube(cube, {true}), Error);

  MarkedCube stacked{fixture("figure1_delta1.json"), fixture("figure1_delta1.json"), {0, 1, 2}};
  CHECK_THROWS_AS(validate_cube(stacked), Error);
}

TEST_CASE("disjoint applications") {
  auto p = qv_presentation();
  auto top = word_from_chars("xxxxaa");
  auto move = [&](std::vector<std::size_t> at) {
    return single_transistor_diagram(p, top, at, word_from_chars("x"));
  };
  CHECK(are_disjoint(move({0, 4, 1}), move({2, 5, 3})));
  CHECK_FALSE(are_disjoint(move({0, 4, 1}), move({0, 5, 2})));
  CHECK_FALSE(are_disjoint(move({0, 4, 1}), move({2, 4, 3})));
}

TEST_CASE("links from diagrams match the closed form") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t l = 0; l <= 2; ++l) {
      auto v = make_vertex(permutation_diagram(qv_presentation(), power_word(k, l)));
      auto dl = link_from_diagrams(v);
      auto al = abstract_link(k, l);
      CHECK(dl.moves.size() == k * (k - 1) * l + k);
      CHECK(labelled(dl.complex) == labelled(al.complex));
    }
  }
  auto small = make_vertex(permutation_diagram(qv_presentation(), word_from_chars("xxa")));
  CHECK(link_from_diagrams(small).moves.size() == 4);
}

TEST_CASE("filtration levels and orbits") {
  auto p = qv_presentation();
  auto id = make_vertex(permutation_diagram(p, word_from_chars("x")));
  CHECK(filtration_level(id) == 1);
  auto v = make_vertex(permutation_diagram(p, word_from_chars("xxxaa")));
  CHECK(filtration_level(v) == 3);
  CHECK_THROWS_AS(filtration_level(make_vertex(permutation_diagram(p, word_from_chars("xa")))), Error);

  Rng rng(29);
  std::size_t same = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto a = make_vertex(testing::random_diagram(p, rng, 6));
    auto b = make_vertex(testing::random_diagram(p, rng, 6));
    auto la = bottom_label(a.representative), lb = bottom_label(b.representative);
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    CHECK(same_orbit(a, b) == (la == lb));
    same += same_orbit(a, b) && !(a == b);
  }
  CHECK(same > 0);
}
