#include <catch_amalgamated.hpp>
#include <fstream>
#include <sstream>

#include "qdg/canonical.hpp"
#include "qdg/diagram.hpp"
#include "qdg/json_io.hpp"
#include "qdg/rewriting.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qdg;

namespace {
  Diagram fixture(std::string const& name) {
    std::ifstream in(std::string(QDG_FIXTURES) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return diagram_from_json(parse_json(ss.str(), name));
  }

  Diagram split(PresentationPtr p) {
    std::vector<std::size_t> at{0};
    return single_transistor_diagram(p, word_from_chars("x"), at, p->relations()[0].rhs);
  }

  bool has_code(std::vector<Violation> const& vs, std::string const& code) {
    return std::any_of(vs.begin(), vs.end(), [&](Violation const& v) { return v.code == code; });
  }
}  // namespace

TEST_CASE("validate_diagram") {
  auto id = permutation_diagram(qv_presentation(), word_from_chars("x"));
  CHECK(validate_diagram(id).empty());
  CHECK(validate_diagram(split(qv_presentation())).empty());

  SECTION("a cycle in the vertical order") {
    // T0 emits wire 3 into T1, T1 emits wire 4 back into T0
    Diagram d;
    d.presentation = qv_presentation();
    auto const x = *d.presentation->letter(letter_x());
    auto const a = *d.presentation->letter(letter_a());
    d.labels = {x, x, a, x, x, a, x};
    d.frame_top = {0};
    d.transistors = {{{4}, {1, 2, 3}}, {{3}, {4, 5, 6}}};
    d.frame_bottom = {0, 1, 2, 5, 6};
    auto problems = validate_diagram(d);
    CHECK(has_code(problems, "order_not_strict"));
  }

  SECTION("ports hit twice") {
    auto d = split(qv_presentation());
    d.frame_bottom.push_back(d.frame_bottom.front());
    CHECK_FALSE(validate_diagram(d).empty());
  }

  SECTION("not a relation") {
    auto d = split(qv_presentation());
    std::swap(d.labels[d.transistors[0].bottom[0]], d.labels[d.transistors[0].bottom[1]]);
    CHECK(has_code(validate_diagram(d), "not_a_relation"));
  }
}

TEST_CASE("labels of the worked fixtures") {
  auto d1 = fixture("figure1_delta1.json");
  CHECK(to_string(top_label(d1)) == "x");
  CHECK(to_string(bottom_label(d1)) == "xxxx");
  auto d2 = fixture("figure1_delta2.json");
  CHECK(to_string(top_label(d2)) == "xxxx");
  CHECK(to_string(bottom_label(d2)) == "x");
  auto t = split(qv_presentation());
  CHECK(to_string(top_label(t)) == "x");
  CHECK(to_string(bottom_label(t)) == "xax");
}

TEST_CASE("concatenate and invert") {
  auto d1 = fixture("figure1_delta1.json");
  auto d2 = fixture("figure1_delta2.json");
  auto c = concatenate(d1, d2);
  CHECK(c.transistor_count() == 6);
  CHECK(validate_diagram(c).empty());
  CHECK(is_equivalent(c, fixture("figure1_concat.json")));
  CHECK_THROWS_AS(concatenate(d1, d1), Error);
  CHECK_THROWS_AS(concatenate(d1, split(qv_presentation())), Error);

  auto id = permutation_diagram(v_presentation(), word_from_chars("x"));
  CHECK(is_equivalent(concatenate(id, d1), d1));

  auto t = split(qv_presentation());
  auto pair = concatenate(t, invert(t));
  CHECK(pair.transistor_count() == 2);
  CHECK(to_string(bottom_label(pair)) == "x");
  CHECK(to_string(bottom_label(invert(t))) == "x");
  CHECK(is_equivalent(invert(invert(d1)), d1));
  CHECK(is_permutation(reduce(concatenate(d1, invert(d1)))));
}

TEST_CASE("is_permutation and is_thin") {
  CHECK(is_permutation(permutation_diagram(qv_presentation(), word_from_chars("x"))));
  CHECK(is_permutation(permutation_diagram(qv_presentation(), word_from_chars("xa"), std::vector<std::size_t>{1, 0})));
  CHECK_FALSE(is_permutation(fixture("figure1_delta1.json")));
  CHECK(is_thin(permutation_diagram(v_presentation(), word_from_chars("xx"))));
  CHECK(is_thin(fixture("figure2_psi.json")));
  CHECK_FALSE(is_thin(fixture("figure1_delta1.json")));
}

TEST_CASE("erase_letter") {
  auto t = split(qv_presentation());
  auto e = erase_letter(t, letter_a());
  CHECK(*e.presentation == *v_presentation());
  CHECK(to_string(bottom_label(e)) == "xx");
  auto pure = permutation_diagram(qv_presentation(), word_from_chars("xx"));
  CHECK(erase_letter(pure, letter_a()).wire_count() == 2);
  auto h = fixture("figure4.json");
  auto eh = erase_letter(h, letter_a());
  CHECK(eh.transistor_count() == 4);
  CHECK(validate_diagram(eh).empty());
}

TEST_CASE("planarity and annularity examples") {
  auto p = v_presentation();
  std::vector<std::size_t> swap{1, 0};
  CHECK_FALSE(is_planar(permutation_diagram(p, word_from_chars("xx"), swap)));
  CHECK(is_planar(split(p)));
  std::vector<std::size_t> shift{1, 2, 0};
  auto cyc = permutation_diagram(p, word_from_chars("xxx"), shift);
  CHECK(is_annular(cyc));
  CHECK_FALSE(is_planar(cyc));
  CHECK_FALSE(is_planar(fixture("figure1_delta1.json")));
  CHECK(is_planar(fixture("figure1_delta2.json")));
}

TEST_CASE("canonical codes ignore internal numbering", "[property]") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = testing::random_diagram(trial % 2 ? qv_presentation() : v_presentation(), rng, 8);
    auto s = testing::shuffle_ids(d, rng);
    REQUIRE(validate_diagram(s).empty());
    for (auto f : {CodeFlavor::full, CodeFlavor::bottom_unordered, CodeFlavor::bottom_cyclic}) {
      CHECK(canonical_code(d, f) == canonical_code(s, f));
    }
    CHECK(is_equivalent(canonical_form(d), d));
  }
}

TEST_CASE("canonical flavors see the right frame freedom") {
  auto p = v_presentation();
  auto top = word_from_chars("xxx");
  std::vector<std::size_t> id{0, 1, 2}, shift{1, 2, 0}, swap{1, 0, 2};
  auto a = permutation_diagram(p, top, id);
  auto b = permutation_diagram(p, top, shift);
  auto c = permutation_diagram(p, top, swap);
  CHECK_FALSE(is_equivalent(a, b));
  CHECK(is_equivalent(a, b, CodeFlavor::bottom_cyclic));
  CHECK_FALSE(is_equivalent(a, c, CodeFlavor::bottom_cyclic));
  CHECK(is_equivalent(a, c, CodeFlavor::bottom_unordered));
}

TEST_CASE("diagram invariants on random diagrams", "[property]") {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    auto d1 = testing::random_diagram(qv_presentation(), rng, 6);
    // filtration count: |w|_x = |w|_a + 1 below a top label x
    auto b = bottom_label(d1);
    CHECK(count_letter(b, letter_x()) == count_letter(b, letter_a()) + 1);

    auto d2 = concatenate(invert(d1), d1);
    auto d3 = invert(d1);
    CHECK(is_equivalent(concatenate(concatenate(d1, d2), d3), concatenate(d1, concatenate(d2, d3))));
    CHECK(is_equivalent(invert(concatenate(d1, d2)), concatenate(invert(d2), invert(d1))));
    if (is_planar(d1)) {
      CHECK(is_annular(d1));
    }
  }
}

TEST_CASE("greedy peeling matches every peel order on small diagrams", "[property][oracle]") {
  Rng rng(23);
  std::size_t planar = 0, annular = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    auto d = testing::random_diagram(v_presentation(), rng, 4);
    REQUIRE(d.transistor_count() <= 4);
    bool p = is_planar(d), a = is_annular(d);
    CHECK(p == testing::peel_oracle(d, false));
    CHECK(a == testing::peel_oracle(d, true));
    planar += p;
    annular += a;
  }
  // both outcomes occur
  CHECK(planar > 0);
  CHECK(annular > planar);
}

TEST_CASE("greedy peeling matches every peel order on all short move sequences", "[oracle]") {
  std::size_t seen = 0;
  for (auto const& [top, depth] : {std::pair{"x", 4}, std::pair{"xx", 4}, std::pair{"xxx", 3}}) {
    testing::for_each_v_diagram(word_from_chars(top), static_cast<std::size_t>(depth), [&](Diagram const& d) {
      ++seen;
      CHECK(is_planar(d) == testing::peel_oracle(d, false));
      CHECK(is_annular(d) == testing::peel_oracle(d, true));
    });
  }
  CHECK(seen > 1000);
}
