#include <catch_amalgamated.hpp>
#include <fstream>
#include <sstream>

#include "qdg/canonical.hpp"
#include "qdg/json_io.hpp"
#include "qdg/qv.hpp"
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

  Diagram split() {
    std::vector<std::size_t> at{0};
    return single_transistor_diagram(qv_presentation(), word_from_chars("x"), at, word_from_chars("xax"));
  }
}  // namespace

TEST_CASE("find_dipoles") {
  CHECK(find_dipoles(permutation_diagram(qv_presentation(), word_from_chars("xax"))).empty());
  auto t = split();
  auto pair = concatenate(t, invert(t));
  auto sites = find_dipoles(pair);
  REQUIRE(sites.size() == 1);
  CHECK(find_dipoles(fixture("figure1_concat.json")).size() == 1);
  CHECK(is_reduced(fixture("figure1_reduced.json")));
  CHECK_FALSE(is_reduced(pair));
}

TEST_CASE("remove_dipole and insert_dipole") {
  auto t = split();
  auto pair = concatenate(t, invert(t));
  auto site = find_dipoles(pair).front();
  auto gone = remove_dipole(pair, site);
  CHECK(gone.transistor_count() == 0);
  CHECK(is_permutation(gone));
  CHECK_THROWS_AS(remove_dipole(gone, site), Error);

  // the only dipole of the concatenation
  auto concat = fixture("figure1_concat.json");
  auto once = remove_dipole(concat, find_dipoles(concat).front());
  CHECK(once.transistor_count() == 4);
  CHECK(is_equivalent(once, fixture("figure1_reduced.json")));

  // inserting then removing gets back where we started
  auto d1 = fixture("figure1_delta1.json");
  std::vector<WireId> w{d1.frame_bottom[0]};
  auto bigger = insert_dipole(d1, w, v_presentation()->relations()[0], RelationDirection::lhs_to_rhs);
  CHECK(bigger.transistor_count() == 5);
  CHECK(find_dipoles(bigger).size() == 1);
  CHECK(is_equivalent(reduce(bigger), d1));

  std::vector<WireId> wrong{d1.frame_bottom[0]};
  CHECK_THROWS_AS(insert_dipole(d1, wrong, v_presentation()->relations()[0], RelationDirection::rhs_to_lhs),
                  Error);
}

TEST_CASE("reduce") {
  auto r = fixture("figure1_reduced.json");
  CHECK(is_equivalent(reduce(r), r));
  CHECK(reduce(fixture("figure1_concat.json")).transistor_count() == 4);
  auto d = fixture("figure4.json");
  CHECK(is_permutation(reduce(concatenate(d, invert(d)))));
}

TEST_CASE("reduction is confluent", "[property]") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = testing::random_diagram(qv_presentation(), rng, 12);
    auto const reference = canonical_code(reduce(d));
    for (int order = 0; order < 3; ++order) {
      std::size_t steps = 0;
      auto r = reduce(d, [&](std::vector<DipoleSite> const& sites) {
        ++steps;
        return rng.index(sites.size());
      });
      CHECK(canonical_code(r) == reference);
      CHECK(is_reduced(r));
      // each step removes two transistors
      CHECK(r.transistor_count() + 2 * steps == d.transistor_count());
    }
  }
}

TEST_CASE("reduced (x,x)-diagrams have no positive transistor below a negative one", "[property]") {
  Rng rng(103);
  auto const qv = qv_presentation();
  auto const x = qv->to_letters(word_from_chars("x"));
  for (int trial = 0; trial < 200; ++trial) {
    auto r = random_element(rng.next(), 5).diagram();
    auto const order = transistor_order(r);
    for (std::size_t i = 0; i < r.transistor_count(); ++i) {
      for (std::size_t j = 0; j < r.transistor_count(); ++j) {
        // i below j, i positive (top x), j negative (bottom x)
        if (order[i][j] && top_letters(r, r.transistors[i]) == x) {
          CHECK(bottom_letters(r, r.transistors[j]) != x);
        }
      }
    }
  }
}
