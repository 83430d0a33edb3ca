#include <doctest.h>

#include "fixtures.hpp"
#include "statesurf/diagram.hpp"
#include "statesurf/table.hpp"

using namespace statesurf;
using fixtures::pd;

TEST_SUITE("diagram") {

TEST_CASE("trefoil counts") {
  const auto d = pd(fixtures::kTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count() == 6);
  CHECK(d.link_component_count() == 1);
  CHECK(faces(d).face_count() == 5);
  CHECK(writhe(d) == -3);
  CHECK(is_alternating(d));
  CHECK(is_negative(d));
  CHECK_FALSE(is_positive(d));
  CHECK(nugatory_crossings(d).empty());
}

TEST_CASE("figure eight faces and signs") {
  const auto d = pd(fixtures::kFigureEight);
  CHECK(faces(d).face_count() == 6);
  CHECK(writhe(d) == 0);
  CHECK(is_alternating(d));
  const auto cls = diagram_class(d);
  CHECK(cls.reduced);
  CHECK(cls.connected);
  CHECK_FALSE(cls.positive);
}

TEST_CASE("faces satisfy the sphere count per component") {
  for (const char* text : {fixtures::kTrefoil, fixtures::kFigureEight, fixtures::kHopf, fixtures::kWhitehead}) {
    const auto d = pd(text);
    CHECK(faces(d).face_count() == d.crossing_count() + 2);
  }
  const auto split = disjoint_union(pd(fixtures::kTrefoil), pd(fixtures::kHopf));
  CHECK(split.diagram_component_count() == 2);
  CHECK(faces(split).face_count() == 5 + 4);
  CHECK(is_split_diagram(split));
}

TEST_CASE("each corner belongs to one face") {
  const auto d = pd(fixtures::kWhitehead);
  const auto map = faces(d);
  std::size_t corners = 0;
  for (const auto& f : map.faces()) corners += f.corners.size();
  CHECK(corners == 4u * d.crossing_count());
}

TEST_CASE("kink is nugatory") {
  const auto d = pd(fixtures::kKink);
  CHECK(nugatory_crossings(d) == std::vector<int>{0});
  CHECK_FALSE(diagram_class(d).reduced);
}

TEST_CASE("crossingless circle") {
  const auto d = pd("O");
  CHECK(d.crossing_count() == 0);
  CHECK(d.free_loop_count() == 1);
  CHECK(d.link_component_count() == 1);
  CHECK(faces(d).face_count() == 2);
}

TEST_CASE("mirror is an involution and swaps positivity") {
  for (const char* text : {fixtures::kTrefoil, fixtures::kFigureEight, fixtures::kWhitehead}) {
    const auto d = pd(text);
    const auto m = mirror(d);
    CHECK(mirror(m) == d);
    CHECK(writhe(m) == -writhe(d));
    CHECK(is_positive(m) == is_negative(d));
    CHECK(faces(m).face_count() == faces(d).face_count());
  }
}

TEST_CASE("labels renumbered along components") {
  const auto d = parse_pd("X(10,40,20,50);X(30,60,40,10);X(50,20,60,30)");
  CHECK(d == pd(fixtures::kTrefoil));
  for (const auto& comp : d.link_components())
    for (std::size_t i = 1; i < comp.arcs.size(); ++i) CHECK(comp.arcs[i] == comp.arcs[i - 1] + 1);
}

TEST_CASE("pd round trip and fingerprint") {
  const auto d = pd(fixtures::kWhitehead);
  const auto again = parse_pd(d.to_pd());
  CHECK(again == d);
  CHECK(fingerprint_hex(again) == fingerprint_hex(d));
  CHECK(fingerprint_hex(d).size() == 16);
  CHECK(fingerprint_hex(d) != fingerprint_hex(mirror(d)));
}

TEST_CASE("connected components of a union") {
  const auto u = disjoint_union(pd(fixtures::kFigureEight), pd("O"));
  const auto parts = connected_components(u);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].crossing_count() == 4);
  CHECK(parts[1].free_loop_count() == 1);
}

TEST_CASE("braid closures") {
  const std::vector<int> w{1, 1, 1};
  const auto d = from_braid(w);
  CHECK(d.crossing_count() == 3);
  CHECK(is_positive(d));
  CHECK(writhe(d) == 3);
  CHECK(d.link_component_count() == 1);
  const std::vector<int> hopf{-1, -1};
  const auto h = from_braid(hopf);
  CHECK(h.link_component_count() == 2);
  CHECK(is_negative(h));
  // Strand 1 is untouched and closes to a free circle.
  const auto l = from_braid(std::vector<int>{2, 2});
  CHECK(l.crossing_count() == 2);
  CHECK(l.free_loop_count() == 1);
  CHECK(l.link_component_count() == 3);
  CHECK(is_split_diagram(l));
}

TEST_CASE("links table parses with valid faces") {
  const auto table = load_table(fixtures::data_dir() / "links_upto8.tbl");
  CHECK(table.entries.size() == 140);
  CHECK(table.diagnostics.empty());
  for (const auto& e : table.entries) {
    CHECK(faces(e.diagram).face_count() == e.diagram.crossing_count() + 2);
    CHECK(e.diagram.link_component_count() >= 2);
  }
}

}
