#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "scx/banner.hpp"
#include "scx/complex_ops.hpp"
#include "scx/error.hpp"
#include "scx/generators.hpp"
#include "scx/manifold.hpp"
#include "scx/skeleton_graph.hpp"
#include "test_util.hpp"

using namespace scx;
using scx::testing::face;
using scx::testing::make;

namespace {

// Banner number straight from its definition, with links of every face
// classified by the subset oracle.
std::optional<int> banner_number_oracle(const SimplicialComplex& c) {
  const auto faces = oracle::all_faces(c);
  for (int j = 0; j <= c.dimension() - 1; ++j) {
    bool all = true;
    auto ok = [](const SimplicialComplex& l) {
      const bool c3 = l.num_vertices() == 3 && l.dimension() == 1 && l.facets().size() == 3;
      return c3 || oracle::banner_levels(l).banner;
    };
    if (j == 0) {
      all = ok(c);
    } else {
      for (const auto& f : faces) {
        if (static_cast<int>(f.size()) != j) continue;
        all &= ok(link(c, Face(std::vector<VertexId>(f.begin(), f.end()))));
        if (!all) break;
      }
    }
    if (all) return j;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("clique enumeration") {
  CHECK(cliques(simplex_boundary(3), 4) == std::vector<Clique>{Face({0, 1, 2, 3})});
  CHECK(cliques(cycle(4), 3).empty());
  CHECK(cliques(cycle(4), 0) == std::vector<Clique>{Face()});
  const auto ball = ring_ball();
  const auto triangles = cliques(ball, 3);
  CHECK(std::find(triangles.begin(), triangles.end(), face(ball, "x1 x2 x3")) != triangles.end());

  // Against a subset scan on every small catalog complex.
  for (const auto& entry : catalog()) {
    const auto& c = entry.complex;
    if (c.num_vertices() > 16) continue;
    const auto g = oracle::graph_of(c);
    for (std::size_t j = 1; j <= 5; ++j) {
      std::vector<Clique> expected;
      for (oracle::Mask t = 1; t < oracle::bit(g.n); ++t) {
        if (static_cast<std::size_t>(std::popcount(t)) == j && oracle::is_clique(g, t)) {
          auto m = oracle::members(t);
          expected.push_back(Face(std::vector<VertexId>(m.begin(), m.end())));
        }
      }
      std::sort(expected.begin(), expected.end());
      CHECK(cliques(c, j) == expected);
    }
  }
}

TEST_CASE("spanning and critical cliques") {
  const auto ball = ring_ball();
  for (const auto& f : ball.facets()) {
    CHECK(is_spanning(ball, f));
    CHECK(is_critical(ball, f));
  }
  const auto empty_triangle = face(ball, "x1 x2 x3");
  CHECK(is_critical(ball, empty_triangle));
  CHECK_FALSE(is_spanning(ball, empty_triangle));

  const auto k4 = generate({"banana_complete", {4}});
  const auto original = face(k4, "1 2 3 4");
  CHECK_FALSE(is_critical(k4, original));
  CHECK_FALSE(is_spanning(k4, original));
  CHECK_THROWS_CODE(is_spanning(cycle(5), Face({0, 2})), ErrorCode::kNotAClique);
}

TEST_CASE("simplex boundary subcomplexes") {
  for (int d = 2; d <= 5; ++d) {
    const auto c = simplex_boundary(d);
    const auto found = contains_simplex_boundary(c, static_cast<std::size_t>(d));
    REQUIRE(found);
    CHECK(*found == c.all_vertices());
  }
  CHECK_FALSE(contains_simplex_boundary(ring_ball(), 4));
  CHECK_FALSE(contains_simplex_boundary(generate({"banana_complete", {3}}), 4));
  CHECK_THROWS_CODE(contains_simplex_boundary(cycle(4), 0), ErrorCode::kOutOfRange);
}

TEST_CASE("classification of named complexes") {
  const auto k3 = classify(generate({"banana_complete", {3}}));
  CHECK(k3.strongly_banner);
  CHECK_FALSE(k3.flag);
  const auto k4 = classify(generate({"banana_complete", {4}}));
  CHECK(k4.banner);
  CHECK_FALSE(k4.strongly_banner);
  const auto ball = classify(ring_ball());
  CHECK(ball.strongly_banner);
  CHECK_FALSE(ball.flag);
  for (int d = 2; d <= 4; ++d) CHECK(classify(cross_polytope_boundary(d)).flag);
  for (int d = 2; d <= 5; ++d) CHECK_FALSE(classify(simplex_boundary(d)).banner);
  CHECK_FALSE(classify(cycle(3)).banner);
  CHECK(classify(cycle(4)).banner);
  CHECK_THROWS_CODE(classify(make({"a b c", "c d"})), ErrorCode::kNotPure);
}

TEST_CASE("classification agrees with the subset oracle") {
  for (const auto& entry : catalog()) {
    const auto& c = entry.complex;
    if (c.num_vertices() > 20) continue;
    CAPTURE(entry.spec.display());
    const auto got = classify(c);
    const auto want = oracle::banner_levels(c);
    CHECK(got.flag == want.flag);
    CHECK(got.strongly_banner == want.strongly_banner);
    CHECK(got.banner == want.banner);
    CHECK(is_banner(c) == want.banner);
    // Implication chain.
    CHECK((!got.flag || got.strongly_banner));
    CHECK((!got.strongly_banner || got.banner));
    if (c.dimension() == 2) CHECK(got.banner == got.flag);
    if (!got.banner) CHECK(got.witness().has_value());
  }
}

TEST_CASE("banner number") {
  CHECK(banner_number(simplex_boundary(4)).get() == 2);
  CHECK(banner_number(simplex_boundary(3)).get() == 1);
  CHECK(banner_number(cycle(3)).get() == 0);
  CHECK(banner_number(cross_polytope_boundary(3)).get() == 0);
  const auto point_pair = make({"a", "b"});
  CHECK_FALSE(banner_number(point_pair).defined());
  CHECK_THROWS_CODE(banner_number(point_pair).get(), ErrorCode::kUndefined);

  for (const auto& entry : catalog()) {
    const auto& c = entry.complex;
    if (c.num_vertices() > 20) continue;
    CAPTURE(entry.spec.display());
    const auto b = banner_number(c);
    CHECK(b.value == banner_number_oracle(c));
    if (b.defined()) {
      CHECK(b.get() >= 0);
      CHECK(b.get() <= c.dimension() - 1);
      CHECK((b.get() == 0) == (classify(c).banner || is_c3(c)));
    }
  }
}

TEST_CASE("closed-off sphere clique types") {
  SUBCASE("single triangle") {
    const auto t = classify_tilde_cliques(simplex(2), 3);
    CHECK(t.type1.size() == 1);
    CHECK(t.type2.size() == 3);
    CHECK(t.type3.empty());
    for (const auto& c : t.type2) CHECK(c.contains(t.apex));
  }
  SUBCASE("vertices") {
    const auto ball = ring_ball();
    const auto t = classify_tilde_cliques(ball, 1);
    CHECK(t.type1.size() == ball.num_vertices());
    CHECK(t.type2 == std::vector<Clique>{Face({t.apex})});
    CHECK(t.type3.empty());
  }
  SUBCASE("ring ball edges with both ends on the boundary") {
    // {a1, b1} is an interior edge (its link is a closed circle), yet both
    // endpoints are boundary vertices.
    const auto ball = ring_ball();
    const auto bd = *boundary(ball);
    const auto around = link(ball, face(ball, "a1 b1"));
    CHECK(around.dimension() == 1);
    CHECK(pseudomanifold_kind(around) == PseudomanifoldKind::kClosed);
    CHECK(bd.has_face(face(bd, "a1")));
    CHECK(bd.has_face(face(bd, "b1")));
    CHECK_FALSE(bd.has_face(face(bd, "a1 b1")));
    const auto t = classify_tilde_cliques(ball, 3);
    const auto expected = face(t.tilde, "_apex0 a1 b1");
    CHECK(std::find(t.type3.begin(), t.type3.end(), expected) != t.type3.end());
  }
  SUBCASE("every clique of the closed-off sphere is classified exactly once") {
    for (const auto& ball : {ring_ball(), simplex(3), generate({"cone_cycle", {5}})}) {
      for (std::size_t j = 1; j <= 5; ++j) {
        const auto t = classify_tilde_cliques(ball, j);
        std::vector<Clique> all = t.type1;
        all.insert(all.end(), t.type2.begin(), t.type2.end());
        all.insert(all.end(), t.type3.begin(), t.type3.end());
        std::sort(all.begin(), all.end());
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        CHECK(all == cliques(t.tilde, j));
      }
    }
  }
  CHECK_THROWS_CODE(classify_tilde_cliques(simplex_boundary(2), 2), ErrorCode::kNoBoundary);
}

TEST_CASE("link inheritance") {
  for (const auto& entry : catalog()) {
    const auto& c = entry.complex;
    if (c.dimension() < 1) continue;
    const auto bc = classify(c);
    if (!bc.banner) continue;
    CAPTURE(entry.spec.display());
    for (VertexId x = 0; x < static_cast<VertexId>(c.num_vertices()); ++x) {
      const auto lc = classify(link(c, Face({x})));
      CHECK(lc.banner);
      if (bc.strongly_banner) CHECK(lc.strongly_banner);
    }
  }
}

TEST_CASE("cone and suspension preserve each level") {
  for (const auto& entry : catalog()) {
    const auto& c = entry.complex;
    CAPTURE(entry.spec.display());
    const auto bc = classify(c);
    for (const auto& other : {classify(cone(c)), classify(suspension(c))}) {
      CHECK(bc.flag == other.flag);
      CHECK(bc.strongly_banner == other.strongly_banner);
      CHECK(bc.banner == other.banner);
    }
  }
}
