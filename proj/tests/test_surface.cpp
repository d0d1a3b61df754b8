#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nanodisc/embedding.hpp"
#include "nanodisc/metrics.hpp"
#include "nanodisc/surface.hpp"
#include "test_graphs.hpp"

using namespace nanodisc;

namespace {

std::map<std::size_t, std::size_t> degree_histogram(const Adjacency& adj) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& nb : adj) ++hist[nb.size()];
  return hist;
}

std::map<std::size_t, std::size_t> face_lengths(const std::vector<Face>& faces) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& f : faces) ++hist[f.size()];
  return hist;
}

std::multiset<Face> canonical_set(const std::vector<Face>& faces) {
  std::multiset<Face> out;
  for (const auto& f : faces) out.insert(canonical_cycle(f));
  return out;
}

}  // namespace

TEST_CASE("glue D*_{2,1}") {
  const auto sphere = build_triangulation(2, 1);
  CHECK(sphere.vertex_count() == 26);
  CHECK(edge_count(sphere.rotation) == 72);
  CHECK(sphere.triangles.size() == 48);
  CHECK(degree_histogram(sphere.rotation) == std::map<std::size_t, std::size_t>{{5, 12}, {6, 14}});
  CHECK(sphere.north == 0);
  CHECK(sphere.south == 19);
  CHECK(sphere.equator.size() == 12);
}

TEST_CASE("glue D*_{5,2}") {
  const auto sphere = build_triangulation(5, 2);
  CHECK(sphere.vertex_count() == 152);
  CHECK(edge_count(sphere.rotation) == 450);
  CHECK(sphere.triangles.size() == 300);
}

TEST_CASE("glue rejects bad parameters") {
  const auto p2 = build_patch(2);
  const auto p3 = build_patch(3);
  CHECK_THROWS_AS(glue(p2, p2, 2), Error);
  CHECK_THROWS_AS(glue(p2, p2, 0), Error);
  CHECK_THROWS_AS(glue(p2, p3, 1), Error);
  const auto p1 = build_patch(1);
  CHECK_THROWS_AS(glue(p1, p1, 0), Error);
  try {
    glue(p2, p2, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("glue identifies u_i with v_{i+t}") {
  const int r = 3, t = 2;
  const auto patch = build_patch(r);
  const auto sphere = glue(patch, patch, t);
  // The south boundary vertex v_j has south-chart neighbours that are
  // interior to the south patch; its glued id must be u_{j-t}. Check through
  // the south corner degrees: v_{kr} is a south corner, so u_{kr-t} has
  // degree 5.
  for (int k = 1; k <= 6; ++k) {
    const int i = ((k * r - t - 1) % (6 * r) + 6 * r) % (6 * r);
    CHECK(sphere.rotation[sphere.equator[i]].size() == 5);
    CHECK(sphere.rotation[sphere.equator[k * r - 1]].size() == 5);
  }
}

TEST_CASE("validate_triangulation passes on generated spheres") {
  const auto r21 = validate_triangulation(build_triangulation(2, 1));
  CHECK(r21.all_pass());

  const auto sphere = build_triangulation(5, 2);
  const auto r52 = validate_triangulation(sphere);
  CHECK(r52.all_pass());
  const std::set<VertexId> equator(sphere.equator.begin(), sphere.equator.end());
  std::size_t fives = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(sphere.vertex_count()); ++v)
    if (sphere.rotation[v].size() == 5) {
      ++fives;
      CHECK(equator.contains(v));
    }
  CHECK(fives == 12);
}

TEST_CASE("validate_triangulation flags a deleted triangle") {
  auto sphere = build_triangulation(2, 1);
  sphere.triangles.pop_back();
  const auto report = validate_triangulation(sphere);
  CHECK_FALSE(report.euler);
  CHECK(report.vertices - report.edges + report.triangles == 1);
  CHECK_FALSE(report.edge_incidence);
  CHECK_FALSE(report.all_pass());
  CHECK_THROWS_AS(dualize(sphere), Error);
}

TEST_CASE("validate_triangulation flags a reversed triangle") {
  auto sphere = build_triangulation(3, 1);
  std::swap(sphere.triangles[5][1], sphere.triangles[5][2]);
  const auto report = validate_triangulation(sphere);
  CHECK(report.euler);
  CHECK_FALSE(report.edge_incidence);
}

TEST_CASE("dualize D*_{2,1}") {
  const auto sphere = build_triangulation(2, 1);
  const auto g = dualize(sphere);
  CHECK(g.vertex_count() == 48);
  CHECK(edge_count(g.rotation) == 72);
  CHECK(g.faces.size() == 26);
  CHECK(face_lengths(g.faces) == std::map<std::size_t, std::size_t>{{5, 12}, {6, 14}});
  for (std::size_t v = 0; v < sphere.vertex_count(); ++v)
    CHECK(g.faces[v].size() == sphere.rotation[v].size());
}

TEST_CASE("dualize D*_{5,2}") {
  const auto g = dualize(build_triangulation(5, 2));
  CHECK(g.vertex_count() == 300);
  CHECK(face_lengths(g.faces) == std::map<std::size_t, std::size_t>{{5, 12}, {6, 140}});
  CHECK(g.faces.size() == 152);
}

TEST_CASE("dual vertices are triangles and dual edges shared sides") {
  const auto sphere = build_triangulation(3, 2);
  const auto g = dualize(sphere);
  for (VertexId i = 0; i < static_cast<VertexId>(g.vertex_count()); ++i) {
    REQUIRE(g.rotation[i].size() == 3);
    std::set<VertexId> mine(sphere.triangles[i].begin(), sphere.triangles[i].end());
    for (VertexId j : g.rotation[i]) {
      std::size_t shared = 0;
      for (VertexId v : sphere.triangles[j]) shared += mine.count(v);
      CHECK(shared == 2);
    }
  }
  // Each dual face is the set of triangles around its primal vertex.
  for (VertexId v = 0; v < static_cast<VertexId>(sphere.vertex_count()); ++v)
    for (VertexId tri : g.faces[v]) {
      const auto& t = sphere.triangles[tri];
      CHECK(std::find(t.begin(), t.end(), v) != t.end());
    }
}

TEST_CASE("faces_from_rotation D_{2,1} and D_{3,1}") {
  const auto g21 = dualize(build_triangulation(2, 1));
  const auto f21 = faces_from_rotation(g21);
  CHECK(f21.size() == 26);
  CHECK(face_lengths(f21) == std::map<std::size_t, std::size_t>{{5, 12}, {6, 14}});

  const auto g31 = dualize(build_triangulation(3, 1));
  const auto f31 = faces_from_rotation(g31);
  CHECK(f31.size() == 56);
  CHECK(face_lengths(f31) == std::map<std::size_t, std::size_t>{{5, 12}, {6, 44}});
}

TEST_CASE("faces_from_rotation on the hexagonal prism") {
  const auto prism = testgraphs::hexagonal_prism();
  const auto faces = faces_from_rotation(prism);
  CHECK(faces.size() == 8);
  CHECK(face_lengths(faces) == std::map<std::size_t, std::size_t>{{4, 6}, {6, 2}});

  // A neighbour entry that is not reciprocated breaks the dart partition.
  auto corrupt = prism;
  corrupt[0][1] = 8;
  CHECK_THROWS_AS(faces_from_rotation(corrupt), Error);

  auto repeated = prism;
  repeated[0][2] = repeated[0][0];
  CHECK_THROWS_AS(faces_from_rotation(repeated), Error);

  // Reversing one vertex's order is still a permutation but leaves the sphere.
  auto twisted = prism;
  std::swap(twisted[0][0], twisted[0][1]);
  const auto g = embedding_from_rotation(twisted);
  CHECK(static_cast<long>(g.vertex_count()) - static_cast<long>(edge_count(g.rotation)) +
            static_cast<long>(g.faces.size()) !=
        2);
}

TEST_CASE("family properties for 2 <= r <= 8") {
  for (int r = 2; r <= 8; ++r)
    for (int t = 1; t < r; ++t) {
      CAPTURE(r);
      CAPTURE(t);
      const auto sphere = build_triangulation(r, t);
      const auto report = validate_triangulation(sphere);
      CHECK(report.all_pass());
      CHECK(sphere.vertex_count() == static_cast<std::size_t>(6 * r * r + 2));
      const auto g = dualize(sphere);
      // Duality on counts: (V, E, F) of the dual is (F, E, V) of the primal.
      CHECK(g.vertex_count() == sphere.triangles.size());
      CHECK(edge_count(g.rotation) == edge_count(sphere.rotation));
      CHECK(g.faces.size() == sphere.vertex_count());
      CHECK(g.vertex_count() == static_cast<std::size_t>(12 * r * r));
      CHECK(std::all_of(g.rotation.begin(), g.rotation.end(),
                        [](const auto& nb) { return nb.size() == 3; }));
      CHECK(is_connected(g.rotation));
      CHECK(find_bridges(g.rotation).empty());
      CHECK(canonical_set(faces_from_rotation(g)) == canonical_set(g.faces));
    }
}

TEST_CASE("face_adjacency of the fullerene recovers the triangulation") {
  const auto sphere = build_triangulation(4, 3);
  const auto g = dualize(sphere);
  CHECK(same_edge_set(face_adjacency(g), sphere.rotation));
}
