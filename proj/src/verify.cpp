#include "nanodisc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "nanodisc/embedding.hpp"

namespace nanodisc {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

const char* to_string(Lemma2Mode mode) {
  switch (mode) {
    case Lemma2Mode::Auto: return "auto";
    case Lemma2Mode::Exhaustive: return "exhaustive";
    case Lemma2Mode::Sampled: return "sampled";
    case Lemma2Mode::Skip: return "skip";
  }
  return "skip";
}

std::optional<Lemma2Mode> parse_lemma2_mode(const std::string& text) {
  if (text == "auto") return Lemma2Mode::Auto;
  if (text == "exhaustive") return Lemma2Mode::Exhaustive;
  if (text == "sampled") return Lemma2Mode::Sampled;
  if (text == "skip") return Lemma2Mode::Skip;
  return std::nullopt;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of a negative number");
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

// floor(sqrt(x)) == isqrt(floor(x)) for real x >= 0, so integer division is exact.
std::int64_t conjecture_bound(std::int64_t n) { return isqrt(5 * n / 3) - 1; }

bool is_fullerene_order(std::int64_t n) { return n >= 20 && n % 2 == 0 && n != 22; }

double lower_bound_value(std::int64_t n) {
  return std::sqrt(2.0 * static_cast<double>(n) / 3.0 - 5.0 / 18.0) - 0.5;
}

bool meets_lower_bound(std::int64_t diameter, std::int64_t n) {
  if (diameter < 0) return false;
  return 9 * (2 * diameter + 1) * (2 * diameter + 1) >= 24 * n - 10;
}

FullereneReport verify_fullerene(const CubicPlaneGraph& g) {
  FullereneReport report;
  report.vertices = g.vertex_count();
  report.edges = edge_count(g.rotation);
  report.face_count = g.faces.size();

  report.cubic = report.vertices > 0 &&
                 std::all_of(g.rotation.begin(), g.rotation.end(),
                             [](const auto& nb) { return nb.size() == 3; });
  report.connected = report.vertices > 0 && is_connected(g.rotation);
  report.bridgeless = report.connected && find_bridges(g.rotation).empty();

  for (const auto& f : g.faces) {
    if (f.size() == 5) ++report.pentagon_count;
    if (f.size() == 6) ++report.hexagon_count;
  }
  report.faces = !g.faces.empty() &&
                 report.pentagon_count + report.hexagon_count == report.face_count;
  report.pentagons = report.pentagon_count == 12;
  report.euler = static_cast<long long>(report.vertices) - static_cast<long long>(report.edges) +
                     static_cast<long long>(report.face_count) ==
                 2;

  try {
    std::multiset<Face> listed, traced;
    for (const auto& f : g.faces) listed.insert(canonical_cycle(f));
    for (const auto& f : faces_from_rotation(g.rotation)) traced.insert(canonical_cycle(f));
    report.embedding = listed == traced;
  } catch (const Error&) {
    report.embedding = false;
  }
  return report;
}

Lemma2Result verify_lemma2(const CubicPlaneGraph& g, const Adjacency& dual, Lemma2Mode mode,
                           const DistanceMatrix* primal_distances) {
  Lemma2Result result;
  if (mode == Lemma2Mode::Auto)
    mode = g.vertex_count() <= kLemma2ExhaustiveLimit ? Lemma2Mode::Exhaustive
                                                      : Lemma2Mode::Sampled;
  result.mode = mode;
  if (mode == Lemma2Mode::Skip) return result;
  if (dual.size() != g.faces.size())
    throw Error(ErrorKind::InvalidArgument, "dual graph does not match the face list");

  std::vector<std::vector<VertexId>> faces_at(g.vertex_count());
  for (VertexId f = 0; f < static_cast<VertexId>(g.faces.size()); ++f)
    for (VertexId v : g.faces[f]) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
        throw Error(ErrorKind::InvalidArgument, "face references a missing vertex");
      faces_at[v].push_back(f);
    }

  std::optional<DistanceMatrix> own;
  if (!primal_distances) primal_distances = &own.emplace(g.rotation);
  const DistanceMatrix& pd = *primal_distances;
  const DistanceMatrix dd(dual);

  auto check = [&](VertexId a, VertexId b, VertexId u, VertexId v) {
    ++result.quadruples;
    const int lhs = pd(a, b);
    const int k = dd(u, v);
    if (lhs > 2 * k + 3 && !result.violation) result.violation = Lemma2Violation{a, b, u, v, lhs, k};
  };

  const auto n = static_cast<VertexId>(g.vertex_count());
  if (mode == Lemma2Mode::Exhaustive) {
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = 0; b < n; ++b)
        for (VertexId u : faces_at[a])
          for (VertexId v : faces_at[b]) check(a, b, u, v);
  } else {
    std::mt19937_64 rng(kLemma2Seed);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    for (std::size_t s = 0; s < kLemma2Samples; ++s) {
      const VertexId a = pick(rng), b = pick(rng);
      if (faces_at[a].empty() || faces_at[b].empty()) continue;
      const auto u = faces_at[a][rng() % faces_at[a].size()];
      const auto v = faces_at[b][rng() % faces_at[b].size()];
      check(a, b, u, v);
    }
  }
  result.status = status_of(!result.violation && result.quadruples > 0);
  return result;
}

CutBoundResult verify_cut_bound(const Adjacency& triangulation) {
  CutBoundResult result;
  const auto n = static_cast<VertexId>(triangulation.size());
  for (VertexId u = 0; u < n; ++u) {
    const auto tree = bfs_tree(triangulation, u);
    for (VertexId v = u + 1; v < n; ++v) {
      const auto path = tree.path_to(v);
      ++result.paths;
      const int length = static_cast<int>(path.size()) - 1;
      if (path_cut_size(triangulation, path) > path_cut_bound(length) && !result.violation)
        result.violation = path;
    }
  }
  result.status = status_of(!result.violation);
  return result;
}

bool Certificate::all_pass() const {
  return n_vertices == 12LL * r * r && triangulation.all_pass() && fullerene.all_pass() &&
         lemma2.status != CheckStatus::Fail && cut_bound.status == CheckStatus::Pass &&
         proof_structure_ok() && lipschitz && theorem1_holds && sqrt_identity &&
         lower_bound_holds;
}

Certificate verify_theorem1(int r, int t, Lemma2Mode mode) {
  const SphereTriangulation sphere = build_triangulation(r, t);
  const CubicPlaneGraph g = dualize(sphere);

  Certificate cert;
  cert.r = r;
  cert.t = t;
  cert.n_vertices = static_cast<std::int64_t>(g.vertex_count());
  cert.triangulation = validate_triangulation(sphere);
  cert.fullerene = verify_fullerene(g);

  const DistanceMatrix distances(g.rotation);
  cert.diameter = diameter(distances);

  cert.lipschitz = true;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId s = 0; s < n && cert.lipschitz; ++s)
    for (VertexId x = 0; x < n && cert.lipschitz; ++x)
      for (VertexId y : g.rotation[x])
        if (std::abs(distances(s, x) - distances(s, y)) > 1) cert.lipschitz = false;

  const auto from_north = bfs(sphere.rotation, sphere.north);
  const auto from_south = bfs(sphere.rotation, sphere.south);
  cert.lipschitz = cert.lipschitz && is_lipschitz(sphere.rotation, from_north) &&
                   is_lipschitz(sphere.rotation, from_south);
  cert.pole_distance = from_north.dist[sphere.south];
  cert.hemispheres_cover = true;
  for (std::size_t v = 0; v < sphere.vertex_count(); ++v)
    if (std::min(from_north.dist[v], from_south.dist[v]) > r) cert.hemispheres_cover = false;

  try {
    const auto lat = latitude(sphere);
    bool equator_zero = true;
    for (VertexId v : sphere.equator) equator_zero = equator_zero && lat.phi[v] == 0;
    cert.latitude_consistent = equator_zero && lat.phi[sphere.north] == r &&
                               lat.phi[sphere.south] == -r;
    cert.monotone = check_monotone_neighbors(sphere, lat).pass();
  } catch (const Error&) {
    cert.latitude_consistent = false;
    cert.monotone = false;
  }

  cert.lemma2 = verify_lemma2(g, sphere.rotation, mode, &distances);
  cert.cut_bound = verify_cut_bound(sphere);

  cert.theorem1_bound = 4LL * r;
  cert.sqrt_bound = std::sqrt(4.0 * static_cast<double>(cert.n_vertices) / 3.0);
  if (cert.n_vertices % 3 == 0) {
    const std::int64_t m = 4 * cert.n_vertices / 3;
    const std::int64_t s = isqrt(m);
    if (s * s == m) cert.sqrt_bound_exact = s;
  }
  cert.sqrt_identity = cert.sqrt_bound_exact == cert.theorem1_bound;
  cert.conjecture_bound = conjecture_bound(cert.n_vertices);
  cert.lower_bound = lower_bound_value(cert.n_vertices);

  cert.theorem1_holds = cert.diameter.value <= cert.theorem1_bound;
  cert.lower_bound_holds = verify_lower_bound(cert);
  cert.is_counterexample = cert.diameter.value < cert.conjecture_bound;
  return cert;
}

bool verify_lower_bound(const Certificate& cert) {
  return meets_lower_bound(cert.diameter.value, cert.n_vertices);
}

bool ScanResult::all_pass() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.all_pass(); });
}

ScanResult scan_counterexamples(int r_max, Lemma2Mode mode) {
  if (r_max < 2)
    throw Error(ErrorKind::InvalidArgument, "scan needs max radius >= 2, got " + std::to_string(r_max));
  ScanResult scan;
  for (int r = 2; r <= r_max; ++r)
    for (int t = 1; t <= r - 1; ++t) scan.certificates.push_back(verify_theorem1(r, t, mode));
  std::stable_sort(scan.certificates.begin(), scan.certificates.end(),
                   [](const Certificate& a, const Certificate& b) {
                     return std::pair(a.n_vertices, a.t) < std::pair(b.n_vertices, b.t);
                   });
  for (const auto& c : scan.certificates)
    if (c.is_counterexample &&
        (!scan.minimum_counterexample || c.n_vertices < *scan.minimum_counterexample))
      scan.minimum_counterexample = c.n_vertices;
  return scan;
}

namespace {

bool is_simple(const Adjacency& graph) {
  const auto n = static_cast<VertexId>(graph.size());
  for (VertexId v = 0; v < n; ++v) {
    std::set<VertexId> seen;
    for (VertexId w : graph[v]) {
      if (w < 0 || w >= n || w == v || !seen.insert(w).second) return false;
      if (std::find(graph[w].begin(), graph[w].end(), v) == graph[w].end()) return false;
    }
  }
  return true;
}

}  // namespace

InputReport check_input(const Adjacency& graph, const std::optional<Adjacency>& rotation,
                        Lemma2Mode mode) {
  InputReport report;
  report.vertices = graph.size();
  report.simple = is_simple(graph);
  report.embedding_supplied = rotation.has_value();
  if (!report.simple) return report;

  if (rotation) {
    if (same_edge_set(graph, *rotation)) {
      try {
        report.embedded = embedding_from_rotation(*rotation);
      } catch (const Error&) {
        report.embedded.reset();
      }
    }
  } else {
    report.embedded = recover_embedding(graph);
  }
  report.embedding_found = report.embedded.has_value();
  if (!report.embedded) return report;

  const CubicPlaneGraph& g = *report.embedded;
  report.fullerene = verify_fullerene(g);
  if (report.fullerene.connected) {
    const DistanceMatrix distances(g.rotation);
    report.diameter = diameter(distances);
    report.lemma2 = verify_lemma2(g, face_adjacency(g), mode, &distances);
  }
  return report;
}

}  // namespace nanodisc
