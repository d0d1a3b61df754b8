#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nanodisc/metrics.hpp"
#include "nanodisc/surface.hpp"

namespace nanodisc {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus status);
inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

enum class Lemma2Mode { Auto, Exhaustive, Sampled, Skip };

const char* to_string(Lemma2Mode mode);
std::optional<Lemma2Mode> parse_lemma2_mode(const std::string& text);

/// Graphs up to this order get an exhaustive Lemma 2 sweep under Auto.
inline constexpr std::size_t kLemma2ExhaustiveLimit = 200;
inline constexpr std::size_t kLemma2Samples = 20000;
inline constexpr std::uint64_t kLemma2Seed = 0x6e616e6f64697363ULL;

/// floor(sqrt(n)) for n >= 0, exact.
std::int64_t isqrt(std::int64_t n);

/// floor(sqrt(5n/3)) - 1, with the floor taken on integers.
std::int64_t conjecture_bound(std::int64_t n);

/// Fullerenes exist for every even n >= 20 except 22.
bool is_fullerene_order(std::int64_t n);

/// sqrt(2n/3 - 5/18) - 1/2, for display only.
double lower_bound_value(std::int64_t n);

/// diameter >= sqrt(2n/3 - 5/18) - 1/2, decided as 9(2d+1)^2 >= 24n - 10.
bool meets_lower_bound(std::int64_t diameter, std::int64_t n);

struct FullereneReport {
  bool cubic = false;
  bool connected = false;
  bool bridgeless = false;
  bool faces = false;      // every face is a pentagon or a hexagon
  bool pentagons = false;  // exactly twelve
  bool euler = false;
  bool embedding = false;  // face list agrees with rotation tracing

  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t face_count = 0;
  std::size_t pentagon_count = 0;
  std::size_t hexagon_count = 0;

  bool all_pass() const {
    return cubic && connected && bridgeless && faces && pentagons && euler && embedding;
  }
};

FullereneReport verify_fullerene(const CubicPlaneGraph& g);

struct Lemma2Violation {
  VertexId a = 0, b = 0;        // vertices of G
  VertexId face_a = 0, face_b = 0;  // incident faces, as dual vertices
  int primal_distance = 0;
  int dual_distance = 0;
};

struct Lemma2Result {
  CheckStatus status = CheckStatus::Skipped;
  Lemma2Mode mode = Lemma2Mode::Skip;  // never Auto
  std::size_t quadruples = 0;
  std::optional<Lemma2Violation> violation;
};

/// dist_G(A,B) <= 2 dist_{G*}(u,v) + 3 for faces u at A and v at B. Face j of
/// g is vertex j of `dual`.
Lemma2Result verify_lemma2(const CubicPlaneGraph& g, const Adjacency& dual, Lemma2Mode mode,
                           const DistanceMatrix* primal_distances = nullptr);
inline Lemma2Result verify_lemma2(const CubicPlaneGraph& g, const SphereTriangulation& dual,
                                  Lemma2Mode mode) {
  return verify_lemma2(g, dual.rotation, mode);
}

struct CutBoundResult {
  CheckStatus status = CheckStatus::Fail;
  std::size_t paths = 0;
  std::optional<std::vector<VertexId>> violation;
};

/// For every pair u < v, the BFS-parent shortest path P from u to v satisfies
/// |cut(P)| <= 6 + 4 |P|.
CutBoundResult verify_cut_bound(const Adjacency& triangulation);
inline CutBoundResult verify_cut_bound(const SphereTriangulation& sphere) {
  return verify_cut_bound(sphere.rotation);
}

struct Certificate {
  int r = 0;
  int t = 0;
  std::int64_t n_vertices = 0;
  DiameterWitness diameter;
  std::int64_t theorem1_bound = 0;   // 4r
  double sqrt_bound = 0.0;           // sqrt(4n/3)
  std::int64_t sqrt_bound_exact = -1;  // isqrt(4n/3) when 4n/3 is a perfect square
  std::int64_t conjecture_bound = 0;
  double lower_bound = 0.0;

  TriangulationReport triangulation;
  FullereneReport fullerene;
  Lemma2Result lemma2;
  CutBoundResult cut_bound;

  int pole_distance = -1;
  bool hemispheres_cover = false;  // min(dist(n,v), dist(s,v)) <= r for all v
  bool latitude_consistent = false;
  bool monotone = false;
  bool lipschitz = false;

  bool theorem1_holds = false;
  bool sqrt_identity = false;  // sqrt_bound_exact == theorem1_bound
  bool lower_bound_holds = false;
  bool is_counterexample = false;

  bool proof_structure_ok() const {
    return monotone && latitude_consistent && hemispheres_cover && pole_distance == 2 * r;
  }
  /// Every check that ran passed; a skipped Lemma 2 sweep does not fail.
  bool all_pass() const;
};

/// Builds D_{r,t} and certifies it.
Certificate verify_theorem1(int r, int t, Lemma2Mode mode = Lemma2Mode::Auto);

bool verify_lower_bound(const Certificate& cert);

struct ScanResult {
  std::vector<Certificate> certificates;  // ordered by (n, t)
  std::optional<std::int64_t> minimum_counterexample;

  bool all_pass() const;
};

ScanResult scan_counterexamples(int r_max, Lemma2Mode mode = Lemma2Mode::Auto);

/// Report for an externally supplied graph.
struct InputReport {
  std::size_t vertices = 0;
  bool simple = false;
  bool embedding_supplied = false;
  bool embedding_found = false;
  std::optional<CubicPlaneGraph> embedded;
  FullereneReport fullerene;
  Lemma2Result lemma2;
  std::optional<DiameterWitness> diameter;

  bool all_pass() const {
    return simple && embedding_found && fullerene.all_pass() &&
           lemma2.status != CheckStatus::Fail;
  }
};

/// Checks an arbitrary graph as a fullerene. Uses `rotation` as the
/// embedding when given (it must have the same edges as `graph`), otherwise
/// recovers the embedding from the graph.
InputReport check_input(const Adjacency& graph, const std::optional<Adjacency>& rotation,
                        Lemma2Mode mode = Lemma2Mode::Auto);

}  // namespace nanodisc
