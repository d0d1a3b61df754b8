#include <doctest.h>

#include <cmath>

#include "nanodisc/embedding.hpp"
#include "nanodisc/graph6.hpp"
#include "nanodisc/verify.hpp"
#include "test_graphs.hpp"

using namespace nanodisc;

TEST_CASE("isqrt is exact") {
  for (std::int64_t k = 0; k < 3000; ++k) {
    CHECK(isqrt(k * k) == k);
    if (k > 0) CHECK(isqrt(k * k - 1) == k - 1);
  }
  CHECK(isqrt(500) == 22);
  CHECK_THROWS_AS(isqrt(-1), Error);
}

TEST_CASE("conjecture_bound") {
  CHECK(conjecture_bound(300) == 21);
  CHECK(conjecture_bound(48) == 7);
  CHECK(conjecture_bound(60) == 9);
  // Cross-check against extended-precision floating point away from the
  // integer boundaries.
  for (std::int64_t n = 20; n <= 20000; n += 2) {
    const long double x = std::sqrt(5.0L * n / 3.0L);
    const long double frac = x - std::floor(x);
    if (frac < 1e-9L || frac > 1 - 1e-9L) continue;
    CHECK(conjecture_bound(n) == static_cast<std::int64_t>(std::floor(x)) - 1);
  }
  // Perfect-square boundary: 5n/3 = 100 exactly.
  CHECK(conjecture_bound(60) == 9);
  CHECK(is_fullerene_order(60));
  CHECK_FALSE(is_fullerene_order(22));
  CHECK_FALSE(is_fullerene_order(21));
  CHECK(conjecture_bound(10) == isqrt(16) - 1);  // still computes out of range
}

TEST_CASE("lower bound arithmetic") {
  CHECK_FALSE(meets_lower_bound(13, 300));
  CHECK(meets_lower_bound(14, 300));
  CHECK_FALSE(meets_lower_bound(5, 48));
  CHECK(meets_lower_bound(6, 48));
  CHECK(lower_bound_value(300) == doctest::Approx(13.632).epsilon(1e-4));
  for (std::int64_t n = 20; n <= 2000; n += 2)
    for (std::int64_t d = 0; d <= 60; ++d) {
      const long double rhs = std::sqrt(2.0L * n / 3.0L - 5.0L / 18.0L) - 0.5L;
      if (std::fabs(static_cast<long double>(d) - rhs) < 1e-9L) continue;
      CHECK(meets_lower_bound(d, n) == (static_cast<long double>(d) >= rhs));
    }
}

TEST_CASE("verify_fullerene") {
  const auto r21 = verify_fullerene(dualize(build_triangulation(2, 1)));
  CHECK(r21.all_pass());

  const auto r83 = verify_fullerene(dualize(build_triangulation(8, 3)));
  CHECK(r83.all_pass());
  CHECK(r83.vertices == 768);
  CHECK(r83.pentagon_count == 12);

  const auto c6 = verify_fullerene(embedding_from_rotation(testgraphs::cycle(6)));
  CHECK_FALSE(c6.cubic);
  CHECK(c6.connected);
  CHECK(c6.faces);
  CHECK_FALSE(c6.pentagons);

  const auto prism = verify_fullerene(embedding_from_rotation(testgraphs::hexagonal_prism()));
  CHECK(prism.cubic);
  CHECK(prism.euler);
  CHECK_FALSE(prism.faces);

  // A stale face list no longer matches the rotation.
  auto g = dualize(build_triangulation(2, 1));
  std::swap(g.rotation[0][0], g.rotation[0][1]);
  CHECK_FALSE(verify_fullerene(g).embedding);
}

TEST_CASE("verify_lemma2 exhaustive") {
  const auto s21 = build_triangulation(2, 1);
  const auto g21 = dualize(s21);
  const auto res = verify_lemma2(g21, s21, Lemma2Mode::Exhaustive);
  CHECK(res.status == CheckStatus::Pass);
  CHECK(res.quadruples == 48u * 48u * 9u);

  const auto s32 = build_triangulation(3, 2);
  CHECK(verify_lemma2(dualize(s32), s32, Lemma2Mode::Exhaustive).status == CheckStatus::Pass);

  // Zero-distance quadruple: A == B, u == v gives 0 <= 3.
  const DistanceMatrix d(g21.rotation);
  CHECK(d(7, 7) == 0);
}

TEST_CASE("verify_lemma2 detects a wrong dual") {
  const auto g = dualize(build_triangulation(2, 1));
  const auto res = verify_lemma2(g, testgraphs::complete(26), Lemma2Mode::Exhaustive);
  CHECK(res.status == CheckStatus::Fail);
  REQUIRE(res.violation);
  CHECK(res.violation->primal_distance > 2 * res.violation->dual_distance + 3);
  CHECK_THROWS_AS(verify_lemma2(g, testgraphs::complete(5), Lemma2Mode::Exhaustive), Error);
}

TEST_CASE("verify_lemma2 modes") {
  const auto s = build_triangulation(5, 2);
  const auto g = dualize(s);
  const auto sampled = verify_lemma2(g, s, Lemma2Mode::Sampled);
  CHECK(sampled.status == CheckStatus::Pass);
  CHECK(sampled.quadruples >= 10000);
  const auto exhaustive = verify_lemma2(g, s, Lemma2Mode::Exhaustive);
  CHECK(exhaustive.status == CheckStatus::Pass);
  // Sampling is deterministic.
  CHECK(verify_lemma2(g, s, Lemma2Mode::Sampled).quadruples == sampled.quadruples);

  CHECK(verify_lemma2(g, s, Lemma2Mode::Auto).mode == Lemma2Mode::Sampled);
  const auto s21 = build_triangulation(2, 1);
  CHECK(verify_lemma2(dualize(s21), s21, Lemma2Mode::Auto).mode == Lemma2Mode::Exhaustive);
  const auto skipped = verify_lemma2(g, s, Lemma2Mode::Skip);
  CHECK(skipped.status == CheckStatus::Skipped);
  CHECK(skipped.quadruples == 0);
}

TEST_CASE("verify_cut_bound") {
  const auto r21 = verify_cut_bound(build_triangulation(2, 1));
  CHECK(r21.status == CheckStatus::Pass);
  CHECK(r21.paths == 26u * 25u / 2u);
  CHECK(verify_cut_bound(build_triangulation(4, 1)).status == CheckStatus::Pass);
  // Degree 7 at a path end exceeds 6 + 4k for k = 0.
  CHECK(verify_cut_bound(testgraphs::complete(8)).status == CheckStatus::Fail);
}

TEST_CASE("verify_theorem1 certificates") {
  const auto c52 = verify_theorem1(5, 2);
  CHECK(c52.n_vertices == 300);
  CHECK(c52.diameter.value <= 20);
  CHECK(c52.conjecture_bound == 21);
  CHECK(c52.is_counterexample);
  CHECK(c52.theorem1_bound == 20);
  CHECK(c52.sqrt_bound_exact == 20);
  CHECK(c52.sqrt_bound == doctest::Approx(20.0));
  CHECK(c52.all_pass());

  const auto c21 = verify_theorem1(2, 1);
  CHECK(c21.n_vertices == 48);
  CHECK(c21.diameter.value >= 7);
  CHECK(c21.diameter.value <= 8);
  CHECK(c21.conjecture_bound == 7);
  CHECK_FALSE(c21.is_counterexample);
  CHECK(c21.lemma2.mode == Lemma2Mode::Exhaustive);
  CHECK(c21.all_pass());

  const auto c31 = verify_theorem1(3, 1);
  CHECK(c31.n_vertices == 108);
  CHECK(c31.conjecture_bound == 12);
  CHECK(c31.is_counterexample == (c31.diameter.value <= 11));
  CHECK(verify_lower_bound(c31));

  CHECK_THROWS_AS(verify_theorem1(2, 2), Error);
  CHECK_THROWS_AS(verify_theorem1(1, 0), Error);
}

TEST_CASE("scan_counterexamples") {
  const auto scan5 = scan_counterexamples(5);
  CHECK(scan5.certificates.size() == 10);
  REQUIRE(scan5.minimum_counterexample);
  CHECK(*scan5.minimum_counterexample == 300);
  CHECK(scan5.all_pass());
  for (std::size_t i = 1; i < scan5.certificates.size(); ++i) {
    const auto& a = scan5.certificates[i - 1];
    const auto& b = scan5.certificates[i];
    CHECK(std::pair(a.n_vertices, a.t) < std::pair(b.n_vertices, b.t));
    CHECK(a.conjecture_bound <= b.conjecture_bound);
  }

  const auto scan2 = scan_counterexamples(2);
  CHECK(scan2.certificates.size() == 1);
  CHECK_FALSE(scan2.minimum_counterexample);

  CHECK_THROWS_AS(scan_counterexamples(1), Error);
}

TEST_CASE("check_input recovers the embedding of a generated fullerene") {
  const auto g = dualize(build_triangulation(3, 2));
  const auto decoded = decode_graph6(encode_graph6(g.rotation));
  const auto report = check_input(decoded, std::nullopt);
  CHECK(report.simple);
  CHECK(report.embedding_found);
  CHECK(report.fullerene.all_pass());
  CHECK(report.lemma2.status == CheckStatus::Pass);
  REQUIRE(report.diameter);
  CHECK(report.diameter->value == 12);
  CHECK(report.all_pass());

  const auto supplied = check_input(decoded, g.rotation);
  CHECK(supplied.embedding_supplied);
  CHECK(supplied.all_pass());
}

TEST_CASE("check_input rejects non-fullerenes") {
  const auto prism = check_input(testgraphs::hexagonal_prism(), std::nullopt);
  CHECK(prism.embedding_found);
  CHECK_FALSE(prism.fullerene.faces);
  CHECK_FALSE(prism.all_pass());

  // Petersen graph: cubic but not planar.
  Adjacency petersen(10);
  auto link = [&](int a, int b) {
    petersen[a].push_back(b);
    petersen[b].push_back(a);
  };
  for (int i = 0; i < 5; ++i) {
    link(i, (i + 1) % 5);
    link(i, i + 5);
    link(5 + i, 5 + (i + 2) % 5);
  }
  const auto pet = check_input(petersen, std::nullopt);
  CHECK_FALSE(pet.embedding_found);
  CHECK_FALSE(pet.all_pass());

  Adjacency loop{{0, 1}, {0}};
  CHECK_FALSE(check_input(loop, std::nullopt).simple);

  // Supplied rotation with different edges is refused.
  const auto g = dualize(build_triangulation(2, 1));
  auto wrong = g.rotation;
  wrong[0] = {wrong[0][0], wrong[0][1]};
  CHECK_FALSE(check_input(g.rotation, wrong).embedding_found);
}
