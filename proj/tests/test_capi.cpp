#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "nanodisc/nanodisc.h"

namespace {

std::string take(char* text, size_t len) {
  std::string s(text, len);
  nd_string_free(text);
  return s;
}

}  // namespace

TEST_CASE("create, count and destroy") {
  nd_nanodisc* disc = nullptr;
  REQUIRE(nd_nanodisc_create(2, 1, &disc) == ND_OK);
  nd_counts c{};
  REQUIRE(nd_nanodisc_counts(disc, ND_LAYER_FULLERENE, &c) == ND_OK);
  CHECK(c.vertices == 48);
  CHECK(c.edges == 72);
  CHECK(c.faces == 26);
  REQUIRE(nd_nanodisc_counts(disc, ND_LAYER_TRIANGULATION, &c) == ND_OK);
  CHECK(c.vertices == 26);
  CHECK(c.edges == 72);
  CHECK(c.faces == 48);
  CHECK(nd_nanodisc_counts(disc, static_cast<nd_layer>(9), &c) == ND_ERR_INVALID_ARGUMENT);
  nd_nanodisc_destroy(disc);
  nd_nanodisc_destroy(nullptr);
}

TEST_CASE("invalid parameters report errors") {
  nd_nanodisc* disc = reinterpret_cast<nd_nanodisc*>(0x1);
  CHECK(nd_nanodisc_create(2, 2, &disc) == ND_ERR_INVALID_ARGUMENT);
  CHECK(disc == nullptr);
  CHECK(std::strlen(nd_last_error()) > 0);
  CHECK(nd_nanodisc_create(2, 1, nullptr) == ND_ERR_INVALID_ARGUMENT);
  nd_certificate* cert = nullptr;
  CHECK(nd_certify(3, 0, ND_LEMMA2_AUTO, &cert) == ND_ERR_INVALID_ARGUMENT);
  CHECK(nd_certify(3, 1, static_cast<nd_lemma2_mode>(42), &cert) == ND_ERR_INVALID_ARGUMENT);
  nd_scan* scan = nullptr;
  CHECK(nd_scan_run(1, ND_LEMMA2_AUTO, &scan) == ND_ERR_INVALID_ARGUMENT);
  CHECK(std::string(nd_status_string(ND_ERR_IO)) == "i/o error");
}

TEST_CASE("export formats") {
  nd_nanodisc* disc = nullptr;
  REQUIRE(nd_nanodisc_create(2, 1, &disc) == ND_OK);
  char* text = nullptr;
  size_t len = 0;
  REQUIRE(nd_nanodisc_export(disc, ND_LAYER_FULLERENE, ND_FORMAT_GRAPH6, &text, &len) == ND_OK);
  const auto g6 = take(text, len);
  CHECK(g6.size() == 190);  // 189 bytes plus newline
  CHECK(g6.back() == '\n');

  REQUIRE(nd_nanodisc_export(disc, ND_LAYER_TRIANGULATION, ND_FORMAT_DOT, &text, &len) == ND_OK);
  CHECK(take(text, len).starts_with("graph Dstar_2_1 {"));
  REQUIRE(nd_nanodisc_export(disc, ND_LAYER_FULLERENE, ND_FORMAT_FACES, &text, &len) == ND_OK);
  CHECK(take(text, len).starts_with("26\n"));
  REQUIRE(nd_nanodisc_export(disc, ND_LAYER_FULLERENE, ND_FORMAT_ADJACENCY, &text, &len) == ND_OK);
  const auto adj = take(text, len);
  CHECK(adj.starts_with("48\n0: "));
  REQUIRE(nd_nanodisc_export(disc, ND_LAYER_FULLERENE, ND_FORMAT_CERTIFICATE_JSON, &text, &len) ==
          ND_OK);
  CHECK(take(text, len).find("\"n\": 48") != std::string::npos);
  CHECK(nd_nanodisc_export(disc, ND_LAYER_FULLERENE, static_cast<nd_format>(77), &text, &len) ==
        ND_ERR_INVALID_ARGUMENT);

  // graph6 helpers agree with the export.
  REQUIRE(nd_graph6_from_adjacency(adj.data(), adj.size(), &text, &len) == ND_OK);
  CHECK(take(text, len) + "\n" == g6);
  REQUIRE(nd_graph6_to_adjacency("Bw", 2, &text, &len) == ND_OK);
  CHECK(take(text, len) == "3\n0: 1 2\n1: 0 2\n2: 0 1\n");
  CHECK(nd_graph6_to_adjacency("B", 1, &text, &len) == ND_ERR_MALFORMED_INPUT);

  int d = 0, a = -1, b = -1;
  REQUIRE(nd_nanodisc_diameter(disc, ND_LAYER_FULLERENE, &d, &a, &b) == ND_OK);
  CHECK(d == 8);
  CHECK(a < b);
  REQUIRE(nd_nanodisc_diameter(disc, ND_LAYER_TRIANGULATION, &d, nullptr, nullptr) == ND_OK);
  CHECK(d == 4);
  nd_nanodisc_destroy(disc);
}

TEST_CASE("certify and scan") {
  nd_certificate* cert = nullptr;
  REQUIRE(nd_certify(5, 2, ND_LEMMA2_SAMPLED, &cert) == ND_OK);
  nd_certificate_info info{};
  REQUIRE(nd_certificate_get_info(cert, &info) == ND_OK);
  CHECK(info.n == 300);
  CHECK(info.diameter <= 20);
  CHECK(info.conjecture_bound == 21);
  CHECK(info.counterexample == 1);
  CHECK(info.all_pass == 1);
  char* text = nullptr;
  size_t len = 0;
  REQUIRE(nd_certificate_to_json(cert, &text, &len) == ND_OK);
  CHECK(take(text, len).find("\"counterexample\": true") != std::string::npos);
  nd_certificate_destroy(cert);

  nd_scan* scan = nullptr;
  REQUIRE(nd_scan_run(5, ND_LEMMA2_AUTO, &scan) == ND_OK);
  CHECK(nd_scan_count(scan) == 10);
  CHECK(nd_scan_minimum_counterexample(scan) == 300);
  CHECK(nd_scan_all_pass(scan) == 1);
  CHECK(nd_scan_certificate(scan, 10) == nullptr);
  REQUIRE(nd_certificate_get_info(nd_scan_certificate(scan, 0), &info) == ND_OK);
  CHECK(info.n == 48);
  REQUIRE(nd_scan_to_text(scan, 0, &text, &len) == ND_OK);
  CHECK(take(text, len).ends_with("minimum counterexample: n=300\n"));
  nd_scan_destroy(scan);
}

TEST_CASE("check_input through the C API") {
  nd_nanodisc* disc = nullptr;
  REQUIRE(nd_nanodisc_create(3, 1, &disc) == ND_OK);
  char* text = nullptr;
  size_t len = 0;
  REQUIRE(nd_nanodisc_export(disc, ND_LAYER_FULLERENE, ND_FORMAT_GRAPH6, &text, &len) == ND_OK);
  auto g6 = take(text, len);
  g6.pop_back();
  nd_nanodisc_destroy(disc);

  int ok = 0;
  REQUIRE(nd_check_input(g6.data(), g6.size(), nullptr, 0, ND_LEMMA2_AUTO, &text, &len, &ok) ==
          ND_OK);
  CHECK(ok == 1);
  CHECK(take(text, len).find("\"fullerene\": true") != std::string::npos);

  REQUIRE(nd_check_input("Bw", 2, nullptr, 0, ND_LEMMA2_AUTO, &text, &len, &ok) == ND_OK);
  CHECK(ok == 0);
  nd_string_free(text);
  CHECK(nd_check_input("B", 1, nullptr, 0, ND_LEMMA2_AUTO, &text, &len, &ok) ==
        ND_ERR_MALFORMED_INPUT);
}

TEST_CASE("handles are readable from several threads") {
  nd_nanodisc* disc = nullptr;
  REQUIRE(nd_nanodisc_create(4, 3, &disc) == ND_OK);
  std::vector<int> diameters(4, -1);
  std::vector<std::thread> workers;
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] { nd_nanodisc_diameter(disc, ND_LAYER_FULLERENE, &diameters[i], nullptr, nullptr); });
  for (auto& w : workers) w.join();
  for (int d : diameters) CHECK(d == 16);
  nd_nanodisc_destroy(disc);
}
