#include "nanodisc/nanodisc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "nanodisc/export.hpp"
#include "nanodisc/graph6.hpp"
#include "nanodisc/metrics.hpp"
#include "nanodisc/surface.hpp"
#include "nanodisc/verify.hpp"

struct nd_nanodisc {
  nanodisc::SphereTriangulation sphere;
  nanodisc::CubicPlaneGraph fullerene;
};

struct nd_certificate {
  nanodisc::Certificate cert;
};

struct nd_scan {
  std::vector<nd_certificate> certificates;
  nanodisc::ScanResult result;
};

namespace {

thread_local std::string last_error;

nd_status remember(nd_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
nd_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const nanodisc::Error& e) {
    switch (e.kind()) {
      case nanodisc::ErrorKind::InvalidArgument: return remember(ND_ERR_INVALID_ARGUMENT, e.what());
      case nanodisc::ErrorKind::MalformedInput: return remember(ND_ERR_MALFORMED_INPUT, e.what());
      case nanodisc::ErrorKind::CorruptStructure:
      case nanodisc::ErrorKind::Disconnected: return remember(ND_ERR_CORRUPT, e.what());
      case nanodisc::ErrorKind::Io: return remember(ND_ERR_IO, e.what());
    }
    return remember(ND_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return remember(ND_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return remember(ND_ERR_INTERNAL, e.what());
  }
}

nd_status hand_out(const std::string& text, char** out_text, size_t* out_len) {
  if (!out_text) return remember(ND_ERR_INVALID_ARGUMENT, "output pointer is null");
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buf) return remember(ND_ERR_INTERNAL, "out of memory");
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  *out_text = buf;
  if (out_len) *out_len = text.size();
  return ND_OK;
}

bool to_mode(nd_lemma2_mode in, nanodisc::Lemma2Mode& out) {
  switch (in) {
    case ND_LEMMA2_AUTO: out = nanodisc::Lemma2Mode::Auto; return true;
    case ND_LEMMA2_EXHAUSTIVE: out = nanodisc::Lemma2Mode::Exhaustive; return true;
    case ND_LEMMA2_SAMPLED: out = nanodisc::Lemma2Mode::Sampled; return true;
    case ND_LEMMA2_SKIP: out = nanodisc::Lemma2Mode::Skip; return true;
  }
  return false;
}

const nanodisc::Adjacency& layer_graph(const nd_nanodisc* disc, nd_layer layer) {
  return layer == ND_LAYER_TRIANGULATION ? disc->sphere.rotation : disc->fullerene.rotation;
}

bool valid_layer(nd_layer layer) {
  return layer == ND_LAYER_FULLERENE || layer == ND_LAYER_TRIANGULATION;
}

}  // namespace

extern "C" {

const char* nd_version(void) { return "1.0.0"; }

const char* nd_last_error(void) { return last_error.c_str(); }

const char* nd_status_string(nd_status status) {
  switch (status) {
    case ND_OK: return "ok";
    case ND_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ND_ERR_MALFORMED_INPUT: return "malformed input";
    case ND_ERR_CORRUPT: return "corrupt structure";
    case ND_ERR_IO: return "i/o error";
    case ND_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nd_string_free(char* text) { std::free(text); }

nd_status nd_nanodisc_create(int r, int t, nd_nanodisc** out) {
  if (!out) return remember(ND_ERR_INVALID_ARGUMENT, "output pointer is null");
  *out = nullptr;
  return guarded([&] {
    auto sphere = nanodisc::build_triangulation(r, t);
    auto fullerene = nanodisc::dualize(sphere);
    *out = new nd_nanodisc{std::move(sphere), std::move(fullerene)};
    return ND_OK;
  });
}

void nd_nanodisc_destroy(nd_nanodisc* disc) { delete disc; }

nd_status nd_nanodisc_counts(const nd_nanodisc* disc, nd_layer layer, nd_counts* out) {
  if (!disc || !out || !valid_layer(layer))
    return remember(ND_ERR_INVALID_ARGUMENT, "null handle, null output or bad layer");
  const auto& g = layer_graph(disc, layer);
  out->vertices = g.size();
  out->edges = nanodisc::edge_count(g);
  out->faces = layer == ND_LAYER_TRIANGULATION ? disc->sphere.triangles.size()
                                               : disc->fullerene.faces.size();
  return ND_OK;
}

nd_status nd_nanodisc_export(const nd_nanodisc* disc, nd_layer layer, nd_format format,
                             char** out_text, size_t* out_len) {
  if (!disc || !valid_layer(layer))
    return remember(ND_ERR_INVALID_ARGUMENT, "null handle or bad layer");
  return guarded([&] {
    const bool tri = layer == ND_LAYER_TRIANGULATION;
    std::string text;
    switch (format) {
      case ND_FORMAT_GRAPH6:
        text = nanodisc::encode_graph6(layer_graph(disc, layer)) + "\n";
        break;
      case ND_FORMAT_DOT:
        text = tri ? nanodisc::emit_dot(disc->sphere)
                   : nanodisc::emit_dot(disc->fullerene, disc->sphere);
        break;
      case ND_FORMAT_ADJACENCY:
        text = nanodisc::adjacency_text(layer_graph(disc, layer));
        break;
      case ND_FORMAT_FACES:
        if (tri) {
          std::vector<nanodisc::Face> faces;
          for (const auto& tr : disc->sphere.triangles) faces.push_back({tr[0], tr[1], tr[2]});
          text = nanodisc::faces_text(faces);
        } else {
          text = nanodisc::faces_text(disc->fullerene.faces);
        }
        break;
      case ND_FORMAT_CERTIFICATE_JSON:
        text = nanodisc::certificate_json(
            nanodisc::verify_theorem1(disc->sphere.r, disc->sphere.t));
        break;
      default:
        return remember(ND_ERR_INVALID_ARGUMENT, "unknown export format");
    }
    return hand_out(text, out_text, out_len);
  });
}

nd_status nd_nanodisc_diameter(const nd_nanodisc* disc, nd_layer layer, int* value,
                               int* witness_a, int* witness_b) {
  if (!disc || !value || !valid_layer(layer))
    return remember(ND_ERR_INVALID_ARGUMENT, "null handle, null output or bad layer");
  return guarded([&] {
    const auto w = nanodisc::diameter(layer_graph(disc, layer));
    *value = w.value;
    if (witness_a) *witness_a = w.pair.first;
    if (witness_b) *witness_b = w.pair.second;
    return ND_OK;
  });
}

nd_status nd_certify(int r, int t, nd_lemma2_mode mode, nd_certificate** out) {
  if (!out) return remember(ND_ERR_INVALID_ARGUMENT, "output pointer is null");
  *out = nullptr;
  nanodisc::Lemma2Mode m{};
  if (!to_mode(mode, m)) return remember(ND_ERR_INVALID_ARGUMENT, "unknown lemma2 mode");
  return guarded([&] {
    *out = new nd_certificate{nanodisc::verify_theorem1(r, t, m)};
    return ND_OK;
  });
}

void nd_certificate_destroy(nd_certificate* cert) { delete cert; }

nd_status nd_certificate_get_info(const nd_certificate* cert, nd_certificate_info* out) {
  if (!cert || !out) return remember(ND_ERR_INVALID_ARGUMENT, "null certificate or output");
  const auto& c = cert->cert;
  out->r = c.r;
  out->t = c.t;
  out->n = c.n_vertices;
  out->diameter = c.diameter.value;
  out->witness_a = c.diameter.pair.first;
  out->witness_b = c.diameter.pair.second;
  out->theorem1_bound = c.theorem1_bound;
  out->conjecture_bound = c.conjecture_bound;
  out->lower_bound = c.lower_bound;
  out->counterexample = c.is_counterexample ? 1 : 0;
  out->all_pass = c.all_pass() ? 1 : 0;
  return ND_OK;
}

nd_status nd_certificate_to_json(const nd_certificate* cert, char** out_text, size_t* out_len) {
  if (!cert) return remember(ND_ERR_INVALID_ARGUMENT, "null certificate");
  return guarded([&] { return hand_out(nanodisc::certificate_json(cert->cert), out_text, out_len); });
}

nd_status nd_scan_run(int r_max, nd_lemma2_mode mode, nd_scan** out) {
  if (!out) return remember(ND_ERR_INVALID_ARGUMENT, "output pointer is null");
  *out = nullptr;
  nanodisc::Lemma2Mode m{};
  if (!to_mode(mode, m)) return remember(ND_ERR_INVALID_ARGUMENT, "unknown lemma2 mode");
  return guarded([&] {
    auto* scan = new nd_scan;
    scan->result = nanodisc::scan_counterexamples(r_max, m);
    for (const auto& c : scan->result.certificates) scan->certificates.push_back({c});
    *out = scan;
    return ND_OK;
  });
}

void nd_scan_destroy(nd_scan* scan) { delete scan; }

size_t nd_scan_count(const nd_scan* scan) { return scan ? scan->certificates.size() : 0; }

const nd_certificate* nd_scan_certificate(const nd_scan* scan, size_t index) {
  if (!scan || index >= scan->certificates.size()) return nullptr;
  return &scan->certificates[index];
}

long long nd_scan_minimum_counterexample(const nd_scan* scan) {
  if (!scan || !scan->result.minimum_counterexample) return 0;
  return *scan->result.minimum_counterexample;
}

int nd_scan_all_pass(const nd_scan* scan) { return scan && scan->result.all_pass() ? 1 : 0; }

nd_status nd_scan_to_text(const nd_scan* scan, int as_json, char** out_text, size_t* out_len) {
  if (!scan) return remember(ND_ERR_INVALID_ARGUMENT, "null scan");
  return guarded([&] {
    return hand_out(as_json ? nanodisc::scan_json(scan->result) : nanodisc::scan_table(scan->result),
                    out_text, out_len);
  });
}

nd_status nd_check_input(const char* graph6, size_t graph6_len, const char* rotation_text,
                         size_t rotation_len, nd_lemma2_mode mode, char** report_json,
                         size_t* report_len, int* all_pass) {
  if (!graph6) return remember(ND_ERR_INVALID_ARGUMENT, "graph6 input is null");
  nanodisc::Lemma2Mode m{};
  if (!to_mode(mode, m)) return remember(ND_ERR_INVALID_ARGUMENT, "unknown lemma2 mode");
  return guarded([&] {
    const auto graph = nanodisc::decode_graph6({graph6, graph6_len});
    std::optional<nanodisc::Adjacency> rotation;
    if (rotation_text) rotation = nanodisc::parse_adjacency_text({rotation_text, rotation_len});
    const auto report = nanodisc::check_input(graph, rotation, m);
    if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
    return hand_out(nanodisc::input_report_json(report), report_json, report_len);
  });
}

nd_status nd_graph6_from_adjacency(const char* adjacency_text, size_t len, char** out_text,
                                   size_t* out_len) {
  if (!adjacency_text) return remember(ND_ERR_INVALID_ARGUMENT, "input is null");
  return guarded([&] {
    const auto adj = nanodisc::parse_adjacency_text({adjacency_text, len});
    return hand_out(nanodisc::encode_graph6(adj), out_text, out_len);
  });
}

nd_status nd_graph6_to_adjacency(const char* graph6, size_t len, char** out_text,
                                 size_t* out_len) {
  if (!graph6) return remember(ND_ERR_INVALID_ARGUMENT, "input is null");
  return guarded([&] {
    return hand_out(nanodisc::adjacency_text(nanodisc::decode_graph6({graph6, len})), out_text,
                    out_len);
  });
}

}  // extern "C"
