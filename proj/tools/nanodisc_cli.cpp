// Command-line front end over the C API.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nanodisc/nanodisc.h"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerification = 2, kIo = 3 };

const std::map<std::string, nd_lemma2_mode> kLemma2Modes{
    {"auto", ND_LEMMA2_AUTO},
    {"exhaustive", ND_LEMMA2_EXHAUSTIVE},
    {"sampled", ND_LEMMA2_SAMPLED},
    {"skip", ND_LEMMA2_SKIP},
};

const std::map<std::string, nd_format> kFormats{
    {"graph6", ND_FORMAT_GRAPH6},
    {"dot", ND_FORMAT_DOT},
    {"adjacency", ND_FORMAT_ADJACENCY},
    {"faces", ND_FORMAT_FACES},
    {"certificate-json", ND_FORMAT_CERTIFICATE_JSON},
};

// Owns a string returned by the C API.
struct ApiString {
  char* text = nullptr;
  size_t len = 0;
  ~ApiString() { nd_string_free(text); }
  std::string_view view() const { return {text, len}; }
};

int fail(nd_status status) {
  std::cerr << "error: " << nd_status_string(status) << ": " << nd_last_error() << "\n";
  switch (status) {
    case ND_ERR_INVALID_ARGUMENT: return kUsage;
    case ND_ERR_MALFORMED_INPUT:
    case ND_ERR_IO: return kIo;
    default: return kVerification;
  }
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int write_output(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())) || !out.flush()) {
    std::cerr << "error: cannot write " << path << "\n";
    return kIo;
  }
  return kOk;
}

struct Disc {
  nd_nanodisc* handle = nullptr;
  ~Disc() { nd_nanodisc_destroy(handle); }
};

int run_generate(int r, int t, bool dual, const std::string& format, const std::string& out) {
  Disc disc;
  if (auto s = nd_nanodisc_create(r, t, &disc.handle); s != ND_OK) return fail(s);
  ApiString text;
  const nd_layer layer = dual ? ND_LAYER_TRIANGULATION : ND_LAYER_FULLERENE;
  if (auto s = nd_nanodisc_export(disc.handle, layer, kFormats.at(format), &text.text, &text.len);
      s != ND_OK)
    return fail(s);
  return write_output(out, text.view());
}

int run_verify(int r, int t, const std::string& lemma2) {
  nd_certificate* cert = nullptr;
  if (auto s = nd_certify(r, t, kLemma2Modes.at(lemma2), &cert); s != ND_OK) return fail(s);
  ApiString json;
  nd_certificate_info info{};
  nd_certificate_get_info(cert, &info);
  const auto s = nd_certificate_to_json(cert, &json.text, &json.len);
  nd_certificate_destroy(cert);
  if (s != ND_OK) return fail(s);
  std::cout << json.view();
  return info.all_pass ? kOk : kVerification;
}

int run_diameter(int r, int t, bool dual) {
  Disc disc;
  if (auto s = nd_nanodisc_create(r, t, &disc.handle); s != ND_OK) return fail(s);
  int value = 0, a = 0, b = 0;
  const nd_layer layer = dual ? ND_LAYER_TRIANGULATION : ND_LAYER_FULLERENE;
  if (auto s = nd_nanodisc_diameter(disc.handle, layer, &value, &a, &b); s != ND_OK)
    return fail(s);
  std::cout << "diameter " << value << "\nwitness " << a << " " << b << "\n";
  return kOk;
}

int run_scan(int max_r, bool json, const std::string& lemma2) {
  nd_scan* scan = nullptr;
  if (auto s = nd_scan_run(max_r, kLemma2Modes.at(lemma2), &scan); s != ND_OK) return fail(s);
  ApiString text;
  const auto s = nd_scan_to_text(scan, json ? 1 : 0, &text.text, &text.len);
  const bool ok = nd_scan_all_pass(scan);
  nd_scan_destroy(scan);
  if (s != ND_OK) return fail(s);
  std::cout << text.view();
  return ok ? kOk : kVerification;
}

int run_check_input(const std::string& in, const std::string& embedding, const std::string& lemma2) {
  std::string graph6;
  if (!read_file(in, graph6)) {
    std::cerr << "error: cannot read " << in << "\n";
    return kIo;
  }
  // First line of the file holds the graph.
  graph6 = graph6.substr(0, graph6.find_first_of("\r\n"));
  std::string rotation;
  if (!embedding.empty() && !read_file(embedding, rotation)) {
    std::cerr << "error: cannot read " << embedding << "\n";
    return kIo;
  }
  ApiString report;
  int all_pass = 0;
  const auto s = nd_check_input(graph6.data(), graph6.size(),
                                embedding.empty() ? nullptr : rotation.data(), rotation.size(),
                                kLemma2Modes.at(lemma2), &report.text, &report.len, &all_pass);
  if (s != ND_OK) return fail(s);
  std::cout << report.view();
  return all_pass ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and certify the D_{r,t} nanodisc fullerenes"};
  app.require_subcommand(1);

  int r = 0, t = 0, max_r = 0;
  bool dual = false, json = false;
  std::string format = "graph6", out = "-", lemma2 = "auto", in, embedding;
  auto lemma2_check = CLI::IsMember({"auto", "exhaustive", "sampled", "skip"});

  auto* generate = app.add_subcommand("generate", "Write D_{r,t}, or D*_{r,t} with --dual");
  generate->add_option("--r", r, "Patch radius (>= 2)")->required();
  generate->add_option("--t", t, "Twist (1 <= t <= r-1)")->required();
  generate->add_flag("--dual", dual, "Write the triangulation D*_{r,t}");
  generate->add_option("--format", format, "graph6, dot, adjacency, faces or certificate-json")
      ->check(CLI::IsMember({"graph6", "dot", "adjacency", "faces", "certificate-json"}));
  generate->add_option("--out", out, "Output path, '-' for stdout");

  auto* verify = app.add_subcommand("verify", "Certify D_{r,t}; exit 0 iff every check passes");
  verify->add_option("--r", r)->required();
  verify->add_option("--t", t)->required();
  verify->add_option("--lemma2", lemma2, "auto, exhaustive, sampled or skip")->check(lemma2_check);

  auto* diam = app.add_subcommand("diameter", "Print the exact diameter and a witness pair");
  diam->add_option("--r", r)->required();
  diam->add_option("--t", t)->required();
  diam->add_flag("--dual", dual, "Measure D*_{r,t} instead");

  auto* scan = app.add_subcommand("scan", "Certify every D_{r,t} up to a radius");
  scan->add_option("--max-r", max_r)->required();
  scan->add_flag("--json", json);
  scan->add_option("--lemma2", lemma2)->check(lemma2_check);

  auto* check = app.add_subcommand("check-input", "Check a graph6 graph as a fullerene");
  check->add_option("--in", in, "graph6 file")->required();
  check->add_option("--embedding", embedding, "Rotation system in adjacency text format");
  check->add_option("--lemma2", lemma2)->check(lemma2_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (generate->parsed()) return run_generate(r, t, dual, format, out);
  if (verify->parsed()) return run_verify(r, t, lemma2);
  if (diam->parsed()) return run_diameter(r, t, dual);
  if (scan->parsed()) return run_scan(max_r, json, lemma2);
  if (check->parsed()) return run_check_input(in, embedding, lemma2);
  return kUsage;
}
