#include "nanodisc/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace nanodisc {

using ordered_json = nlohmann::ordered_json;

namespace {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double lattice_angle(AxialCoord c) {
  const double x = c.a + 0.5 * c.b;
  const double y = 0.5 * std::numbers::sqrt3 * c.b;
  return std::atan2(y, x);
}

std::vector<Point> layout(const SphereTriangulation& sphere) {
  const auto lat = latitude(sphere);
  const double twist = 2.0 * std::numbers::pi * sphere.t / (6.0 * sphere.r);
  std::vector<Point> pos(sphere.vertex_count());
  for (VertexId v = 0; v < static_cast<VertexId>(sphere.vertex_count()); ++v) {
    const double radius = sphere.r - lat.phi[v];
    double angle = 0.0;
    if (v != sphere.north && v != sphere.south) {
      angle = lattice_angle(sphere.chart[v]);
      if (sphere.in_south_interior(v)) angle -= twist;
    }
    pos[v] = {radius * std::cos(angle), radius * std::sin(angle)};
  }
  return pos;
}

std::string coord(double value) {
  if (std::abs(value) < 5e-4) value = 0.0;
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << value;
  return out.str();
}

std::string render_dot(const std::string& name, const Adjacency& adj,
                       const std::vector<Point>& pos) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=point];\n";
  for (std::size_t v = 0; v < adj.size(); ++v)
    out << "  " << v << " [pos=\"" << coord(pos[v].x) << "," << coord(pos[v].y) << "!\"];\n";
  for (std::size_t v = 0; v < adj.size(); ++v) {
    std::vector<VertexId> higher;
    for (VertexId w : adj[v])
      if (static_cast<std::size_t>(w) > v) higher.push_back(w);
    std::sort(higher.begin(), higher.end());
    for (VertexId w : higher) out << "  " << v << " -- " << w << ";\n";
  }
  out << "}\n";
  return out.str();
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

ordered_json certificate_object(const Certificate& c) {
  ordered_json j;
  j["r"] = c.r;
  j["t"] = c.t;
  j["n"] = c.n_vertices;
  j["diameter"] = c.diameter.value;
  j["witness"] = {c.diameter.pair.first, c.diameter.pair.second};
  j["bounds"] = {{"theorem1", c.theorem1_bound},
                 {"conjecture", c.conjecture_bound},
                 {"lower", c.lower_bound},
                 {"sqrt", c.sqrt_bound_exact}};
  ordered_json checks;
  checks["cubic"] = pass_fail(c.fullerene.cubic);
  checks["bridgeless"] = pass_fail(c.fullerene.connected && c.fullerene.bridgeless);
  checks["faces"] = pass_fail(c.fullerene.faces && c.fullerene.embedding);
  checks["pentagons"] = pass_fail(c.fullerene.pentagons);
  checks["euler"] = pass_fail(c.fullerene.euler && c.triangulation.euler);
  checks["lemma2"] = to_string(c.lemma2.status);
  checks["cut_bound"] = to_string(c.cut_bound.status);
  checks["monotone"] = pass_fail(c.proof_structure_ok());
  checks["triangulation"] = pass_fail(c.triangulation.all_pass());
  checks["connected"] = pass_fail(c.fullerene.connected);
  checks["theorem1"] = pass_fail(c.theorem1_holds && c.sqrt_identity);
  checks["lower_bound"] = pass_fail(c.lower_bound_holds);
  checks["lipschitz"] = pass_fail(c.lipschitz);
  j["checks"] = checks;
  j["counterexample"] = c.is_counterexample;
  j["lemma2_mode"] = to_string(c.lemma2.mode);
  return j;
}

}  // namespace

std::string emit_dot(const SphereTriangulation& sphere) {
  return render_dot("Dstar_" + std::to_string(sphere.r) + "_" + std::to_string(sphere.t),
                    sphere.rotation, layout(sphere));
}

std::string emit_dot(const CubicPlaneGraph& g, const SphereTriangulation& sphere) {
  const auto primal = layout(sphere);
  std::vector<Point> pos(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count() && i < sphere.triangles.size(); ++i) {
    for (VertexId v : sphere.triangles[i]) {
      pos[i].x += primal[v].x / 3.0;
      pos[i].y += primal[v].y / 3.0;
    }
  }
  return render_dot("D_" + std::to_string(g.r) + "_" + std::to_string(g.t), g.rotation, pos);
}

std::string adjacency_text(const Adjacency& rotation) {
  std::ostringstream out;
  out << rotation.size() << "\n";
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    out << v << ":";
    for (VertexId w : rotation[v]) out << " " << w;
    out << "\n";
  }
  return out.str();
}

Adjacency parse_adjacency_text(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      lines.push_back(line);
    }
  }
  auto fail = [](const std::string& why) {
    return Error(ErrorKind::MalformedInput, "adjacency text: " + why);
  };
  if (lines.empty()) throw fail("missing vertex count");

  long long count = -1;
  {
    std::istringstream head(lines[0]);
    std::string extra;
    if (!(head >> count) || count < 0 || (head >> extra)) throw fail("bad vertex count line");
  }
  if (static_cast<long long>(lines.size()) - 1 != count)
    throw fail("expected " + std::to_string(count) + " vertex lines, found " +
               std::to_string(lines.size() - 1));

  Adjacency rotation(static_cast<std::size_t>(count));
  std::vector<char> seen(rotation.size(), 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto colon = lines[k].find(':');
    if (colon == std::string::npos) throw fail("line " + std::to_string(k + 1) + " lacks ':'");
    std::istringstream id_in(lines[k].substr(0, colon));
    long long v = -1;
    if (!(id_in >> v) || v < 0 || v >= count) throw fail("bad vertex id on line " + std::to_string(k + 1));
    if (seen[v]) throw fail("vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    std::istringstream nb_in(lines[k].substr(colon + 1));
    std::string token;
    while (nb_in >> token) {
      long long w = -1;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), w);
      if (ec != std::errc{} || ptr != token.data() + token.size() || w < 0 || w >= count)
        throw fail("bad neighbour '" + token + "' on line " + std::to_string(k + 1));
      rotation[v].push_back(static_cast<VertexId>(w));
    }
  }
  return rotation;
}

std::string faces_text(const std::vector<Face>& faces) {
  std::ostringstream out;
  out << faces.size() << "\n";
  for (const auto& f : faces) {
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? " " : "") << f[k];
    out << "\n";
  }
  return out.str();
}

std::string certificate_json(const Certificate& cert) {
  return certificate_object(cert).dump(2) + "\n";
}

std::string scan_json(const ScanResult& scan) {
  ordered_json j;
  j["certificates"] = ordered_json::array();
  for (const auto& c : scan.certificates) j["certificates"].push_back(certificate_object(c));
  if (scan.minimum_counterexample)
    j["minimum_counterexample"] = *scan.minimum_counterexample;
  else
    j["minimum_counterexample"] = nullptr;
  j["all_pass"] = scan.all_pass();
  return j.dump(2) + "\n";
}

std::string scan_table(const ScanResult& scan) {
  std::ostringstream out;
  out << std::setw(6) << "n" << std::setw(4) << "r" << std::setw(4) << "t" << std::setw(6)
      << "diam" << std::setw(5) << "4r" << std::setw(6) << "conj" << std::setw(8) << "lower"
      << "  counterexample  checks\n";
  for (const auto& c : scan.certificates) {
    out << std::setw(6) << c.n_vertices << std::setw(4) << c.r << std::setw(4) << c.t
        << std::setw(6) << c.diameter.value << std::setw(5) << c.theorem1_bound << std::setw(6)
        << c.conjecture_bound << std::setw(8) << std::fixed << std::setprecision(2)
        << c.lower_bound << "  " << std::left << std::setw(16)
        << (c.is_counterexample ? "yes" : "no") << std::right << pass_fail(c.all_pass())
        << "\n";
  }
  out << "minimum counterexample: ";
  if (scan.minimum_counterexample)
    out << "n=" << *scan.minimum_counterexample << "\n";
  else
    out << "none\n";
  return out.str();
}

std::string input_report_json(const InputReport& report) {
  ordered_json j;
  j["n"] = report.vertices;
  j["embedding"] = report.embedding_supplied ? "supplied" : "recovered";
  ordered_json checks;
  checks["simple"] = pass_fail(report.simple);
  checks["embedding"] = pass_fail(report.embedding_found);
  const auto& f = report.fullerene;
  checks["cubic"] = pass_fail(f.cubic);
  checks["bridgeless"] = pass_fail(f.connected && f.bridgeless);
  checks["faces"] = pass_fail(f.faces && f.embedding);
  checks["pentagons"] = pass_fail(f.pentagons);
  checks["euler"] = pass_fail(f.euler);
  checks["lemma2"] = to_string(report.lemma2.status);
  j["checks"] = checks;
  if (report.diameter) {
    j["diameter"] = report.diameter->value;
    j["witness"] = {report.diameter->pair.first, report.diameter->pair.second};
    j["conjecture_bound"] = conjecture_bound(static_cast<std::int64_t>(report.vertices));
  }
  j["lemma2_mode"] = to_string(report.lemma2.mode);
  j["fullerene"] = report.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace nanodisc
