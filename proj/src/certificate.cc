#include "tripack/certificate.h"

#include <charconv>
#include <sstream>
#include <vector>

#include "tripack/errors.h"

namespace tripack {

namespace {

constexpr std::string_view kPackHeader = "PACKCERT v1";
constexpr std::string_view kCoverHeader = "COVERCERT v1";

struct Line {
  std::string_view text;
  std::size_t offset;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back({text.substr(pos, end - pos), pos});
    pos = end + 1;
  }
  return lines;
}

std::vector<Line> fields(const Line& line) {
  std::vector<Line> out;
  std::size_t i = 0;
  while (i < line.text.size()) {
    if (line.text[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = line.text.find(' ', i);
    if (j == std::string_view::npos) j = line.text.size();
    out.push_back({line.text.substr(i, j - i), line.offset + i});
    i = j;
  }
  return out;
}

int parse_vertex(const Line& f) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(f.text.data(), f.text.data() + f.text.size(), v);
  if (ec != std::errc() || ptr != f.text.data() + f.text.size() || v < 0) {
    throw ParseError("expected vertex index", f.offset);
  }
  return v;
}

Rational parse_weight(const Line& f) {
  try {
    return parse_rational(f.text);
  } catch (const ParseError& e) {
    throw ParseError("expected rational p/q", f.offset + e.position());
  }
}

Rational parse_claim(const Line& line, std::string_view prefix) {
  if (line.text.substr(0, prefix.size()) != prefix) {
    throw ParseError("expected '" + std::string(prefix) + "'", line.offset);
  }
  return parse_weight({line.text.substr(prefix.size()), line.offset + prefix.size()});
}

std::string describe(const Triangle& t) {
  return std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c);
}

std::string describe(const Edge& e) { return std::to_string(e.u) + " " + std::to_string(e.v); }

Verdict fail(std::string why) { return {false, std::move(why)}; }

Verdict check_packing(const FractionalPacking& w, const ColoredGraph& g) {
  const char tag = to_char(w.color);
  for (const auto& [t, x] : w.weights) {
    if (t.a < 0 || t.c >= g.n() || !(t.a < t.b && t.b < t.c)) {
      return fail("triangle " + std::string(1, tag) + " " + describe(t) + " has a vertex out of range");
    }
    if (sgn(x) < 0) return fail("weight < 0 on triangle " + std::string(1, tag) + " " + describe(t));
    if (x > 1) return fail("weight > 1 on triangle " + std::string(1, tag) + " " + describe(t));
    for (const Edge& e : t.edges()) {
      if (g.at(e.u, e.v) != w.color) {
        return fail("triangle " + std::string(1, tag) + " " + describe(t) + " is not monochromatic " +
                    std::string(1, tag) + " (edge " + describe(e) + ")");
      }
    }
  }
  for (const auto& [e, load] : w.loads()) {
    if (load > 1) return fail("edge " + describe(e) + " has load " + to_string(load) + " > 1");
  }
  return {};
}

}  // namespace

PackCertificate make_pack_certificate(const ColoredGraph& g, const FractionalPacking& red,
                                      const FractionalPacking& blue) {
  return PackCertificate{g, 3 * (red.value() + blue.value()), red, blue};
}

CoverCertificate make_cover_certificate(const FractionalCover& cover) { return {cover, cover.value()}; }

std::string write(const PackCertificate& cert) {
  std::ostringstream out;
  out << kPackHeader << "\n";
  out << "graph: " << serialize_inline(cert.graph) << "\n";
  out << "claim: pack >= " << to_string(cert.claim) << "\n";
  for (const FractionalPacking* w : {&cert.red, &cert.blue}) {
    for (const auto& [t, x] : w->weights) {
      out << to_char(w->color) << ' ' << describe(t) << ' ' << to_string(x) << "\n";
    }
  }
  return out.str();
}

std::string write(const CoverCertificate& cert) {
  std::ostringstream out;
  out << kCoverHeader << "\n";
  out << "color: " << to_char(cert.cover.color) << "\n";
  for (const auto& [e, y] : cert.cover.edge_weights) out << describe(e) << ' ' << to_string(y) << "\n";
  out << "claim: nustar <= " << to_string(cert.claim) << "\n";
  return out.str();
}

CertificateKind certificate_kind(std::string_view text) {
  const std::string_view first = text.substr(0, text.find('\n'));
  if (first == kPackHeader) return CertificateKind::Pack;
  if (first == kCoverHeader) return CertificateKind::Cover;
  throw ParseError("unknown certificate header", 0);
}

PackCertificate parse_pack_certificate(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines[0].text != kPackHeader) throw ParseError("expected 'PACKCERT v1'", 0);
  if (lines.size() < 3) throw ParseError("truncated certificate", text.size());
  PackCertificate cert;
  const Line& g = lines[1];
  constexpr std::string_view kGraph = "graph: ";
  if (g.text.substr(0, kGraph.size()) != kGraph) throw ParseError("expected 'graph: '", g.offset);
  try {
    cert.graph = parse_graph_inline(g.text.substr(kGraph.size()));
  } catch (const ParseError& e) {
    throw ParseError("bad graph line", g.offset + kGraph.size() + e.position());
  }
  cert.claim = parse_claim(lines[2], "claim: pack >= ");
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::vector<Line> f = fields(lines[i]);
    if (f.empty()) continue;
    if (f.size() != 5) throw ParseError("expected 'R|B i j k p/q'", lines[i].offset);
    FractionalPacking* w = nullptr;
    if (f[0].text == "R") {
      w = &cert.red;
    } else if (f[0].text == "B") {
      w = &cert.blue;
    } else {
      throw ParseError("expected colour R or B", f[0].offset);
    }
    const int a = parse_vertex(f[1]), b = parse_vertex(f[2]), c = parse_vertex(f[3]);
    if (a == b || a == c || b == c) throw ParseError("repeated vertex in triangle", f[1].offset);
    const Triangle t = make_triangle(a, b, c);
    if (!w->weights.emplace(t, parse_weight(f[4])).second) {
      throw ParseError("duplicate triangle", lines[i].offset);
    }
  }
  return cert;
}

CoverCertificate parse_cover_certificate(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines[0].text != kCoverHeader) throw ParseError("expected 'COVERCERT v1'", 0);
  if (lines.size() < 3) throw ParseError("truncated certificate", text.size());
  CoverCertificate cert;
  const Line& c = lines[1];
  if (c.text == "color: R") {
    cert.cover.color = EdgeColor::Red;
  } else if (c.text == "color: B") {
    cert.cover.color = EdgeColor::Blue;
  } else {
    throw ParseError("expected 'color: R' or 'color: B'", c.offset);
  }
  std::size_t last = lines.size() - 1;
  while (last > 1 && lines[last].text.empty()) --last;
  if (last < 2) throw ParseError("missing claim line", text.size());
  cert.claim = parse_claim(lines[last], "claim: nustar <= ");
  for (std::size_t i = 2; i < last; ++i) {
    const std::vector<Line> f = fields(lines[i]);
    if (f.empty()) continue;
    if (f.size() != 3) throw ParseError("expected 'i j p/q'", lines[i].offset);
    const int u = parse_vertex(f[0]), v = parse_vertex(f[1]);
    if (u == v) throw ParseError("loop edge", f[0].offset);
    if (!cert.cover.edge_weights.emplace(make_edge(u, v), parse_weight(f[2])).second) {
      throw ParseError("duplicate edge", lines[i].offset);
    }
  }
  return cert;
}

Verdict verify(const PackCertificate& cert) {
  if (cert.red.color != EdgeColor::Red || cert.blue.color != EdgeColor::Blue) return fail("packing colour mismatch");
  for (const FractionalPacking* w : {&cert.red, &cert.blue}) {
    Verdict v = check_packing(*w, cert.graph);
    if (!v.ok) return v;
  }
  const Rational total = 3 * (cert.red.value() + cert.blue.value());
  if (cert.claim > total) {
    return fail("claim " + to_string(cert.claim) + " exceeds 3 * total weight " + to_string(total));
  }
  return {};
}

Verdict verify(const CoverCertificate& cert, const ColoredGraph& g) {
  const FractionalCover& y = cert.cover;
  for (const auto& [e, w] : y.edge_weights) {
    if (e.v >= g.n()) return fail("edge " + describe(e) + " has a vertex out of range");
    if (sgn(w) < 0) return fail("weight < 0 on edge " + describe(e));
  }
  auto weight = [&](int a, int b) {
    auto it = y.edge_weights.find(Edge{a, b});
    return it == y.edge_weights.end() ? Rational(0) : it->second;
  };
  for (const Triangle& t : monochromatic_triangles(g, y.color)) {
    const Rational s = weight(t.a, t.b) + weight(t.a, t.c) + weight(t.b, t.c);
    if (s < 1) return fail("triangle " + describe(t) + " covered only " + to_string(s) + " < 1");
  }
  const Rational total = y.value();
  if (cert.claim < total) {
    return fail("claim " + to_string(cert.claim) + " is below total weight " + to_string(total));
  }
  return {};
}

}  // namespace tripack
