#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tripack/canonical.h"
#include "tripack/certificate.h"
#include "tripack/constructions.h"
#include "tripack/errors.h"
#include "tripack/graph.h"
#include "tripack/packing.h"
#include "tripack/search.h"
#include "tripack/structure.h"

namespace py = pybind11;
using namespace tripack;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

char color_char(EdgeColor c) { return c == EdgeColor::Red ? 'R' : c == EdgeColor::Blue ? 'B' : '.'; }

EdgeColor parse_color(const std::string& c) {
  if (c == "R") return EdgeColor::Red;
  if (c == "B") return EdgeColor::Blue;
  throw InputError("colour must be 'R' or 'B'");
}

py::dict packing_dict(const FractionalPacking& w) {
  py::dict out;
  for (const auto& [t, x] : w.weights) out[py::make_tuple(t.a, t.b, t.c)] = fraction(x);
  return out;
}

py::dict pentagon_dict(const PentagonCert& c) {
  py::dict out;
  py::list blobs;
  for (const auto& b : c.blobs) blobs.append(py::cast(b));
  py::list flips;
  for (const Edge& e : c.flips) flips.append(py::make_tuple(e.u, e.v));
  out["blobs"] = blobs;
  out["flips"] = flips;
  out["sizes"] = py::cast(c.sizes());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact fractional monochromatic triangle packings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_RuntimeError);

  py::class_<ColoredGraph>(m, "ColoredGraph")
      .def(py::init([](int n, const std::string& fill) {
             if (fill == ".") return ColoredGraph(n);
             return ColoredGraph(n, parse_color(fill));
           }),
           py::arg("n"), py::arg("fill") = ".")
      .def_static("parse", [](const std::string& text) {
        return text.find('\n') == std::string::npos || text.find('\n') == text.size() - 1
                   ? (text.find(' ') != std::string::npos ? parse_graph_inline(text) : parse_graph(text))
                   : parse_graph(text);
      })
      .def_property_readonly("n", &ColoredGraph::n)
      .def("color", [](const ColoredGraph& g, int i, int j) { return std::string(1, color_char(g.at(i, j))); })
      .def("set", [](ColoredGraph& g, int i, int j, const std::string& c) { g.assign(i, j, parse_color(c)); })
      .def("is_complete", &ColoredGraph::is_complete)
      .def("serialize", [](const ColoredGraph& g) { return serialize(g); })
      .def("__str__", [](const ColoredGraph& g) { return serialize_inline(g); })
      .def("__repr__", [](const ColoredGraph& g) { return "ColoredGraph('" + serialize_inline(g) + "')"; })
      .def("__eq__", [](const ColoredGraph& a, const ColoredGraph& b) { return a == b; });

  m.def(
      "pack",
      [](const ColoredGraph& g) {
        const PackValue v = pack(g);
        py::dict out;
        out["value"] = fraction(v.value);
        out["red"] = packing_dict(v.red.packing);
        out["blue"] = packing_dict(v.blue.packing);
        out["certificate"] = write(make_pack_certificate(g, v.red.packing, v.blue.packing));
        return out;
      },
      py::arg("graph"), "3 * (nu*_R + nu*_B) with both maximum packings and a PACKCERT.");
  m.def(
      "nu_star",
      [](const ColoredGraph& g, const std::string& c) { return fraction(nu_star(g, parse_color(c)).primal_value); },
      py::arg("graph"), py::arg("color"));
  m.def(
      "verify_certificate",
      [](const std::string& text, std::optional<ColoredGraph> graph) {
        Verdict v;
        if (certificate_kind(text) == CertificateKind::Pack) {
          v = verify(parse_pack_certificate(text));
        } else {
          if (!graph) throw UsageError("cover certificates need the graph");
          v = verify(parse_cover_certificate(text), *graph);
        }
        return py::make_tuple(v.ok, v.violation);
      },
      py::arg("text"), py::arg("graph") = py::none());

  m.def(
      "canonical_form",
      [](const ColoredGraph& g, bool admit_swap) {
        auto [key, witness] = canonical_key(g, admit_swap);
        return py::make_tuple(relabel(g, witness), witness.perm, witness.swapped);
      },
      py::arg("graph"), py::arg("admit_swap") = true);
  m.def("are_isomorphic", &are_isomorphic, py::arg("g"), py::arg("h"), py::arg("admit_swap") = true);

  m.def(
      "pentagon_distance",
      [](const ColoredGraph& g, int max_flips) -> py::object {
        auto c = pentagon_distance(g, max_flips);
        if (!c) return py::none();
        return pentagon_dict(*c);
      },
      py::arg("graph"), py::arg("max_flips") = 1);
  m.def(
      "bip_distance_at_most",
      [](const ColoredGraph& g, const std::string& c, int k) -> py::object {
        auto cert = bip_distance_at_most(color_class(g, parse_color(c)), k);
        if (!cert) return py::none();
        py::list removed;
        for (const Edge& e : cert->removed_edges) removed.append(py::make_tuple(e.u, e.v));
        return py::make_tuple(cert->x1, cert->x2, removed);
      },
      py::arg("graph"), py::arg("color"), py::arg("k"));
  m.def(
      "e_bip", [](const ColoredGraph& g, const std::string& c) { return fraction(e_bip(color_class(g, parse_color(c)))); },
      py::arg("graph"), py::arg("color"));

  m.def(
      "pentagon_blowup",
      [](const std::array<int, 5>& sizes, bool starred, const std::string& interior) {
        const BlobSpec spec = blob_spec(sizes, interior == "B" ? Interior::AllBlue : Interior::AllRed);
        const Blowup b = starred ? almost_pentagon_blowup(spec) : pentagon_blowup(spec);
        return b.graph;
      },
      py::arg("sizes"), py::arg("starred") = false, py::arg("interior") = "R");
  m.def("bipartite_minus_matching", &bipartite_minus_matching, py::arg("n"), py::arg("m"));
  m.def(
      "flip_edge", [](const ColoredGraph& g, int u, int v) { return flip_edge(g, make_edge(u, v)); }, py::arg("graph"),
      py::arg("u"), py::arg("v"));
  m.def("table1", [] {
    py::list rows;
    for (const BlowupValue& r : table1_rows()) rows.append(py::make_tuple(r.sizes, r.starred, r.value));
    return rows;
  });

  m.def(
      "frac_decomposition",
      [](int n, const std::vector<std::pair<int, int>>& missing) -> py::object {
        SimpleGraph h = SimpleGraph::complete(n);
        for (auto [u, v] : missing) h.remove_edge(u, v);
        const DecompositionResult r = frac_decomposition(h);
        if (!r.packing) return py::none();
        return packing_dict(*r.packing);
      },
      py::arg("n"), py::arg("missing") = std::vector<std::pair<int, int>>{},
      "Weights of a fractional triangle decomposition of K_n minus `missing`, or None.");

  m.def(
      "run_search",
      [](int n_end, const std::string& threshold, bool admit_swap, std::vector<ColoredGraph> seeds) {
        SearchConfig cfg;
        cfg.threshold = parse_threshold(threshold);
        cfg.admit_swap = admit_swap;
        if (seeds.empty()) seeds.push_back(ColoredGraph(0));
        cfg.n_start = seeds.front().n();
        cfg.n_end = n_end;
        const SearchResult r = [&] {
          py::gil_scoped_release release;
          return run_search(seeds, cfg);
        }();
        py::dict lists;
        for (const auto& [n, list] : r.lists) {
          py::list graphs;
          for (const Survivor& s : list) graphs.append(s.graph);
          lists[py::int_(n)] = graphs;
        }
        return lists;
      },
      py::arg("n_end"), py::arg("threshold") = "n*(n+1)/4", py::arg("admit_swap") = true,
      py::arg("seeds") = std::vector<ColoredGraph>{});
  m.def(
      "parse_threshold", [](const std::string& expr, int n) { return fraction(parse_threshold(expr)(n)); },
      py::arg("expr"), py::arg("n"));
}
