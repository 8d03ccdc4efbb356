// Python bindings. Measures cross the boundary as JSON text in the CLI document format;
// the package wrapper converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gdc/chain.hpp"
#include "gdc/domination.hpp"
#include "gdc/errors.hpp"
#include "gdc/graph.hpp"
#include "gdc/io.hpp"
#include "gdc/phi.hpp"
#include "gdc/sampling.hpp"
#include "gdc/verify.hpp"
#include "gdc/witnesses.hpp"

namespace py = pybind11;
using namespace gdc;
using io::Json;

namespace {

Rational rat(const std::string& text) { return parse_rational(text); }

PaintBox boxes(const std::vector<std::string>& probs) {
  std::vector<Rational> out;
  for (const auto& p : probs) out.push_back(rat(p));
  return PaintBox::make(std::move(out));
}

FiniteGraph graph(int vertices, const std::vector<std::pair<int, int>>& edges) {
  FiniteGraph g;
  g.vertices = vertices;
  for (auto [u, v] : edges) g.edges.emplace_back(std::min(u, v), std::max(u, v));
  g.validate();
  return g;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact colour-process computations and samplers";

  // Translators run most-recent first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_OverflowError);
  py::register_exception<NotColorProcessError>(m, "NotColorProcessError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("kernel", [](int n, const std::string& p, const std::string& space) {
    return dump(io::to_json(kernel(n, rat(p), parse_space(space))));
  }, py::arg("n"), py::arg("p"), py::arg("space") = "general");

  m.def("apply_phi", [](const std::string& rer, const std::string& p) {
    return dump(io::to_json(apply_phi(io::rer_from_json(Json::parse(rer)), rat(p))));
  });

  m.def("is_unique", [](const std::string& measure, const std::string& p, const std::string& space) {
    const Json doc = Json::parse(measure);
    if (doc.value("kind", "") == "exch-rer") return dump(io::to_json(is_unique(io::exch_from_json(doc), rat(p))));
    return dump(io::to_json(is_unique(io::rer_from_json(doc), rat(p), parse_space(space))));
  }, py::arg("measure"), py::arg("p"), py::arg("space") = "general");

  m.def("cp_membership", [](const std::string& color, const std::string& p) -> py::object {
    const auto nu = cp_membership(io::color_from_json(Json::parse(color)), rat(p));
    if (!nu) return py::none();
    return py::str(dump(io::to_json(*nu)));
  });

  m.def("represent_n3_half", [](const std::string& color) {
    return dump(io::to_json(represent_n3_half(io::color_from_json(Json::parse(color))).nu));
  });

  m.def("dominates", [](const std::string& lower, const std::string& upper) {
    return dominates(io::color_from_json(Json::parse(lower)), io::color_from_json(Json::parse(upper)));
  });

  m.def("product_measure", [](int n, const std::string& p) { return dump(io::to_json(product_measure(n, rat(p)))); });

  m.def("witnesses", [](const std::string& p) {
    Json out = Json::object();
    for (const auto& [name, entry] : witness::catalog(rat(p))) {
      out[name] = std::visit([](const auto& x) { return io::to_json(x); }, entry);
    }
    return dump(out);
  }, py::arg("p") = "1/2");

  m.def("xi_distribution", [](const std::vector<std::string>& pb, const std::string& p) {
    return dump(io::to_json(xi_distribution(boxes(pb), rat(p))));
  });

  m.def("marginal", [](const std::vector<std::string>& pb, const std::string& p, int n) {
    return dump(io::to_json(marginal_color_measure(boxes(pb), rat(p), n)));
  });

  m.def("split_identity_check", [](const std::string& p1, const std::string& p2, int n, const std::string& p) {
    return split_identity_check(rat(p1), rat(p2), n, rat(p));
  }, py::arg("p1"), py::arg("p2"), py::arg("n"), py::arg("p") = "1/2");

  m.def("uniqueness_audit", [](const std::vector<std::string>& pb, const std::string& p) {
    return dump(io::to_json(uniqueness_audit(boxes(pb), rat(p))));
  });

  m.def("d_paintbox", [](const std::vector<std::string>& pb, const std::string& p) {
    return to_string(d_paintbox(boxes(pb), rat(p)));
  });
  m.def("d_markov", [](const std::string& s, const std::string& p) { return to_string(d_markov(rat(s), rat(p))); });
  m.def("bounded_cluster_bound", [](int size, const std::string& p) { return bounded_cluster_bound(size, rat(p)); });

  m.def("markov_to_color", [](const std::string& p01, const std::string& p10) {
    const auto [s, p] = markov_to_color(MarkovSpec::from_jumps(rat(p01), rat(p10)));
    return std::make_pair(to_string(s), to_string(p));
  });
  m.def("color_to_markov", [](const std::string& s, const std::string& p) {
    return dump(io::to_json(color_to_markov(rat(s), rat(p))));
  });

  m.def("field_shift_check", &field_shift_check, py::arg("J"), py::arg("h"), py::arg("p"), py::arg("k"),
        py::arg("l"), py::arg("n"));
  m.def("run_conditional", [](double J, double h, double p, int kmax, int N) {
    return dump(io::to_json(run_conditional_sequence(J, h, p, kmax, N)));
  }, py::arg("J"), py::arg("h") = 0.0, py::arg("p") = 0.5, py::arg("kmax") = 6, py::arg("N") = 12);

  m.def("fk_exact", [](int vertices, const std::vector<std::pair<int, int>>& edges, const std::string& alpha,
                       const std::string& q) {
    return dump(io::to_json(fk_exact_rer(graph(vertices, edges), rat(alpha), rat(q))));
  }, py::arg("vertices"), py::arg("edges"), py::arg("alpha"), py::arg("q") = "1");

  m.def("couple_check", [](int vertices, const std::vector<std::pair<int, int>>& edges, const std::string& model,
                           double J, int q, int ell) {
    const FiniteGraph g = graph(vertices, edges);
    if (model == "ising") return dump(io::to_json(coupling_check_fk_ising(g, J)));
    if (model == "fuzzy-potts") return dump(io::to_json(coupling_check_fuzzy_potts(g, J, q, ell)));
    throw DomainError("model must be ising or fuzzy-potts");
  }, py::arg("vertices"), py::arg("edges"), py::arg("model") = "ising", py::arg("J") = 0.5, py::arg("q") = 3,
        py::arg("ell") = 1);

  m.def("sample_rwrs", [](const std::string& steps, long n, std::uint64_t seed) {
    return dump(io::to_json(rwrs_rer(StepLaw::parse(steps), n, seed)));
  });
  m.def("sample_voter", [](int d, int side, double horizon, std::uint64_t seed) {
    return dump(io::to_json(coalescing_rw_rer(d, side, horizon, seed)));
  });

  m.def("suite_names", &suite_names);
  m.def("verify", [](const std::string& name, std::uint64_t seed) {
    if (!is_suite(name)) throw DomainError("unknown suite: " + name);
    Json out = Json::array();
    for (const auto& r : run_suite(name, seed)) {
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back({{"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
      out.push_back({{"suite", r.name}, {"passed", r.passed()}, {"checks", checks}});
    }
    return dump(out);
  }, py::arg("name"), py::arg("seed") = kDefaultVerifySeed);
}
