// Command-line front end: every library operation as a subcommand with JSON output.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gdc/chain.hpp"
#include "gdc/domination.hpp"
#include "gdc/errors.hpp"
#include "gdc/graph.hpp"
#include "gdc/io.hpp"
#include "gdc/paintbox.hpp"
#include "gdc/phi.hpp"
#include "gdc/rng.hpp"
#include "gdc/sampling.hpp"
#include "gdc/verify.hpp"
#include "gdc/witnesses.hpp"

namespace {

using gdc::Rational;
using gdc::io::Json;
using gdc::io::to_json;

enum Exit { kOk = 0, kPropertyFailed = 1, kUsage = 2, kSizeLimit = 3 };

struct Outcome {
  Json payload;
  bool property_ok = true;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  int jobs = 1;
};

class UsageError : public gdc::Error {
 public:
  using gdc::Error::Error;
};

Rational rational(const std::string& text) { return gdc::parse_rational(text); }

std::uint64_t require_seed(const Globals& g) {
  if (!g.seed) throw UsageError("stochastic commands need --seed");
  return *g.seed;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<double> double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(std::stod(item));
  return out;
}

gdc::PaintBox boxes(const std::string& text) {
  std::vector<Rational> probs;
  std::string body = text;
  if (!body.empty() && body.front() == '(') body = body.substr(1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  for (const auto& item : split(body, ',')) probs.push_back(rational(item));
  return gdc::PaintBox::make(std::move(probs));
}

// Measure file of any kind, dispatched on its "kind" field.
Json measure_document(const std::string& path) {
  Json j = gdc::io::read_json_file(path);
  if (!j.contains("kind")) throw UsageError("measure file needs a \"kind\" field");
  return j;
}

struct GraphFlags {
  std::string file;
  int complete = 0, path = 0, cycle = 0;

  void add(CLI::App* app) {
    app->add_option("--graph", file, "Edge-list file (one \"u v\" per line)");
    app->add_option("--complete", complete, "Use the complete graph on K vertices");
    app->add_option("--path", path, "Use the path on K vertices");
    app->add_option("--cycle", cycle, "Use the cycle on K vertices");
  }
  gdc::FiniteGraph graph() const {
    if (!file.empty()) return gdc::FiniteGraph::parse(gdc::io::read_file(file));
    if (complete > 0) return gdc::FiniteGraph::complete(complete);
    if (path > 0) return gdc::FiniteGraph::path(path);
    if (cycle > 0) return gdc::FiniteGraph::cycle(cycle);
    throw UsageError("give --graph, --complete, --path or --cycle");
  }
};

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

void print(const Json& result, const std::string& format) {
  if (format == "table") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(result, "", rows);
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
  } else {
    std::cout << result.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divide-and-colour laboratory: exact colour-process computations and samplers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Master seed (required by stochastic commands)");
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", globals.jobs, "Worker threads for independent replicates")
      ->check(CLI::PositiveNumber);

  std::function<Outcome()> action;
  std::string command;
  auto bind = [&](CLI::App* sub, const std::string& name, std::function<Outcome()> body) {
    sub->callback([&, name, body] {
      command = name;
      action = body;
    });
  };

  // finite
  auto* finite = app.add_subcommand("finite", "Finite partition spaces");
  finite->require_subcommand(1);
  {
    auto* sub = finite->add_subcommand("kernel", "Kernel of the colouring map");
    static int n = 3;
    static std::string p = "1/2", space = "general";
    sub->add_option("--n", n, "Number of elements")->required();
    sub->add_option("--p", p, "Colour probability")->required();
    sub->add_option("--space", space, "general or exchangeable");
    bind(sub, "finite kernel", [] {
      return Outcome{to_json(gdc::kernel(n, rational(p), gdc::parse_space(space)))};
    });
  }
  {
    auto* sub = finite->add_subcommand("unique", "Decide uniqueness of a preimage");
    static std::string file, p, space = "general";
    sub->add_option("--measure", file, "RER or exchangeable RER file")->required();
    sub->add_option("--p", p, "Colour probability")->required();
    sub->add_option("--space", space, "general or exchangeable");
    bind(sub, "finite unique", [] {
      const Json doc = measure_document(file);
      if (doc["kind"] == "exch-rer") {
        return Outcome{to_json(gdc::is_unique(gdc::io::exch_from_json(doc), rational(p)))};
      }
      return Outcome{to_json(gdc::is_unique(gdc::io::rer_from_json(doc), rational(p),
                                            gdc::parse_space(space)))};
    });
  }
  {
    auto* sub = finite->add_subcommand("fingerprint", "Statistics determined by the colour law");
    static std::string file, subset;
    static int size = 0;
    sub->add_option("--measure", file, "RER file")->required();
    sub->add_option("--subset", subset, "Comma-separated 1-based elements");
    sub->add_option("--size", size, "Class size t for the expected count of size-t classes");
    bind(sub, "finite fingerprint", [] {
      const gdc::RERMeasure nu = gdc::io::rer_from_json(measure_document(file));
      Json out = Json::object();
      if (!subset.empty()) {
        const auto elems = int_list(subset);
        Json pgf = Json::array();
        for (const auto& c : gdc::fingerprint_class_count_pgf(nu, elems)) pgf.push_back(to_json(c));
        out["class_count_pgf"] = pgf;
        out["one_class_probability"] = to_json(gdc::fingerprint_class_prob(nu, elems));
      }
      if (size > 0) out["size_mean"] = to_json(gdc::fingerprint_size_mean(nu, size));
      if (out.empty()) throw UsageError("give --subset or --size");
      return Outcome{out};
    });
  }
  {
    auto* sub = finite->add_subcommand("membership", "Is a colour law a colour process at p");
    static std::string file, p;
    sub->add_option("--measure", file, "Colour measure file")->required();
    sub->add_option("--p", p, "Colour probability")->required();
    bind(sub, "finite membership", [] {
      const auto nu = gdc::cp_membership(gdc::io::color_from_json(measure_document(file)), rational(p));
      Json out = {{"member", nu.has_value()}};
      out["witness"] = nu ? to_json(*nu) : Json(nullptr);
      return Outcome{out};
    });
  }
  {
    auto* sub = finite->add_subcommand("represent", "Explicit preimage for n=2, or n=3 at p=1/2");
    static std::string file;
    sub->add_option("--measure", file, "Colour measure file")->required();
    bind(sub, "finite represent", [] {
      const gdc::ColorMeasure mu = gdc::io::color_from_json(measure_document(file));
      if (mu.n == 2) {
        const auto rep = gdc::represent_n2(mu);
        return Outcome{{{"rer", to_json(rep.nu)}, {"p", to_json(rep.p)}}};
      }
      if (mu.n == 3) {
        const auto rep = gdc::represent_n3_half(mu);
        return Outcome{{{"rer", to_json(rep.nu)}, {"p", "1/2"}, {"separated", rep.separated},
                        {"relabeling", rep.relabeling}}};
      }
      throw UsageError("represent handles n=2 and n=3 only");
    });
  }
  {
    auto* sub = finite->add_subcommand("dominates", "Exact stochastic domination test");
    static std::string lower, upper, alpha;
    sub->add_option("--lower", lower, "Lower colour measure file");
    sub->add_option("--alpha", alpha, "Use the product measure with this density as the lower law");
    sub->add_option("--upper", upper, "Upper colour measure file")->required();
    bind(sub, "finite dominates", [] {
      const gdc::ColorMeasure hi = gdc::io::color_from_json(measure_document(upper));
      gdc::ColorMeasure lo;
      if (!lower.empty()) {
        lo = gdc::io::color_from_json(measure_document(lower));
      } else if (!alpha.empty()) {
        lo = gdc::product_measure(hi.n, rational(alpha));
      } else {
        throw UsageError("give --lower or --alpha");
      }
      return Outcome{{{"dominates", gdc::dominates(lo, hi)}}};
    });
  }
  {
    auto* sub = finite->add_subcommand("witnesses", "Named fixture measures");
    static std::string p = "1/2", name;
    sub->add_option("--p", p, "Parameter for p-dependent fixtures");
    sub->add_option("--name", name, "Only this fixture");
    bind(sub, "finite witnesses", [] {
      Json out = Json::object();
      for (const auto& [key, entry] : gdc::witness::catalog(rational(p))) {
        if (!name.empty() && key != name) continue;
        out[key] = std::visit([](const auto& m) { return to_json(m); }, entry);
      }
      if (out.empty()) throw UsageError("unknown fixture: " + name);
      return Outcome{out};
    });
  }

  // exch
  auto* exch = app.add_subcommand("exch", "Exchangeable partitions and paint-boxes");
  exch->require_subcommand(1);
  {
    auto* sub = exch->add_subcommand("xi", "Mixing law of a paint-box colour process");
    static std::string pb, p;
    sub->add_option("--boxes", pb, "Paint-box, e.g. 1/2,1/4")->required();
    sub->add_option("--p", p, "Colour probability")->required();
    bind(sub, "exch xi", [] { return Outcome{to_json(gdc::xi_distribution(boxes(pb), rational(p)))}; });
  }
  {
    auto* sub = exch->add_subcommand("marginal", "Colour law on [n]");
    static std::string pb, xi, mixture, simple, p;
    static int n = 4;
    sub->add_option("--boxes", pb, "Paint-box");
    sub->add_option("--xi", xi, "Atomic mixing-law file");
    sub->add_option("--mixture", mixture, "Paint-box mixture file");
    sub->add_option("--simple", simple, "One-box mixture file");
    sub->add_option("--p", p, "Colour probability");
    sub->add_option("--n", n, "Window size")->required();
    bind(sub, "exch marginal", [] {
      if (!xi.empty()) return Outcome{to_json(gdc::marginal_color_measure(gdc::io::xi_from_json(gdc::io::read_json_file(xi)), n))};
      if (p.empty()) throw UsageError("give --p");
      if (!pb.empty()) return Outcome{to_json(gdc::marginal_color_measure(boxes(pb), rational(p), n))};
      if (!mixture.empty()) {
        return Outcome{to_json(gdc::marginal_color_measure(
            gdc::io::mixture_from_json(gdc::io::read_json_file(mixture)), rational(p), n))};
      }
      if (!simple.empty()) {
        return Outcome{to_json(gdc::marginal_color_measure(
            gdc::io::simple_mixture_from_json(gdc::io::read_json_file(simple)), rational(p), n))};
      }
      throw UsageError("give --boxes, --xi, --mixture or --simple");
    });
  }
  {
    auto* sub = exch->add_subcommand("split-check", "Two-box splitting identity");
    static std::string p1, p2, p = "1/2";
    static int n = 5;
    sub->add_option("--p1", p1, "Larger box")->required();
    sub->add_option("--p2", p2, "Smaller box")->required();
    sub->add_option("--n", n, "Window size");
    sub->add_option("--p", p, "Colour probability");
    bind(sub, "exch split-check", [] {
      const bool holds = gdc::split_identity_check(rational(p1), rational(p2), n, rational(p));
      return Outcome{{{"holds", holds}}, holds};
    });
  }
  {
    auto* sub = exch->add_subcommand("decompose", "One-box decomposition of a symmetric mixing law");
    static std::string xi;
    sub->add_option("--xi", xi, "Atomic mixing-law file")->required();
    bind(sub, "exch decompose", [] {
      return Outcome{to_json(gdc::mainp12_decompose(gdc::io::xi_from_json(gdc::io::read_json_file(xi))))};
    });
  }
  {
    auto* sub = exch->add_subcommand("audit", "Uniqueness audit for small paint-boxes");
    static std::string pb, p;
    sub->add_option("--boxes", pb, "Target paint-box")->required();
    sub->add_option("--p", p, "Colour probability")->required();
    bind(sub, "exch audit", [] { return Outcome{to_json(gdc::uniqueness_audit(boxes(pb), rational(p)))}; });
  }

  // dom
  auto* dom = app.add_subcommand("dom", "Stochastic domination quantities");
  dom->require_subcommand(1);
  {
    auto* sub = dom->add_subcommand("value", "Closed-form domination values and thresholds");
    static std::string model, pb, mixture, xi, s, p;
    static int n = 0, m = 0;
    static bool limit = false;
    sub->add_option("--model", model, "paintbox, mixture, markov, finite-window or bounded-cluster")
        ->required();
    sub->add_option("--boxes", pb, "Paint-box");
    sub->add_option("--mixture", mixture, "Paint-box mixture file");
    sub->add_option("--xi", xi, "Atomic mixing-law file");
    sub->add_option("--s", s, "Edge probability");
    sub->add_option("--p", p, "Colour probability");
    sub->add_option("--n", n, "Window size");
    sub->add_option("--M", m, "Cluster size bound");
    sub->add_flag("--limit", limit, "Report the p -> 1 limit");
    bind(sub, "dom value", [] {
      gdc::DominationReport r;
      r.quantity = "d_" + model;
      auto need_p = [] {
        if (p.empty()) throw UsageError("give --p");
        return rational(p);
      };
      if (model == "paintbox") {
        const auto box = boxes(pb);
        r.inputs = {{"boxes", box.to_string()}};
        if (limit) {
          r.exact = gdc::d_paintbox_limit(box);
        } else {
          r.inputs.emplace_back("p", p);
          r.exact = gdc::d_paintbox(box, need_p());
        }
      } else if (model == "mixture") {
        r.inputs = {{"mixture", mixture}, {"p", p}};
        r.exact = gdc::d_mixture(gdc::io::mixture_from_json(gdc::io::read_json_file(mixture)), need_p());
      } else if (model == "markov") {
        if (s.empty()) throw UsageError("give --s");
        r.inputs = {{"s", s}};
        if (limit) {
          r.exact = gdc::d_markov_limit(rational(s));
        } else {
          r.inputs.emplace_back("p", p);
          r.exact = gdc::d_markov(rational(s), need_p());
        }
      } else if (model == "finite-window") {
        r.inputs = {{"n", std::to_string(n)}};
        gdc::AtomicXi law;
        if (!xi.empty()) {
          law = gdc::io::xi_from_json(gdc::io::read_json_file(xi));
        } else if (!pb.empty()) {
          law = gdc::xi_distribution(boxes(pb), need_p());
          r.inputs.emplace_back("boxes", boxes(pb).to_string());
          r.inputs.emplace_back("p", p);
        } else {
          throw UsageError("give --xi or --boxes with --p");
        }
        r.approx = gdc::finite_window_threshold(law, n);
      } else if (model == "bounded-cluster") {
        r.inputs = {{"M", std::to_string(m)}, {"p", p}};
        r.approx = gdc::bounded_cluster_bound(m, need_p());
      } else {
        throw UsageError("unknown model: " + model);
      }
      return Outcome{to_json(r)};
    });
  }
  {
    auto* sub = dom->add_subcommand("refute", "Necessary-condition checks for domination");
    static std::string kind = "count", law_file, model, s, p, alpha, variant = "1d-connected";
    static int n = 1, k = 1, d = 1, max_size = 200;
    sub->add_option("--kind", kind, "count or size")->check(CLI::IsMember({"count", "size"}));
    sub->add_option("--law", law_file, "Tail-law file");
    sub->add_option("--model", model, "Built-in law: iid-edge");
    sub->add_option("--s", s, "Edge probability for iid-edge");
    sub->add_option("--p", p, "Colour probability")->required();
    sub->add_option("--alpha", alpha, "Product density under test")->required();
    sub->add_option("--n", n, "Window radius or cluster size");
    sub->add_option("--k", k, "Cluster count threshold");
    sub->add_option("--d", d, "Dimension");
    sub->add_option("--variant", variant, "1d-connected or zd-connected");
    bind(sub, "dom refute", [] {
      gdc::TailLaw law;
      if (!law_file.empty()) {
        law = gdc::io::tail_law_from_json(gdc::io::read_json_file(law_file));
      } else if (model == "iid-edge") {
        if (s.empty()) throw UsageError("give --s");
        law = kind == "count" ? gdc::iid_edge_cluster_count_law(rational(s), n)
                              : gdc::iid_edge_origin_size_law(rational(s), std::max(n, max_size));
      } else {
        throw UsageError("give --law or --model iid-edge");
      }
      const auto report =
          kind == "count"
              ? gdc::cluster_count_inequality_check(law, rational(p), rational(alpha), n, k, d)
              : gdc::cluster_size_inequality_check(law, rational(p), rational(alpha), n, d,
                                                   gdc::parse_cluster_variant(variant));
      return Outcome{to_json(report)};
    });
  }

  // chain
  auto* chain = app.add_subcommand("chain", "One-dimensional chain models");
  chain->require_subcommand(1);
  {
    auto* sub = chain->add_subcommand("correspond", "Markov chain <-> i.i.d.-edge colour process");
    static std::string p01, p10, s, p;
    sub->add_option("--p01", p01, "Jump probability 0 -> 1");
    sub->add_option("--p10", p10, "Jump probability 1 -> 0");
    sub->add_option("--s", s, "Edge probability");
    sub->add_option("--p", p, "Colour probability");
    bind(sub, "chain correspond", [] {
      if (!p01.empty() && !p10.empty()) {
        const auto spec = gdc::MarkovSpec::from_jumps(rational(p01), rational(p10));
        const auto [sv, pv] = gdc::markov_to_color(spec);
        return Outcome{{{"chain", to_json(spec)}, {"s", to_json(sv)}, {"p", to_json(pv)}}};
      }
      if (!s.empty() && !p.empty()) {
        const auto spec = gdc::color_to_markov(rational(s), rational(p));
        return Outcome{{{"s", s}, {"p", p}, {"chain", to_json(spec)}}};
      }
      throw UsageError("give --p01 and --p10, or --s and --p");
    });
  }
  {
    auto* sub = chain->add_subcommand("field-shift", "Conditioning on a run of ones as a field shift");
    static double J = 0.5, p = 0.5;
    static std::string h = "0";
    static int k = 0, l = 0, n = 1;
    sub->add_option("--J", J, "Coupling");
    sub->add_option("--field", h, "Field: one value or one per edge, comma-separated");
    sub->add_option("--p", p, "Colour probability");
    sub->add_option("--k", k, "First site of the run")->required();
    sub->add_option("--l", l, "Last site of the run")->required();
    sub->add_option("--n", n, "Window sites 0..n")->required();
    bind(sub, "chain field-shift", [] {
      const double dev = gdc::field_shift_check(J, double_list(h), p, k, l, n);
      return Outcome{{{"deviation", dev}, {"tol", 1e-10}, {"within_tol", dev <= 1e-10}}, dev <= 1e-10};
    });
  }
  {
    auto* sub = chain->add_subcommand("run-conditional", "P(X(0)=1 | X(1..k)=1) for k=1..kmax");
    static double J = 0.5, h = 0.0, p = 0.5;
    static int kmax = 6, N = 12;
    sub->add_option("--J", J, "Coupling");
    sub->add_option("--field", h, "Constant field");
    sub->add_option("--p", p, "Colour probability");
    sub->add_option("--kmax", kmax, "Longest run");
    sub->add_option("--N", N, "Window radius");
    bind(sub, "chain run-conditional", [] {
      return Outcome{to_json(gdc::run_conditional_sequence(J, h, p, kmax, N))};
    });
  }
  {
    auto* sub = chain->add_subcommand("edge-law", "Ising edge-spin window law as CSV");
    static double J = 0.5;
    static std::string h = "0";
    static int N = 2;
    sub->add_option("--J", J, "Coupling");
    sub->add_option("--field", h, "Field: one value or one per edge");
    sub->add_option("--N", N, "Window radius");
    bind(sub, "chain edge-law", [] {
      const gdc::IsingEdgeSpec spec{J, double_list(h), N};
      return Outcome{{{"csv", gdc::io::edge_law_csv(gdc::ising_edge_window_law(spec))}}};
    });
  }

  // graph
  auto* graph = app.add_subcommand("graph", "Random-cluster and spin models on small graphs");
  graph->require_subcommand(1);
  {
    auto* sub = graph->add_subcommand("fk-exact", "Exact random-cluster partition law");
    static GraphFlags flags;
    static std::string alpha, q = "1";
    flags.add(sub);
    sub->add_option("--alpha", alpha, "Edge parameter")->required();
    sub->add_option("--q", q, "Cluster weight");
    bind(sub, "graph fk-exact", [] {
      return Outcome{to_json(gdc::fk_exact_rer(flags.graph(), rational(alpha), rational(q)))};
    });
  }
  {
    auto* sub = graph->add_subcommand("couple-check", "Spin model versus coloured random-cluster law");
    static GraphFlags flags;
    static std::string model = "ising";
    static double J = 0.5;
    static int q = 3, ell = 1;
    flags.add(sub);
    sub->add_option("--model", model, "ising or fuzzy-potts")->check(CLI::IsMember({"ising", "fuzzy-potts"}));
    sub->add_option("--J", J, "Coupling");
    sub->add_option("--q", q, "Potts states");
    sub->add_option("--ell", ell, "States coloured 1");
    bind(sub, "graph couple-check", [] {
      const auto g = flags.graph();
      const auto r = model == "ising" ? gdc::coupling_check_fk_ising(g, J)
                                      : gdc::coupling_check_fuzzy_potts(g, J, q, ell);
      return Outcome{to_json(r), r.matching != "none"};
    });
  }

  // sample
  auto* sample = app.add_subcommand("sample", "Samplers (need --seed)");
  sample->require_subcommand(1);
  static std::string color_p;
  auto colour_rows = [](const std::vector<gdc::SetPartition>& parts, std::uint64_t seed,
                        const std::string& header) {
    gdc::ColorBatch rows;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      rows.push_back(gdc::color_sample(parts[i], std::stod(color_p), seed, i + 1000000));
    }
    return gdc::io::colors_csv(rows, header);
  };
  {
    auto* sub = sample->add_subcommand("fk", "Heat-bath random-cluster sampler");
    static GraphFlags flags;
    static double alpha = 0.5, q = 2.0;
    static long sweeps = 10, burn_in = 100;
    flags.add(sub);
    sub->add_option("--alpha", alpha, "Edge parameter");
    sub->add_option("--q", q, "Cluster weight (>= 1)");
    sub->add_option("--sweeps", sweeps, "Samples to keep");
    sub->add_option("--burn-in", burn_in, "Sweeps discarded first");
    sub->add_option("--colors", color_p, "Also colour each sample with this p");
    bind(sub, "sample fk", [&globals, colour_rows] {
      const std::uint64_t seed = require_seed(globals);
      const auto samples = gdc::fk_glauber_sampler(flags.graph(), alpha, q, sweeps, burn_in, seed);
      Json list = Json::array();
      std::vector<gdc::SetPartition> parts;
      for (const auto& s : samples) {
        list.push_back(to_json(s));
        parts.push_back(s.partition);
      }
      Json out = {{"samples", list}};
      if (!color_p.empty()) out["colors_csv"] = colour_rows(parts, seed, "model=fk seed=" + std::to_string(seed) + " p=" + color_p);
      return Outcome{out};
    });
  }
  {
    auto* sub = sample->add_subcommand("voter", "Coalescing random walk partition on a torus");
    static int d = 1, side = 100, reps = 1;
    static double horizon = 100.0;
    sub->add_option("--d", d, "Dimension");
    sub->add_option("--L", side, "Torus side");
    sub->add_option("--T", horizon, "Time horizon");
    sub->add_option("--reps", reps, "Independent replicates");
    sub->add_option("--colors", color_p, "Also colour each sample with this p");
    bind(sub, "sample voter", [&globals, colour_rows] {
      const std::uint64_t seed = require_seed(globals);
      std::vector<gdc::PartitionSample> samples(reps);
      gdc::parallel_blocks(reps, globals.jobs, [&](std::size_t i) {
        samples[i] = gdc::coalescing_rw_rer(d, side, horizon, seed, i);
      });
      Json list = Json::array();
      std::vector<gdc::SetPartition> parts;
      for (const auto& s : samples) {
        Json entry = to_json(s);
        if (s.partition.size() > 4096) entry.erase("partition");
        list.push_back(entry);
        parts.push_back(s.partition);
      }
      Json out = {{"samples", list}, {"note", "classes only merge as T grows; the count at finite T bounds the limit from above"}};
      if (!color_p.empty()) out["colors_csv"] = colour_rows(parts, seed, "model=voter seed=" + std::to_string(seed) + " p=" + color_p);
      return Outcome{out};
    });
  }
  {
    auto* sub = sample->add_subcommand("rwrs", "Random-walk range partition of times 0..n-1");
    static std::string steps = "1:0.5;-1:0.5";
    static long n = 1000;
    sub->add_option("--steps", steps, "Step law, e.g. 1:0.5;-1:0.5 or 1,0:0.25;...");
    sub->add_option("--n", n, "Number of times");
    bind(sub, "sample rwrs", [&globals] {
      const auto s = gdc::rwrs_rer(gdc::StepLaw::parse(steps), n, require_seed(globals));
      Json out = to_json(s);
      if (s.partition.size() > 4096) out.erase("partition");
      out["range"] = s.partition.block_count();
      return Outcome{out};
    });
  }

  // estimate
  {
    auto* sub = app.add_subcommand("estimate", "Monte Carlo estimators (need --seed)");
    static std::string what = "range", steps = "1:0.5;-1:0.5", model = "voter", pairs = "0,1",
                       radii = "2,4,6";
    static long n = 1000;
    static int reps = 8, d = 1, side = 21, radius = 2;
    static double horizon = 100.0, p = 0.5;
    sub->add_option("--what", what, "range, pair, ergodicity or density")
        ->check(CLI::IsMember({"range", "pair", "ergodicity", "density"}));
    sub->add_option("--steps", steps, "Step law for range");
    sub->add_option("--n", n, "Walk length for range");
    sub->add_option("--reps", reps, "Replicates");
    sub->add_option("--model", model, "voter, iid or one-class partitions on the torus");
    sub->add_option("--d", d, "Dimension");
    sub->add_option("--L", side, "Torus side");
    sub->add_option("--T", horizon, "Voter time horizon");
    sub->add_option("--p", p, "Colour probability");
    sub->add_option("--pairs", pairs, "Site pairs u,v;u,v");
    sub->add_option("--radius", radius, "Box radius for the ergodicity diagnostic");
    sub->add_option("--radii", radii, "Box radii for the density estimator");
    bind(sub, "estimate", [&globals] {
      const std::uint64_t seed = require_seed(globals);
      if (what == "range") {
        return Outcome{to_json(gdc::range_estimator(gdc::StepLaw::parse(steps), n, reps, seed, globals.jobs))};
      }
      long sites = 1;
      for (int i = 0; i < d; ++i) sites *= side;
      std::vector<gdc::SetPartition> parts(reps);
      gdc::parallel_blocks(reps, globals.jobs, [&](std::size_t i) {
        if (model == "voter") {
          parts[i] = gdc::coalescing_rw_rer(d, side, horizon, seed, i).partition;
        } else if (model == "iid") {
          parts[i] = gdc::SetPartition::singletons(static_cast<int>(sites));
        } else {
          parts[i] = gdc::SetPartition::full(static_cast<int>(sites));
        }
      });
      if (model != "voter" && model != "iid" && model != "one-class") throw UsageError("unknown model: " + model);
      gdc::EstimatorReport report;
      if (what == "density") {
        report = gdc::cluster_density_estimator(parts, d, side, int_list(radii));
      } else {
        gdc::ColorBatch colours;
        for (int i = 0; i < reps; ++i) colours.push_back(gdc::color_sample(parts[i], p, seed, 1000000 + i));
        if (what == "pair") {
          std::vector<std::pair<int, int>> list;
          for (const auto& item : split(pairs, ';')) {
            const auto uv = int_list(item);
            if (uv.size() != 2) throw UsageError("pairs are u,v;u,v");
            list.emplace_back(uv[0], uv[1]);
          }
          report = gdc::pair_correlation_estimator(colours, list);
        } else {
          report = gdc::ergodicity_diagnostic(colours, d, side, radius, p);
        }
      }
      report.seed = seed;
      return Outcome{to_json(report)};
    });
  }

  // verify
  {
    auto* sub = app.add_subcommand("verify", "Run a verification suite");
    static std::string suite;
    sub->add_option("suite", suite, "Suite name or all")->required();
    bind(sub, "verify", [&globals] {
      if (!gdc::is_suite(suite)) throw UsageError("unknown suite: " + suite);
      const auto reports = gdc::run_suite(suite, globals.seed.value_or(gdc::kDefaultVerifySeed), globals.jobs);
      Json out = Json::array();
      bool ok = true;
      for (const auto& r : reports) {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
          checks.push_back({{"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
        }
        out.push_back({{"suite", r.name}, {"passed", r.passed()}, {"checks", checks}});
        ok = ok && r.passed();
      }
      return Outcome{{{"suites", out}, {"passed", ok}}, ok};
    });
  }

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

  Json result = {{"command", command}};
  int code = kOk;
  try {
    Outcome outcome = action();
    result["status"] = outcome.property_ok ? "ok" : "property-violated";
    result["payload"] = std::move(outcome.payload);
    code = outcome.property_ok ? kOk : kPropertyFailed;
  } catch (const gdc::SizeLimitError& e) {
    result["status"] = "size-limit";
    result["error"] = e.what();
    code = kSizeLimit;
  } catch (const gdc::NotColorProcessError& e) {
    result["status"] = "property-violated";
    result["error"] = e.what();
    code = kPropertyFailed;
  } catch (const gdc::Error& e) {
    result["status"] = "usage-error";
    result["error"] = e.what();
    code = kUsage;
  } catch (const std::invalid_argument& e) {
    result["status"] = "usage-error";
    result["error"] = std::string("bad number: ") + e.what();
    code = kUsage;
  }
  print(result, globals.format);
  return code;
}
