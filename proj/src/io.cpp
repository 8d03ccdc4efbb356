#include "gdc/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gdc/errors.hpp"

namespace gdc::io {

namespace {

Json float_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& q : values) out.push_back(to_json(q));
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw DomainError(std::string("JSON document lacks field \"") + name + "\"");
  }
  return j.at(name);
}

void check_kind(const Json& j, const char* kind) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != kind) {
    throw DomainError(std::string("expected a \"") + kind + "\" document");
  }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("rationals must be given as strings such as \"3/8\"");
}

Json to_json(const RERMeasure& nu) {
  Json weights = Json::object();
  for (const auto& [pi, w] : nu.weights) weights[pi.to_string()] = to_json(w);
  return {{"kind", "rer"}, {"n", nu.n}, {"weights", weights}};
}

Json to_json(const ExchRERMeasure& nu) {
  Json weights = Json::object();
  for (auto it = nu.weights.rbegin(); it != nu.weights.rend(); ++it) {
    weights[it->first.to_string()] = to_json(it->second);
  }
  return {{"kind", "exch-rer"}, {"n", nu.n}, {"weights", weights}};
}

Json to_json(const ColorMeasure& mu) {
  Json weights = Json::object();
  for (Config x = 0; x < mu.weights.size(); ++x) {
    if (mu.weights[x] != 0) weights[config_to_string(x, mu.n)] = to_json(mu.weights[x]);
  }
  return {{"kind", "color"}, {"n", mu.n}, {"weights", weights}};
}

Json to_json(const OnesLaw& law) {
  return {{"kind", "ones-law"}, {"n", law.n}, {"weights", rational_list(law.weights)}};
}

Json to_json(const PaintBox& pb) { return rational_list(pb.probs); }

Json to_json(const AtomicXi& xi) {
  Json atoms = Json::object();
  for (const auto& [s, w] : xi.atoms) atoms[to_string(s)] = to_json(w);
  return {{"atoms", atoms}};
}

Json to_json(const SimpleMixture& mixture) {
  Json atoms = Json::object();
  for (const auto& [s, w] : mixture.atoms) atoms[to_string(s)] = to_json(w);
  return {{"atoms", atoms}};
}

Json to_json(const PaintboxMixture& mixture) {
  Json atoms = Json::array();
  for (const auto& [pb, w] : mixture.atoms) {
    atoms.push_back({{"boxes", to_json(pb)}, {"weight", to_json(w)}});
  }
  return {{"atoms", atoms}};
}

Json to_json(const KernelBasis& basis) {
  Json vectors = Json::array();
  for (const auto& v : basis.basis) vectors.push_back(rational_list(v));
  return {{"space", to_string(basis.space)}, {"n", basis.n},
          {"p", to_json(basis.p)},           {"dimension", basis.basis.size()},
          {"coordinates", basis.coordinates}, {"basis", vectors}};
}

Json to_json(const UniquenessCertificate& cert) {
  Json out = {{"unique", cert.unique},
              {"method", cert.method},
              {"kernel_dimension", cert.kernel_dimension},
              {"coordinates", cert.coordinates}};
  out["witness"] = cert.witness ? rational_list(*cert.witness) : Json(nullptr);
  return out;
}

Json to_json(const AssociationReport& report, int n) {
  Json out = {{"associated", report.associated}};
  if (report.associated) return out;
  auto members = [&](const std::vector<bool>& event) {
    Json list = Json::array();
    for (Config x = 0; x < event.size(); ++x) {
      if (event[x]) list.push_back(config_to_string(x, n));
    }
    return list;
  };
  out["first_event"] = members(report.first_event);
  out["second_event"] = members(report.second_event);
  out["p_first"] = to_json(report.p_first);
  out["p_second"] = to_json(report.p_second);
  out["p_both"] = to_json(report.p_both);
  return out;
}

Json to_json(const UniquenessAudit& audit) {
  Json candidates = Json::array();
  for (const auto& pb : audit.candidates) candidates.push_back(to_json(pb));
  Json system = Json::array();
  for (const auto& row : audit.system) system.push_back(rational_list(row));
  Json out = {{"unique", audit.unique},
              {"family", audit.family},
              {"target_support", rational_list(audit.target_support)},
              {"target_weights", rational_list(audit.target_weights)},
              {"candidates", candidates},
              {"system", system},
              {"max_off_target", to_json(audit.max_off_target)}};
  out["counterexample"] = audit.counterexample ? to_json(*audit.counterexample) : Json(nullptr);
  return out;
}

Json to_json(const TailLaw& law) {
  Json mass = Json::object();
  for (const auto& [k, w] : law.mass) mass[std::to_string(k)] = to_json(w);
  return {{"mass", mass}, {"residual", to_json(law.residual())}};
}

Json to_json(const DominationReport& report) {
  Json inputs = Json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  Json out = {{"quantity", report.quantity}, {"inputs", inputs}};
  if (report.exact) {
    out["value"] = to_json(*report.exact);
  } else if (report.approx) {
    out["value"] = *report.approx;
    out["tol"] = report.tol;
  } else {
    out["value"] = nullptr;
  }
  if (report.lhs) {
    out["lhs"] = float_or_null(*report.lhs);
    out["rhs"] = float_or_null(*report.rhs);
    out["log_lhs"] = float_or_null(*report.log_lhs);
    out["log_rhs"] = float_or_null(*report.log_rhs);
    out["tol"] = report.tol;
  }
  out["verdict"] = report.verdict ? Json(*report.verdict) : Json(nullptr);
  if (report.verdict) out["domination_refuted"] = report.refuted();
  return out;
}

Json to_json(const MarkovSpec& spec) {
  return {{"p00", to_json(spec.p00)}, {"p01", to_json(spec.p01)},
          {"p10", to_json(spec.p10)}, {"p11", to_json(spec.p11)}};
}

Json to_json(const RunConditional& run) {
  return {{"J", run.J},
          {"h", run.h},
          {"p", run.p},
          {"N", run.N},
          {"a", run.a},
          {"strictly_increasing", run.strictly_increasing()},
          {"verdict", run.verdict},
          {"min_margin", run.min_margin},
          {"tol", 1e-8}};
}

Json to_json(const CouplingReport& report) {
  return {{"model", report.model},
          {"deviation_alpha_1_minus_exp_minus_2J", report.deviation_two_j},
          {"deviation_alpha_1_minus_exp_minus_J", report.deviation_one_j},
          {"matching", report.matching},
          {"deviation", report.deviation()},
          {"tol", 1e-10}};
}

Json to_json(const EstimatorReport& report) {
  Json estimates = Json::object(), errors = Json::object();
  for (const auto& [k, v] : report.estimates) estimates[k] = v;
  for (const auto& [k, v] : report.stderr_) errors[k] = v;
  Json out = {{"name", report.name},       {"n_samples", report.n_samples},
              {"seed", report.seed},       {"estimates", estimates},
              {"stderr", errors}};
  if (report.insufficient) out["stderr_flag"] = "insufficient samples";
  return out;
}

Json to_json(const PartitionSample& sample) {
  Json parameters = Json::object();
  for (const auto& [k, v] : sample.parameters) parameters[k] = v;
  return {{"model", sample.model},
          {"parameters", parameters},
          {"seed", sample.seed},
          {"step", sample.step},
          {"sites", sample.partition.size()},
          {"classes", sample.partition.block_count()},
          {"partition", sample.partition.to_string()}};
}

RERMeasure rer_from_json(const Json& j) {
  check_kind(j, "rer");
  RERMeasure nu;
  nu.n = field(j, "n").get<int>();
  for (const auto& [key, w] : field(j, "weights").items()) {
    const SetPartition pi = SetPartition::parse(key);
    if (pi.size() != nu.n) throw DomainError("partition " + key + " has the wrong size");
    nu.add(pi, rational_from_json(w));
  }
  nu.validate();
  return nu;
}

ExchRERMeasure exch_from_json(const Json& j) {
  check_kind(j, "exch-rer");
  ExchRERMeasure nu;
  nu.n = field(j, "n").get<int>();
  for (const auto& [key, w] : field(j, "weights").items()) {
    nu.add(IntegerPartition::parse(key), rational_from_json(w));
  }
  nu.validate();
  return nu;
}

ColorMeasure color_from_json(const Json& j) {
  check_kind(j, "color");
  ColorMeasure mu(field(j, "n").get<int>());
  for (const auto& [key, w] : field(j, "weights").items()) {
    if (static_cast<int>(key.size()) != mu.n) throw DomainError("configuration " + key + " has the wrong length");
    mu[parse_config(key)] += rational_from_json(w);
  }
  mu.validate();
  return mu;
}

PaintBox paintbox_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "boxes") : j;
  if (!list.is_array()) throw DomainError("a paint-box is a list of rationals");
  std::vector<Rational> probs;
  for (const auto& q : list) probs.push_back(rational_from_json(q));
  return PaintBox::make(std::move(probs));
}

AtomicXi xi_from_json(const Json& j) {
  AtomicXi xi;
  for (const auto& [s, w] : field(j, "atoms").items()) {
    xi.atoms[parse_rational(s)] += rational_from_json(w);
  }
  xi.validate();
  return xi;
}

SimpleMixture simple_mixture_from_json(const Json& j) {
  SimpleMixture mixture;
  for (const auto& [s, w] : field(j, "atoms").items()) {
    mixture.atoms[parse_rational(s)] += rational_from_json(w);
  }
  return mixture;
}

PaintboxMixture mixture_from_json(const Json& j) {
  PaintboxMixture mixture;
  for (const auto& atom : field(j, "atoms")) {
    mixture.atoms[paintbox_from_json(field(atom, "boxes"))] +=
        rational_from_json(field(atom, "weight"));
  }
  return mixture;
}

TailLaw tail_law_from_json(const Json& j) {
  TailLaw law;
  for (const auto& [key, w] : field(j, "mass").items()) {
    try {
      law.mass[std::stol(key)] += rational_from_json(w);
    } catch (const std::logic_error&) {
      throw DomainError("tail law keys must be integers: " + key);
    }
  }
  law.validate();
  return law;
}

std::string edge_law_csv(const EdgeWindowLaw& law) {
  std::ostringstream out;
  out.precision(17);
  out << "config,probability\n";
  for (std::uint32_t y = 0; y < law.weights.size(); ++y) {
    out << law.config_string(y) << ',' << law.weights[y] << '\n';
  }
  return out.str();
}

std::string colors_csv(const ColorBatch& samples, const std::string& header) {
  std::ostringstream out;
  out << "# " << header << "\nconfig\n";
  for (const auto& row : samples) {
    for (std::uint8_t bit : row) out << int(bit);
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw DomainError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace gdc::io
