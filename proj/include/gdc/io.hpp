#pragma once

#include <string>

#include "json.hpp"

#include "gdc/chain.hpp"
#include "gdc/domination.hpp"
#include "gdc/paintbox.hpp"
#include "gdc/phi.hpp"
#include "gdc/sampling.hpp"

namespace gdc::io {

using Json = nlohmann::ordered_json;

// Rationals are strings "a/b"; readers also accept JSON numbers given as integers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const RERMeasure& nu);
Json to_json(const ExchRERMeasure& nu);
Json to_json(const ColorMeasure& mu);
Json to_json(const OnesLaw& law);
Json to_json(const PaintBox& pb);
Json to_json(const AtomicXi& xi);
Json to_json(const SimpleMixture& mixture);
Json to_json(const PaintboxMixture& mixture);
Json to_json(const KernelBasis& basis);
Json to_json(const UniquenessCertificate& cert);
Json to_json(const AssociationReport& report, int n);
Json to_json(const UniquenessAudit& audit);
Json to_json(const TailLaw& law);
Json to_json(const DominationReport& report);
Json to_json(const MarkovSpec& spec);
Json to_json(const RunConditional& run);
Json to_json(const CouplingReport& report);
Json to_json(const EstimatorReport& report);
Json to_json(const PartitionSample& sample);

// Measure documents carry "kind": "rer", "exch-rer" or "color". AtomicXi and
// SimpleMixture are {"atoms": {"value": "weight", ...}}.
RERMeasure rer_from_json(const Json& j);
ExchRERMeasure exch_from_json(const Json& j);
ColorMeasure color_from_json(const Json& j);
PaintBox paintbox_from_json(const Json& j);
AtomicXi xi_from_json(const Json& j);
SimpleMixture simple_mixture_from_json(const Json& j);
PaintboxMixture mixture_from_json(const Json& j);
TailLaw tail_law_from_json(const Json& j);

// CSV with header "config,probability"; configs as +/- strings.
std::string edge_law_csv(const EdgeWindowLaw& law);
// Comment line with the header text, then one bit-string per sample.
std::string colors_csv(const ColorBatch& samples, const std::string& header);

std::string read_file(const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace gdc::io
