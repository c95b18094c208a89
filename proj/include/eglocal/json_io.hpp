#pragma once

// JSON and CSV renderings of reports. Field order is fixed; rationals are
// {"num", "den"} pairs and bounds are in half-units.

#include <string>
#include <vector>

#include <json.hpp>

#include "eglocal/analysis.hpp"
#include "eglocal/blocks.hpp"
#include "eglocal/peeling.hpp"
#include "eglocal/scan.hpp"
#include "eglocal/weights.hpp"

namespace eglocal {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
Json to_json(const Rational& r);
Json to_json(const WeightTable& w);
Json to_json(const EdgeWeightTable& w);
Json to_json(const EdgeLocalReport& r);
Json to_json(const BoundReport& r);
Json to_json(const CharacterizationVerdict& v);
Json to_json(const BlockDecomposition& d);
Json to_json(const PeelTrace& t);
Json to_json(const CertificateReport& r);
Json to_json(const std::vector<CheckResult>& checks);
Json to_json(const StructureVerdict& v);
Json to_json(const ExtremalAudit& a);
Json to_json(const ScanRow& r);
Json to_json(const ScanSummary& s, bool with_timing);

std::string scan_csv_header();
std::string to_csv(const ScanRow& r);

}  // namespace eglocal
