#pragma once

#include <json.hpp>

#include "cfc/bounds.hpp"
#include "cfc/cover_analysis.hpp"
#include "cfc/decoder.hpp"
#include "cfc/design_analysis.hpp"
#include "cfc/ensemble.hpp"

namespace cfc {

using Json = nlohmann::ordered_json;

/// Schema identifier embedded in every CLI output object.
inline constexpr const char* kFormatVersion = "1";

/// Big integers render as JSON numbers when they fit in 64 bits, else as
/// decimal strings.
Json big_to_json(const BigInt& v);

Json to_json(const Rational& r);
Json to_json(const IndexSet& s);            // 1-based array
Json to_json(const Superset& p);            // array of 1-based arrays
Json to_json(const CoverAnalysisReport& r);
Json to_json(const DesignAnalysisReport& r);
Json to_json(const Prop4Report& r);
Json to_json(const ProjectionBoundReport& r);
Json to_json(const DecodeResult& r);
Json to_json(const McEstimate& e);
Json to_json(const UnionWeightDistribution& d);
Json to_json(const bounds::BoundResult& r);
Json to_json(const bounds::AsymptoticRates& r);

}  // namespace cfc
