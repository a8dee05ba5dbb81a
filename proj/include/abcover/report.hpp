#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abcover/bounds.hpp"
#include "abcover/classifier.hpp"
#include "abcover/cover.hpp"
#include "abcover/fixtures.hpp"
#include "abcover/smoothness.hpp"

namespace abcover::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolName = "abcover";
inline constexpr const char* kToolVersion = "1.0.0";

struct Options {
  /// Wall-clock times make reports non-reproducible, so they are opt-in.
  bool include_timing = false;
  /// Include every stratum's reduction steps.
  bool trace = false;
};

Json cover_json(const CoverData& cover);
Json invariants_json(const Invariants& inv);
Json smoothness_json(const smoothness::SmoothnessVerdict& v, bool trace);
Json classification_json(const ClassificationReport& r, const Options& opts = {});
Json fixture_json(const FixtureCheck& c);
/// All applicable bounds for the tuple; inapplicable cases carry the reason.
Json bounds_json(const bounds::InvariantTuple& t);

/// Top-level document. Sections that are not given are omitted.
Json document(const Json& config, const std::vector<ClassificationReport>* degrees,
              const std::vector<FixtureCheck>* fixtures, const Options& opts = {});

/// degree,feasible,witnesses,smooth with smooth one of yes/no/unsupported/-.
std::string csv_summary(const std::vector<ClassificationReport>& reports);

}  // namespace abcover::report
