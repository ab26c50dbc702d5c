#pragma once

#include <string>

#include "json.hpp"
#include "sumset/admissibility.hpp"
#include "sumset/constructions.hpp"
#include "sumset/group.hpp"
#include "sumset/regularity.hpp"
#include "sumset/search.hpp"

namespace sumset::jsonio {

// All serializers produce objects whose keys are sorted (the library's
// default map ordering), carry no timestamps, and depend only on their
// inputs, so identical inputs dump to byte-identical text.  Timing lives
// outside these objects entirely.

nlohmann::json group_json(const FiniteGroup& G);
nlohmann::json params_json(const regularity::Params& p);
nlohmann::json classification_json(const regularity::Classification& c,
                                   const FiniteGroup& G);

// The universal proof object: the set (as labels), both representation
// count vectors recomputed from scratch, the classification flags, and
// the parameters.
nlohmann::json certificate_json(const Subset& S,
                                const regularity::Classification& c);
nlohmann::json certificate_json(const Subset& S);  // classifies internally

nlohmann::json verdict_json(const admissibility::AdmissibilityVerdict& v);
nlohmann::json construction_json(const constructions::ConstructionResult& r);

// With include_results the full certificate list is embedded; without it
// the report carries the counts only (the line-per-set output format
// streams certificates separately).
nlohmann::json search_report_json(const search::SearchReport& rep,
                                  bool include_results);
nlohmann::json suite_json(const search::PropertyReport& rep);

// Compact single-line dump used for files and line-oriented output.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace sumset::jsonio
