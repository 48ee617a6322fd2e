#pragma once

// Rendering of computed constants to JSON/CSV/text and the persistent result
// cache. Output is byte-stable across runs and worker counts for identical
// configuration; run-dependent numbers live under the "stats" key only.

#include <optional>
#include <string>

#include "json.hpp"

#include "harborth/search.hpp"

namespace harborth {

inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

// {group, weights, kind, value, witness, oracle, match, stats}
Json report_json(const ConstantReport& rep);
std::string report_text(const ConstantReport& rep);
std::string report_csv_header();
std::string report_csv_row(const ConstantReport& rep);

Json element_set_json(const ElementSet& s);
std::optional<std::vector<ElemRank>> element_ranks_from_json(const GroupSpec& g, const Json& j);

// Single-file JSON cache, loaded whole and rewritten atomically via rename.
// Hits are re-verified: the stored witness must still certify value - 1.
class ResultCache {
public:
    explicit ResultCache(std::string path);

    std::optional<ConstantReport> lookup(const GroupSpec& g, const WeightSet& w,
                                         ConstantKind kind, bool orbit_prune) const;
    void store(const ConstantReport& rep);

private:
    std::string path_;
    Json data_;
};

}  // namespace harborth
