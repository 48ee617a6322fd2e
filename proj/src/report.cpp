#include "harborth/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "harborth/witness.hpp"

namespace harborth {

Json element_set_json(const ElementSet& s) {
    Json arr = Json::array();
    for (const GroupElement& e : s.elements()) {
        Json coords = Json::array();
        for (std::uint32_t c : e.coords) coords.push_back(c);
        arr.push_back(std::move(coords));
    }
    return arr;
}

std::optional<std::vector<ElemRank>> element_ranks_from_json(const GroupSpec& g, const Json& j) {
    if (!j.is_array()) return std::nullopt;
    std::vector<ElemRank> out;
    for (const Json& je : j) {
        if (!je.is_array() || je.size() != g.rank()) return std::nullopt;
        std::vector<std::uint32_t> coords;
        for (const Json& jc : je) {
            if (!jc.is_number_unsigned()) return std::nullopt;
            coords.push_back(jc.get<std::uint32_t>());
        }
        try {
            out.push_back(g.rank_of(g.element(coords)));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return out;
}

namespace {

Json stats_json(const SearchStats& st, std::uint64_t lower_bound, bool complete) {
    Json j;
    j["nodes"] = st.nodes;
    j["seconds"] = st.seconds;
    j["workers"] = st.workers;
    j["strategy"] = st.strategy;
    j["orbit_prune"] = st.orbit_prune;
    j["budget_exceeded"] = st.budget_exceeded;
    if (!complete) j["lower_bound"] = lower_bound;
    return j;
}

std::optional<std::uint64_t> oracle_for(const ConstantReport& rep) {
    if (rep.kind != ConstantKind::harborth) return std::nullopt;
    return formula_oracle(rep.group, rep.weights);
}

}  // namespace

Json report_json(const ConstantReport& rep) {
    Json j;
    j["group"] = rep.group.to_string();
    j["weights"] = rep.weights.to_string();
    j["kind"] = to_string(rep.kind);
    if (rep.complete)
        j["value"] = rep.value;
    else
        j["value"] = nullptr;
    j["witness"] = element_set_json(rep.witness);
    auto oracle = oracle_for(rep);
    if (oracle)
        j["oracle"] = *oracle;
    else
        j["oracle"] = nullptr;
    if (oracle && rep.complete)
        j["match"] = rep.value == *oracle;
    else
        j["match"] = nullptr;
    j["stats"] = stats_json(rep.stats, rep.lower_bound, rep.complete);
    return j;
}

std::string report_text(const ConstantReport& rep) {
    std::ostringstream os;
    os << to_string(rep.kind) << " constant of C(" << rep.group.to_string() << ") with weights {"
       << rep.weights.to_string() << "}\n";
    if (rep.complete) {
        os << "  value: " << rep.value << "\n";
    } else {
        os << "  value: budget exceeded, >= " << rep.lower_bound << "\n";
    }
    os << "  witness (" << rep.witness.size() << " elements):";
    for (const GroupElement& e : rep.witness.elements()) {
        os << " (";
        for (std::size_t i = 0; i < e.coords.size(); ++i) {
            if (i) os << ',';
            os << e.coords[i];
        }
        os << ")";
    }
    os << "\n";
    auto oracle = oracle_for(rep);
    if (oracle) {
        os << "  formula: " << *oracle
           << (rep.complete ? (rep.value == *oracle ? "  [match]" : "  [MISMATCH]") : "") << "\n";
    }
    os << "  nodes: " << rep.stats.nodes << ", seconds: " << rep.stats.seconds << "\n";
    return os.str();
}

std::string report_csv_header() { return "group,weights,kind,value,oracle,match"; }

std::string report_csv_row(const ConstantReport& rep) {
    std::ostringstream os;
    os << '"' << rep.group.to_string() << "\",\"" << rep.weights.to_string() << "\","
       << to_string(rep.kind) << ',';
    if (rep.complete)
        os << rep.value;
    os << ',';
    auto oracle = oracle_for(rep);
    if (oracle) os << *oracle;
    os << ',';
    if (oracle && rep.complete) os << (rep.value == *oracle ? "true" : "false");
    return os.str();
}

// ---------------------------------------------------------------------------
// ResultCache
// ---------------------------------------------------------------------------

namespace {

std::string cache_key(const GroupSpec& g, const WeightSet& w, ConstantKind kind,
                      bool orbit_prune) {
    std::string k = g.to_string();
    k += '|';
    k += w.to_string();
    k += '|';
    k += to_string(kind);
    if (orbit_prune) k += "|orbit";
    return k;
}

}  // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)), data_(Json::object()) {
    std::ifstream in(path_);
    if (!in) return;
    try {
        Json parsed = Json::parse(in);
        if (parsed.is_object()) data_ = std::move(parsed);
    } catch (const Json::parse_error&) {
        // unreadable cache: start fresh
    }
}

std::optional<ConstantReport> ResultCache::lookup(const GroupSpec& g, const WeightSet& w,
                                                  ConstantKind kind, bool orbit_prune) const {
    auto it = data_.find(cache_key(g, w, kind, orbit_prune));
    if (it == data_.end() || !it->is_object()) return std::nullopt;
    const Json& rec = *it;
    if (!rec.contains("value") || !rec["value"].is_number_unsigned() || !rec.contains("witness"))
        return std::nullopt;
    std::uint64_t value = rec["value"].get<std::uint64_t>();
    auto ranks = element_ranks_from_json(g, rec["witness"]);
    if (!ranks || value == 0 || ranks->size() != value - 1) return std::nullopt;

    // Re-verify before serving: the witness must certify the stored value.
    std::optional<ElementSet> witness;
    try {
        witness.emplace(g, *ranks);
        if (kind == ConstantKind::harborth) {
            if (!verify_blocking(*witness, w, g.exponent()).blocking) return std::nullopt;
        } else {
            if (!is_blocking(*witness, w, ConstantKind::olson)) return std::nullopt;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }

    ConstantReport rep;
    rep.kind = kind;
    rep.group = g;
    rep.weights = w;
    rep.complete = true;
    rep.value = value;
    rep.lower_bound = value;
    rep.witness = std::move(*witness);
    rep.stats.strategy = "cache";
    rep.stats.orbit_prune = orbit_prune;
    return rep;
}

void ResultCache::store(const ConstantReport& rep) {
    if (!rep.complete) return;
    Json rec;
    rec["group"] = rep.group.to_string();
    rec["weights"] = rep.weights.to_string();
    rec["kind"] = to_string(rep.kind);
    rec["value"] = rep.value;
    rec["witness"] = element_set_json(rep.witness);
    rec["version"] = kToolVersion;
    rec["orbit_prune"] = rep.stats.orbit_prune;
    data_[cache_key(rep.group, rep.weights, rep.kind, rep.stats.orbit_prune)] = std::move(rec);

    std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << data_.dump(2) << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) std::remove(tmp.c_str());
}

}  // namespace harborth
