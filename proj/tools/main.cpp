// Command-line front end: compute constants, print theorem tables, emit and
// certify the extremal constructions, and run the named verification suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "harborth/checks.hpp"
#include "harborth/report.hpp"
#include "harborth/witness.hpp"

namespace {

using namespace harborth;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

WeightSet parse_weights(const std::string& text) {
    if (text == "classic") return WeightSet::classic();
    if (text == "pm") return WeightSet::plus_minus();
    std::vector<std::int64_t> ws;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            ws.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weights", "expected 'classic', 'pm' or an integer list");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return WeightSet(ws);
}

struct CommonOpts {
    std::string weights = "classic";
    std::string format = "text";
    std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
    double budget_seconds = SearchBudget{}.max_seconds;
    unsigned workers = 0;  // 0: take HARBORTH_WORKERS or 1
    unsigned split_depth = 3;
    bool orbit_prune = false;
    std::uint64_t seed = 42;

    SearchOptions search_options() const {
        SearchOptions o;
        o.budget.max_nodes = budget_nodes;
        o.budget.max_seconds = budget_seconds;
        o.workers = workers;
        if (o.workers == 0) {
            if (const char* env = std::getenv("HARBORTH_WORKERS"))
                o.workers = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
            if (o.workers == 0) o.workers = 1;
        }
        o.split_depth = split_depth;
        o.orbit_prune = orbit_prune;
        return o;
    }
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_weights = true) {
    if (with_weights)
        cmd->add_option("--weights", c.weights, "weight set: classic, pm, or integer list");
    cmd->add_option("--format", c.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--budget-nodes", c.budget_nodes, "search node budget");
    cmd->add_option("--budget-seconds", c.budget_seconds, "search time budget (0 = off)");
    cmd->add_option("--workers", c.workers, "worker threads (default HARBORTH_WORKERS or 1)");
    cmd->add_option("--split-depth", c.split_depth, "parallel DFS split depth");
    cmd->add_flag("--orbit-prune", c.orbit_prune,
                  "restrict the first search element to automorphism orbit representatives");
    cmd->add_option("--seed", c.seed, "seed for randomized checks");
}

int render_report(const ConstantReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << report_json(rep).dump(2) << "\n";
    else if (format == "csv")
        std::cout << report_csv_header() << "\n" << report_csv_row(rep) << "\n";
    else
        std::cout << report_text(rep);
    return rep.complete ? kExitOk : kExitBudget;
}

// ---- compute ----------------------------------------------------------------

int run_compute(const std::string& group_text, const std::string& constant,
                const std::string& cache_path, const CommonOpts& c) {
    GroupSpec g = parse_group(group_text);
    WeightSet w = parse_weights(c.weights);
    ConstantKind kind = constant == "olson" ? ConstantKind::olson : ConstantKind::harborth;
    SearchOptions opts = c.search_options();

    std::string cache_file = cache_path;
    if (cache_file.empty()) {
        if (const char* env = std::getenv("HARBORTH_CACHE")) cache_file = env;
    }
    if (!cache_file.empty()) {
        ResultCache cache(cache_file);
        if (auto hit = cache.lookup(g, w, kind, opts.orbit_prune))
            return render_report(*hit, c.format);
        ConstantReport rep = compute_constant(g, w, kind, opts);
        if (rep.complete) cache.store(rep);
        return render_report(rep, c.format);
    }
    return render_report(compute_constant(g, w, kind, opts), c.format);
}

// ---- table ------------------------------------------------------------------

int run_table(const std::string& family, std::uint64_t n_min, std::uint64_t n_max,
              const std::vector<std::string>& weight_texts, const CommonOpts& c) {
    std::vector<WeightSet> weight_sets;
    if (weight_texts.empty())
        weight_sets.push_back(parse_weights(c.weights));
    else
        for (const auto& t : weight_texts) weight_sets.push_back(parse_weights(t));

    std::vector<GroupSpec> groups;
    if (family == "cyclic") {
        for (std::uint64_t n = n_min; n <= n_max; ++n) groups.push_back(make_group({n}));
    } else if (family == "c2xc2n") {
        for (std::uint64_t n = n_min; n <= n_max; ++n) groups.push_back(make_group({2, 2 * n}));
    } else if (family == "elementary2") {
        for (std::uint64_t r = n_min; r <= n_max; ++r) {
            std::vector<std::uint64_t> f(r, 2);
            groups.push_back(make_group(f));
        }
    } else if (family == "all-orders-up-to") {
        for (std::uint64_t n = 1; n <= n_max; ++n)
            for (const auto& chain : abelian_group_types(n))
                groups.push_back(GroupSpec::from_invariant_factors(chain));
    } else {
        throw CLI::ValidationError("--family",
                                   "expected cyclic, c2xc2n, elementary2 or all-orders-up-to");
    }

    SearchOptions opts = c.search_options();
    bool any_mismatch = false, any_budget = false;
    Json rows = Json::array();
    std::ostringstream csv;
    csv << report_csv_header() << "\n";
    std::ostringstream text;

    for (const GroupSpec& g : groups) {
        for (const WeightSet& w : weight_sets) {
            ConstantReport rep = compute_constant(g, w, ConstantKind::harborth, opts);
            auto oracle = formula_oracle(g, w);
            if (!rep.complete) any_budget = true;
            if (rep.complete && oracle && rep.value != *oracle) any_mismatch = true;
            rows.push_back(report_json(rep));
            csv << report_csv_row(rep) << "\n";
            text << report_text(rep);
        }
    }

    if (c.format == "json")
        std::cout << rows.dump(2) << "\n";
    else if (c.format == "csv")
        std::cout << csv.str();
    else
        std::cout << text.str();
    if (any_mismatch) return kExitMismatch;
    if (any_budget) return kExitBudget;
    return kExitOk;
}

// ---- witness ----------------------------------------------------------------

int run_witness(const std::string& construction, std::uint32_t n, const std::string& h_group,
                const std::string& k_group, bool weights_given, const CommonOpts& c) {
    std::optional<ElementSet> s;
    WeightSet w = WeightSet::classic();
    if (construction == "cyclic-full") {
        s = full_cyclic_set(n);
        w = weights_given ? parse_weights(c.weights) : WeightSet::plus_minus();
    } else if (construction == "lb-w") {
        s = lower_bound_witness_pm(n);
        w = weights_given ? parse_weights(c.weights) : WeightSet::plus_minus();
    } else if (construction == "lb-c") {
        s = lower_bound_witness_classic(n);
        w = weights_given ? parse_weights(c.weights) : WeightSet::classic();
    } else if (construction == "compose") {
        if (h_group.empty() || k_group.empty())
            throw CLI::ValidationError("--construction",
                                       "compose requires --h-group and --k-group");
        w = parse_weights(c.weights);
        SearchOptions opts = c.search_options();
        GroupSpec h = parse_group(h_group), k = parse_group(k_group);
        ConstantReport oh = olson_constant(h, w, opts);
        ConstantReport gk = harborth_constant(k, w, opts);
        if (!oh.complete || !gk.complete) return kExitBudget;
        s = compose_blocking_witnesses(oh.witness, gk.witness, w);
    } else {
        throw CLI::ValidationError("--construction",
                                   "expected cyclic-full, lb-w, lb-c or compose");
    }

    const GroupSpec& g = s->group();
    std::uint32_t k = g.exponent();
    BlockingCheck check = verify_blocking(*s, w, k);

    Json j;
    j["construction"] = construction;
    j["group"] = g.to_string();
    j["weights"] = w.to_string();
    j["k"] = k;
    j["size"] = s->size();
    j["witness"] = element_set_json(*s);
    j["blocking"] = check.blocking;
    Json sum_coords = Json::array();
    for (std::uint32_t cc : sigma(*s).coords) sum_coords.push_back(cc);
    j["sum"] = sum_coords;

    if (c.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << construction << " over C(" << g.to_string() << "), " << s->size()
                  << " elements, weights {" << w.to_string() << "}\n  elements:";
        for (const GroupElement& e : s->elements()) {
            std::cout << " (";
            for (std::size_t i = 0; i < e.coords.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << e.coords[i];
            }
            std::cout << ")";
        }
        std::cout << "\n  blocking for k=" << k << ": " << (check.blocking ? "yes" : "no")
                  << "\n";
    }
    return check.blocking ? kExitOk : kExitMismatch;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& check, const std::string& group_text, std::uint64_t samples,
               std::uint32_t n, std::uint64_t order_max, const CommonOpts& c) {
    WeightSet w = parse_weights(c.weights);
    SearchOptions opts = c.search_options();
    CheckResult result;

    if (check == "lemma33") {
        if (group_text.empty()) throw CLI::ValidationError("--check", "lemma33 needs --group");
        result = check_pm_sum_identity(parse_group(group_text), samples, c.seed);
    } else if (check == "lemma32") {
        if (group_text.empty()) throw CLI::ValidationError("--check", "lemma32 needs --group");
        result = check_coverage_thresholds(parse_group(group_text), samples, c.seed);
    } else if (check == "lemma31") {
        result = check_direct_sum_bound(order_max, w, opts);
    } else if (check == "prop-nonzero") {
        result = check_even_cover_exhaustive(n, opts.budget);
    } else if (check == "classify-extremal") {
        result = check_extremal_classification(order_max, w, opts);
    } else if (check == "oracle-equivalence") {
        result = check_profile_against_naive(samples, c.seed);
    } else {
        throw CLI::ValidationError(
            "--check",
            "expected lemma31, lemma32, lemma33, prop-nonzero, classify-extremal or "
            "oracle-equivalence");
    }

    if (c.format == "json") {
        Json j;
        j["check"] = check;
        j["pass"] = result.pass;
        j["cases"] = result.cases;
        j["failures"] = result.failures;
        j["detail"] = result.detail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << check << ": " << (result.pass ? "pass" : "FAIL") << " (" << result.cases
                  << " cases, " << result.failures << " failures)\n";
        if (!result.detail.empty()) std::cout << "  " << result.detail << "\n";
    }
    return result.pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Harborth and Olson constants of finite abelian groups"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute one constant");
    std::string group_text, constant = "harborth", cache_path;
    CommonOpts c_compute;
    compute->add_option("--group", group_text, "comma-separated cyclic factors, e.g. 2,8")
        ->required();
    compute->add_option("--constant", constant, "harborth or olson")
        ->check(CLI::IsMember({"harborth", "olson"}));
    compute->add_option("--cache", cache_path, "result cache file (or HARBORTH_CACHE)");
    add_common(compute, c_compute);

    // table
    auto* table = app.add_subcommand("table", "computed vs formula table over a family");
    std::string family;
    std::uint64_t n_min = 1, n_max = 8;
    std::vector<std::string> table_weights;
    CommonOpts c_table;
    table->add_option("--family", family, "cyclic, c2xc2n, elementary2, all-orders-up-to")
        ->required();
    table->add_option("--n-min", n_min, "family parameter lower bound");
    table->add_option("--n-max", n_max, "family parameter upper bound");
    table->add_option("--weights", table_weights, "weight set(s); repeatable")
        ->take_all();
    add_common(table, c_table, /*with_weights=*/false);

    // witness
    auto* witness = app.add_subcommand("witness", "emit and certify a construction");
    std::string construction, h_group, k_group;
    std::uint32_t wn = 3;
    CommonOpts c_witness;
    witness->add_option("--construction", construction, "cyclic-full, lb-w, lb-c, compose")
        ->required();
    witness->add_option("--n", wn, "construction parameter n");
    witness->add_option("--h-group", h_group, "H for compose");
    witness->add_option("--k-group", k_group, "K for compose");
    add_common(witness, c_witness);

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string check, v_group;
    std::uint64_t samples = 1000, order_max = 16;
    std::uint32_t vn = 3;
    CommonOpts c_verify;
    verify->add_option("--check", check,
                       "lemma31, lemma32, lemma33, prop-nonzero, classify-extremal, "
                       "oracle-equivalence")
        ->required();
    verify->add_option("--group", v_group, "group for lemma32/lemma33");
    verify->add_option("--samples", samples, "random trials");
    verify->add_option("--n", vn, "parameter for prop-nonzero");
    verify->add_option("--order-max", order_max, "bound for lemma31/classify-extremal");
    add_common(verify, c_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(group_text, constant, cache_path, c_compute);
        if (table->parsed())
            return run_table(family, n_min, n_max, table_weights, c_table);
        if (witness->parsed())
            return run_witness(construction, wn, h_group, k_group,
                               witness->count("--weights") > 0, c_witness);
        if (verify->parsed()) return run_verify(check, v_group, samples, vn, order_max, c_verify);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (proven lower bound " << e.lower_bound << ")\n";
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
