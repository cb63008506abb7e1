// Command-line front end: enumeration, classification, Leray forms, equivalence checks
// and the spider truncation report.

#include "linrel/classify.hpp"
#include "linrel/errors.hpp"
#include "linrel/relation_io.hpp"
#include "linrel/spider.hpp"
#include "linrel/szymczak.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <random>

namespace {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // not equivalent / disagreement / failed check
    kUsage = 2,
    kMalformedInput = 3,
    kGuard = 4,
    kIo = 5,
    kInternal = 6,
};

using namespace linrel;

int run_enumerate(std::uint32_t p, std::size_t dim, const std::string& format, const std::string& out) {
    const Prime prime(p);
    write_text(out, format == "csv" ? enumeration_csv(prime, dim) : enumeration_json(prime, dim));
    return kOk;
}

int run_classify(std::uint32_t p, std::size_t dim, const std::string& format, const std::string& out,
                 unsigned workers, bool include_zero, const std::string& cache_path) {
    const Prime prime(p);
    LabelCache cache;
    ClassifyOptions opts{workers, include_zero, nullptr};
    if (!cache_path.empty()) {
        cache = LabelCache::load(cache_path);
        opts.cache = &cache;
    }
    const auto table = classify(prime, dim, opts);
    std::string text = format == "csv" ? export_csv(table) : format == "dot" ? export_dot(table) : export_json(table);
    write_text(out, text);
    if (!cache_path.empty()) cache.save(cache_path);
    std::cerr << "classified " << table.relation_count << " relations into " << table.classes.size()
              << " classes in " << table.seconds << " s\n";
    return kOk;
}

int run_leray(const std::string& input, const std::string& out) {
    const auto alpha = load_relation(input);
    const auto form = leray(EndoObject(alpha));
    write_text(out, leray_form_to_json(form).dump(2) + "\n");
    return kOk;
}

int run_equiv(const std::string& a_path, const std::string& b_path) {
    const EndoObject a(load_relation(a_path));
    const EndoObject b(load_relation(b_path));
    if (a.prime() != b.prime()) throw FormatError("relations live over different fields");
    const auto la = szym_label(a), lb = szym_label(b);
    const bool eq = la == lb;
    std::cout << "A: " << label_to_json(la).dump() << "\n"
              << "B: " << label_to_json(lb).dump() << "\n"
              << "equivalent: " << (eq ? "true" : "false") << "\n";
    return eq ? kOk : kNegative;
}

int run_oracle_check(std::uint32_t p, std::size_t dim, std::size_t samples, std::uint64_t seed) {
    const Prime prime(p);
    const auto rels = enumerate_relations(prime, dim);
    std::vector<EndoObject> objs;
    std::vector<SzymClassLabel> labels;
    for (const auto& r : rels) {
        objs.emplace_back(r);
        labels.push_back(szym_label(objs.back()));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (samples == 0) {
        for (std::size_t i = 0; i < objs.size(); ++i)
            for (std::size_t j = 0; j < objs.size(); ++j) pairs.emplace_back(i, j);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
        for (std::size_t s = 0; s < samples; ++s) pairs.emplace_back(pick(rng), pick(rng));
    }
    std::size_t disagreements = 0, equivalent = 0;
    nlohmann::json bad = nlohmann::json::array();
    for (auto [i, j] : pairs) {
        const bool decided = labels[i] == labels[j];
        const bool searched = oracle_szym_equiv(objs[i], objs[j]);
        equivalent += decided;
        if (decided != searched) {
            ++disagreements;
            bad.push_back({{"a", relation_to_json(rels[i])}, {"b", relation_to_json(rels[j])},
                           {"decider", decided}, {"oracle", searched}});
        }
    }
    nlohmann::json report = {{"p", p},          {"dim", dim},
                             {"pairs", pairs.size()}, {"equivalent_pairs", equivalent},
                             {"disagreements", disagreements}, {"mismatches", bad}};
    std::cout << report.dump(2) << "\n";
    return disagreements == 0 ? kOk : kNegative;
}

int run_spider(std::size_t orbits, std::optional<std::size_t> max_power) {
    const auto report = verify_spider(orbits, max_power.value_or(orbits));
    std::cout << report.to_json().dump(2) << "\n";
    return report.all_passed() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear relations over GF(p): Leray forms and Szymczak classes"};
    app.require_subcommand(1);

    std::uint32_t p = 0;
    std::size_t dim = 0;
    std::string format, out, input, cache_path;
    unsigned workers = 1;
    bool include_zero = false;

    auto* enumerate = app.add_subcommand("enumerate", "List every endorelation on GF(p)^dim");
    enumerate->add_option("--p", p, "prime modulus")->required();
    enumerate->add_option("--dim", dim, "carrier dimension")->required();
    enumerate->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}))->default_str("json");
    enumerate->add_option("--out", out, "output path (default stdout)");

    auto* classify_cmd = app.add_subcommand("classify", "Group endorelations by Szymczak class");
    classify_cmd->add_option("--p", p, "prime modulus")->required();
    classify_cmd->add_option("--dim", dim, "carrier dimension")->required();
    classify_cmd->add_option("--format", format, "json|csv|dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}))
        ->default_str("json");
    classify_cmd->add_option("--out", out, "output path (default stdout)");
    classify_cmd->add_option("--parallel", workers, "worker threads")->check(CLI::Range(1u, 256u));
    classify_cmd->add_flag("--include-zero-object", include_zero, "add (0, id_0) to the table");
    classify_cmd->add_option("--cache", cache_path, "label cache file, read and updated");

    auto* leray_cmd = app.add_subcommand("leray", "Leray form of a relation document");
    leray_cmd->add_option("--input", input, "relation JSON")->required();
    leray_cmd->add_option("--out", out, "output path (default stdout)");

    std::string a_path, b_path;
    auto* equiv = app.add_subcommand("equiv", "Decide Szymczak equivalence; exit 0 iff equivalent");
    equiv->add_option("A", a_path, "first relation JSON")->required();
    equiv->add_option("B", b_path, "second relation JSON")->required();

    std::size_t samples = 0;
    std::uint64_t seed = 0;
    auto* oracle = app.add_subcommand("oracle-check", "Compare brute-force search with the label decider");
    oracle->add_option("--p", p, "prime modulus")->required();
    oracle->add_option("--dim", dim, "carrier dimension")->required();
    oracle->add_option("--samples", samples, "random pairs to test (default: all pairs)");
    oracle->add_option("--seed", seed, "RNG seed for --samples");

    std::size_t orbits = 0;
    std::optional<std::size_t> max_power;
    auto* spider = app.add_subcommand("spider", "Verify the truncated spider relation");
    spider->add_option("--orbits", orbits, "number of orbits N")->required();
    spider->add_option("--max-power", max_power, "largest power k to check (default N)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (format.empty()) format = "json";
        if (*enumerate) return run_enumerate(p, dim, format, out);
        if (*classify_cmd) return run_classify(p, dim, format, out, workers, include_zero, cache_path);
        if (*leray_cmd) return run_leray(input, out);
        if (*equiv) return run_equiv(a_path, b_path);
        if (*oracle) return run_oracle_check(p, dim, samples, seed);
        if (*spider) return run_spider(orbits, max_power);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
    return kUsage;
}
