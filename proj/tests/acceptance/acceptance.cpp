// Acceptance suite: one PASS/FAIL line per criterion, with wall time against its budget.
// CLI-facing criteria drive the built binary; the rest call the library directly.

#include "linrel/canonical_forms.hpp"
#include "linrel/classify.hpp"
#include "linrel/relation_io.hpp"
#include "linrel/spider.hpp"
#include "linrel/szymczak.hpp"
#include "support/brute_force.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace linrel;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LINREL_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<EndoObject> all_endo(Prime p, std::size_t n) {
    std::vector<EndoObject> out;
    for (auto& g : enumerate_subspaces(p, 2 * n)) out.emplace_back(LinearRelation(n, n, g));
    return out;
}

LinearRelation rel1(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> gens) {
    std::vector<Vector> vs;
    for (const auto& g : gens) vs.emplace_back(Prime(p), g);
    return LinearRelation::from_generators(Prime(p), 1, 1, vs);
}

Outcome relation_census() {
    Outcome o;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto r = run_cli("enumerate --p " + std::to_string(p) + " --dim 1");
        auto count = r.code == 0 ? nlohmann::json::parse(r.out)["relations"].size() : 0;
        o.detail += "p=" + std::to_string(p) + ":" + std::to_string(count) + " ";
        o.ok = o.ok && count == p + 3;
    }
    return o;
}

Outcome dimension_one_classes() {
    Outcome o;
    auto r = run_cli("classify --p 3 --dim 1 --include-zero-object");
    if (r.code != 0) return {false, "exit code " + std::to_string(r.code)};
    auto doc = nlohmann::json::parse(r.out);
    const auto& classes = doc["classes"];
    o.detail = std::to_string(classes.size()) + " classes";
    if (classes.size() != 3) return {false, o.detail};

    std::vector<LinearRelation> degenerate{rel1(3, {{1, 0}, {0, 1}}), rel1(3, {}), rel1(3, {{1, 0}}),
                                           rel1(3, {{0, 1}})};
    std::vector<LinearRelation> scalars{rel1(3, {{1, 1}}), rel1(3, {{1, 2}})};
    for (const auto& c : classes) {
        std::vector<LinearRelation> members;
        bool has_zero = false;
        for (const auto& m : c["members"]) {
            if (m["index"].is_null()) has_zero = true;
            else members.push_back(relation_from_json(m["relation"]));
        }
        if (c["label"]["dim"] == 0) {
            bool all = has_zero && members.size() == 4;
            for (const auto& d : degenerate) all = all && std::find(members.begin(), members.end(), d) != members.end();
            o.ok = o.ok && all;
            o.detail += ", degenerate class of " + std::to_string(c["size"].get<int>());
        } else {
            o.ok = o.ok && !has_zero && members.size() == 1 &&
                   std::find(scalars.begin(), scalars.end(), members[0]) != scalars.end();
        }
    }
    return o;
}

Outcome normality_sweep() {
    std::size_t n = 0;
    for (const auto& obj : all_endo(Prime(2), 2)) {
        leray(obj);
        ++n;
    }
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 1000; ++i) {
        leray(EndoObject(random_relation(Prime(3), 3, 3, rng)));
        ++n;
    }
    return {true, std::to_string(n) + " relations"};
}

Outcome witness_equations() {
    Outcome o;
    std::size_t good = 0, total = 0;
    for (const auto& obj : all_endo(Prime(2), 2)) {
        for (const auto& w : {szym_witness_LE(obj), szym_witness_LM(obj)}) {
            ++total;
            good += check_witness(obj, w).all();
        }
    }
    o.ok = good == total && total == 134;
    o.detail = std::to_string(good) + "/" + std::to_string(total) + " witnesses";
    return o;
}

Outcome oracle_agreement() {
    std::size_t pairs = 0, disagreements = 0;
    for (std::uint32_t p : {3u, 2u}) {
        auto objs = all_endo(Prime(p), 1);
        for (const auto& a : objs)
            for (const auto& b : objs) {
                ++pairs;
                disagreements += oracle_szym_equiv(a, b) != szym_equiv(a, b);
            }
    }
    auto objs = all_endo(Prime(2), 2);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
    std::size_t equivalent = 0;
    for (int i = 0; i < 200; ++i) {
        const auto& a = objs[pick(rng)];
        const auto& b = objs[pick(rng)];
        const bool decided = szym_equiv(a, b);
        equivalent += decided;
        ++pairs;
        disagreements += oracle_szym_equiv(a, b) != decided;
    }
    return {disagreements == 0 && pairs == 261,
            std::to_string(pairs) + " pairs (" + std::to_string(equivalent) + " equivalent random pairs), " +
                std::to_string(disagreements) + " disagreements"};
}

Outcome bijection_uniqueness() {
    std::size_t pairs = 0, mismatches = 0;
    for (std::uint32_t pv : {2u, 3u}) {
        const Prime p(pv);
        auto group = brute::invertible_matrices(p, 2);
        for (const auto& a : group)
            for (const auto& b : group) {
                ++pairs;
                const bool sim = similar(a, b);
                const bool szym = szym_equiv(EndoObject(LinearRelation::from_matrix(a)),
                                             EndoObject(LinearRelation::from_matrix(b)));
                mismatches += (sim != szym) + (sim != brute::conjugate_by_search(a, b, group));
            }
    }
    return {mismatches == 0, std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome order_commutation() {
    std::size_t good = 0, total = 0;
    for (const auto& obj : all_endo(Prime(2), 2)) {
        auto a = leray(obj), b = leray_reversed(obj);
        ++total;
        good += a.dim == b.dim && similar(a.matrix, b.matrix);
    }
    return {good == total && total == 67, std::to_string(good) + "/" + std::to_string(total) + " similar"};
}

Outcome spider_truncation() {
    Outcome o;
    auto r = run_cli("spider --orbits 4 --max-power 3");
    if (r.code != 0) return {false, "exit code " + std::to_string(r.code)};
    auto doc = nlohmann::json::parse(r.out);
    std::size_t kernel_checks = 0;
    for (const auto& c : doc["checks"]) {
        if (c["name"].get<std::string>().find("kernel_k=") == std::string::npos) continue;
        ++kernel_checks;
        o.ok = o.ok && c["passed"].get<bool>();
    }
    o.ok = o.ok && kernel_checks == 6;
    std::ostringstream dims;
    for (std::size_t n = 1; n <= 5; ++n) {
        auto form = leray(build_spider(n).object());
        dims << (n > 1 ? "," : "") << form.dim;
    }
    o.detail = std::to_string(kernel_checks) + " kernel checks, leray dims N=1..5: " + dims.str();
    return o;
}

Outcome determinism() {
    Outcome o;
    std::size_t runs = 0;
    for (const std::string fmt : {"json", "csv", "dot"}) {
        std::string reference;
        for (int workers : {1, 2, 4, 8, 8, 3}) {
            auto r = run_cli("classify --p 3 --dim 2 --include-zero-object --format " + fmt + " --parallel " +
                             std::to_string(workers));
            ++runs;
            if (r.code != 0 || r.out.empty()) return {false, "classify failed"};
            if (reference.empty()) reference = r.out;
            o.ok = o.ok && r.out == reference;
        }
    }
    o.detail = std::to_string(runs) + " runs byte-identical per format";
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "relation census", 1, relation_census},
        {2, "dimension-1 class partition", 1, dimension_one_classes},
        {3, "Leray normality sweep", 30, normality_sweep},
        {4, "witness equations", 60, witness_equations},
        {5, "oracle agreement", 300, oracle_agreement},
        {6, "uniqueness on bijections", 120, bijection_uniqueness},
        {7, "LE/LM order commutation", 30, order_commutation},
        {8, "spider truncation", 30, spider_truncation},
        {9, "classify determinism", 120, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("[%s] criterion %d: %s (%.3f s, budget %.0f s%s) %s\n", pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), secs, c.budget_seconds, in_time ? "" : ", over budget", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
