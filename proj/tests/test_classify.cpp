#include "doctest.h"

#include "linrel/classify.hpp"
#include "linrel/errors.hpp"
#include "support/fixtures.hpp"

#include <filesystem>
#include <fstream>

using namespace linrel;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "linrel_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::filesystem::remove(path);
    return path;
}

}  // namespace

TEST_CASE("relation counts: p + 3 at dimension 1, Gaussian sums above") {
    for (std::uint32_t pv : {2u, 3u, 5u, 7u}) CHECK(enumerate_relations(Prime(pv), 1).size() == pv + 3);
    CHECK(enumerate_relations(Prime(2), 2).size() == 67);
    CHECK(enumerate_relations(Prime(2), 0).size() == 1);
    CHECK(relation_stream(Prime(3), 2).size() == count_subspaces(3, 4));
    for (const auto& r : enumerate_relations(Prime(3), 1)) CHECK(r.is_endo());
}

TEST_CASE("dimension 1 over GF(3) with the zero object") {
    ClassifyOptions opt;
    opt.include_zero_object = true;
    auto table = classify(Prime(3), 1, opt);
    CHECK(table.relation_count == 6);
    REQUIRE(table.classes.size() == 3);
    const auto& degenerate = table.classes.begin()->second;
    CHECK(table.classes.begin()->first.dim == 0);
    REQUIRE(degenerate.size() == 5);
    std::vector<LinearRelation> expected{fixtures::top(3), fixtures::bottom(3), fixtures::scale(3, 0),
                                         fixtures::zero_inverse(3)};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& m : degenerate) found = found || (m.index && m.relation == e);
        CHECK(found);
    }
    CHECK_FALSE(degenerate.back().index.has_value());
    CHECK(degenerate.back().relation.dim_dom() == 0);
    for (auto it = std::next(table.classes.begin()); it != table.classes.end(); ++it) {
        REQUIRE(it->second.size() == 1);
        auto r = it->second.front().relation;
        CHECK((r == fixtures::scale(3, 1) || r == fixtures::scale(3, 2)));
    }
}

TEST_CASE("class structure at dimension 1 for small primes") {
    for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
        auto table = classify(Prime(pv), 1);
        CHECK(table.classes.size() == pv);  // degenerate class plus p - 1 scalars
        std::size_t total = 0;
        for (const auto& [label, members] : table.classes) {
            total += members.size();
            CHECK(members.size() == (label.dim == 0 ? 4u : 1u));
        }
        CHECK(total == pv + 3);
    }
}

TEST_CASE("GF(2)^2 classes: degenerate, x+1, and the three conjugacy classes of GL2(2)") {
    auto table = classify(Prime(2), 2);
    CHECK(table.classes.size() == 5);
    std::size_t total = 0;
    for (const auto& [label, members] : table.classes) total += members.size();
    CHECK(total == 67);
}

TEST_CASE("output is independent of the worker count") {
    ClassifyOptions one, many;
    many.workers = 7;
    one.include_zero_object = many.include_zero_object = true;
    for (std::uint32_t pv : {2u, 3u}) {
        auto a = classify(Prime(pv), 2, one), b = classify(Prime(pv), 2, many);
        CHECK(export_json(a) == export_json(b));
        CHECK(export_csv(a) == export_csv(b));
        CHECK(export_dot(a) == export_dot(b));
    }
}

TEST_CASE("export formats") {
    ClassifyOptions opt;
    opt.include_zero_object = true;
    auto table = classify(Prime(3), 1, opt);
    auto csv = export_csv(table);
    CHECK(csv.rfind("label_dim,invariant_factors,class_size,members\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.find("id_0") != std::string::npos);
    auto dot = export_dot(table);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("subgraph cluster_2") != std::string::npos);
    CHECK(dot.find("zero_object") != std::string::npos);
    auto doc = nlohmann::json::parse(export_json(table));
    CHECK(doc["class_count"] == 3);
    CHECK(doc["relation_count"] == 6);
    CHECK(doc["classes"][0]["size"] == 5);
    CHECK(doc["classes"][0]["members"][4]["index"].is_null());

    auto listing = nlohmann::json::parse(enumeration_json(Prime(2), 1));
    CHECK(listing["relations"].size() == 5);
    auto ecsv = enumeration_csv(Prime(2), 1);
    CHECK(ecsv.rfind("index,dim_dom,dim_cod,generators\n", 0) == 0);
    CHECK(std::count(ecsv.begin(), ecsv.end(), '\n') == 6);
}

TEST_CASE("label cache round trip and reuse") {
    auto path = temp_file("cache.json");
    auto empty = LabelCache::load(path);
    CHECK(empty.size() == 0);
    ClassifyOptions opt;
    opt.cache = &empty;
    auto first = classify(Prime(2), 2, opt);
    CHECK(empty.size() == 67);
    empty.save(path);
    auto loaded = LabelCache::load(path);
    CHECK(loaded.size() == 67);
    opt.cache = &loaded;
    auto second = classify(Prime(2), 2, opt);
    CHECK(export_json(first) == export_json(second));
    CHECK_FALSE(loaded.find(LabelCache::key(fixtures::scale(2, 1))).has_value());
    auto id2 = LinearRelation::identity(Prime(2), 2);
    auto hit = loaded.find(LabelCache::key(id2));
    REQUIRE(hit.has_value());
    CHECK(*hit == szym_label(EndoObject(id2)));

    std::ofstream(path) << "{not json";
    CHECK_THROWS_AS(LabelCache::load(path), FormatError);
}
