#include "linrel/relation_io.hpp"

#include "linrel/errors.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace linrel {

nlohmann::json basis_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

nlohmann::json matrix_to_json(const Matrix& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        rows.push_back(std::vector<Residue>(row.begin(), row.end()));
    }
    return rows;
}

nlohmann::json relation_to_json(const LinearRelation& phi) {
    return {{"p", phi.prime().value()},
            {"dim_dom", phi.dim_dom()},
            {"dim_cod", phi.dim_cod()},
            {"generators", basis_to_json(phi.graph())}};
}

namespace {

std::uint64_t require_uint(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw FormatError(std::string("field \"") + key + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

LinearRelation relation_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw FormatError("relation document must be a JSON object");
    auto pv = require_uint(doc, "p");
    if (pv > Prime::kMax || !is_prime(pv)) throw FormatError("p = " + std::to_string(pv) + " is not a supported prime");
    const Prime p(static_cast<std::uint32_t>(pv));
    const auto dom = require_uint(doc, "dim_dom");
    const auto cod = require_uint(doc, "dim_cod");
    if (dom + cod > 4096) throw FormatError("relation dimensions are unreasonably large");
    if (!doc.contains("generators") || !doc.at("generators").is_array())
        throw FormatError("field \"generators\" must be an array of vectors");
    const std::size_t n = dom + cod;
    std::vector<Vector> gens;
    for (const auto& g : doc.at("generators")) {
        if (!g.is_array() || g.size() != n)
            throw FormatError("each generator must be an integer vector of length " + std::to_string(n));
        std::vector<Residue> coords;
        for (const auto& x : g) {
            if (!x.is_number_integer()) throw FormatError("generator entries must be integers");
            auto v = x.get<std::int64_t>();
            if (v < 0 || v >= static_cast<std::int64_t>(pv))
                throw FormatError("generator entry " + std::to_string(v) + " outside [0, p)");
            coords.push_back(static_cast<Residue>(v));
        }
        gens.emplace_back(p, std::move(coords));
    }
    return LinearRelation::from_generators(p, dom, cod, gens);
}

LinearRelation load_relation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    try {
        return relation_from_json(doc);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace linrel
