#pragma once

#include "linrel/szymczak.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace linrel {

/// All endorelations on GF(p)^n in stream order (the subspaces of GF(p)^{2n}).
/// Same guard as SubspaceEnumeration on GF(p)^{2n}.
SubspaceEnumeration relation_stream(Prime p, std::size_t n);
std::vector<LinearRelation> enumerate_relations(Prime p, std::size_t n);

/// Persistent map from relation-document hash to class label.
class LabelCache {
public:
    LabelCache() = default;
    /// Missing file yields an empty cache; malformed content throws FormatError.
    static LabelCache load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    /// FNV-1a 64 of the canonical relation document, as 16 hex digits.
    static std::string key(const LinearRelation& r);

    [[nodiscard]] std::optional<SzymClassLabel> find(const std::string& key) const;
    void insert(const std::string& key, const SzymClassLabel& label);
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<std::string, SzymClassLabel> entries_;
};

struct ClassMember {
    std::optional<std::uint64_t> index;  ///< stream index; empty for the zero object (0, id_0)
    LinearRelation relation;
};

struct ClassTable {
    std::uint32_t p = 0;
    std::size_t dim = 0;
    std::uint64_t relation_count = 0;
    bool include_zero_object = false;
    std::map<SzymClassLabel, std::vector<ClassMember>> classes;  ///< members in stream order
    double seconds = 0;  ///< wall time; never part of exported output
};

struct ClassifyOptions {
    unsigned workers = 1;
    bool include_zero_object = false;
    LabelCache* cache = nullptr;
};

/// Labels every endorelation on GF(p)^n and groups by label. Output is independent of the worker count.
ClassTable classify(Prime p, std::size_t n, const ClassifyOptions& options = {});

std::string export_csv(const ClassTable& table);
std::string export_dot(const ClassTable& table);
std::string export_json(const ClassTable& table);

/// Enumeration listing, one relation document per entry.
std::string enumeration_json(Prime p, std::size_t n);
std::string enumeration_csv(Prime p, std::size_t n);

}  // namespace linrel
