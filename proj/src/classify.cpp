#include "linrel/classify.hpp"

#include "linrel/errors.hpp"
#include "linrel/relation_io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace linrel {

SubspaceEnumeration relation_stream(Prime p, std::size_t n) { return {p, 2 * n}; }

std::vector<LinearRelation> enumerate_relations(Prime p, std::size_t n) {
    std::vector<LinearRelation> out;
    relation_stream(p, n).for_each([&](std::uint64_t, const Subspace& g) { out.emplace_back(n, n, g); });
    return out;
}

LabelCache LabelCache::load(const std::filesystem::path& path) {
    LabelCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    try {
        auto doc = nlohmann::json::parse(in);
        for (const auto& [k, v] : doc.items()) cache.entries_.emplace(k, label_from_json(v));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    return cache;
}

void LabelCache::save(const std::filesystem::path& path) const {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [k, v] : entries_) doc[k] = label_to_json(v);
    write_text(path, doc.dump(1) + "\n");
}

std::string LabelCache::key(const LinearRelation& r) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : relation_to_json(r).dump()) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<SzymClassLabel> LabelCache::find(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void LabelCache::insert(const std::string& key, const SzymClassLabel& label) { entries_.insert_or_assign(key, label); }

ClassTable classify(Prime p, std::size_t n, const ClassifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto stream = relation_stream(p, n);
    const std::size_t total = stream.size();
    std::vector<std::optional<SzymClassLabel>> labels(total);
    std::vector<std::optional<std::string>> keys(total);

    const unsigned workers = std::max(1u, options.workers);
    auto work = [&](unsigned w) {
        for (std::size_t pat = w; pat < stream.patterns().size(); pat += workers)
            stream.for_each_in_pattern(pat, [&](std::uint64_t idx, const Subspace& g) {
                LinearRelation r(n, n, g);
                if (options.cache) {
                    auto key = LabelCache::key(r);
                    if (auto hit = options.cache->find(key)) {
                        labels[idx] = *hit;
                        return;
                    }
                    keys[idx] = std::move(key);
                }
                labels[idx] = szym_label(EndoObject(r));
            });
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    ClassTable table;
    table.p = p.value();
    table.dim = n;
    table.relation_count = total;
    table.include_zero_object = options.include_zero_object;
    stream.for_each([&](std::uint64_t idx, const Subspace& g) {
        if (options.cache && keys[idx]) options.cache->insert(*keys[idx], *labels[idx]);
        table.classes[*labels[idx]].push_back({idx, LinearRelation(n, n, g)});
    });
    if (options.include_zero_object) {
        auto zero = EndoObject::zero_object(p);
        table.classes[szym_label(zero)].push_back({std::nullopt, zero.alpha()});
    }
    table.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return table;
}

namespace {

std::string member_text(const ClassMember& m) {
    if (!m.index) return "id_0";
    return basis_to_json(m.relation.graph()).dump();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_csv(const ClassTable& table) {
    std::ostringstream os;
    os << "label_dim,invariant_factors,class_size,members\n";
    for (const auto& [label, members] : table.classes) {
        std::string list;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) list += ';';
            list += member_text(members[i]);
        }
        os << label.dim << ',' << csv_quote(label_to_json(label).at("invariant_factors").dump()) << ','
           << members.size() << ',' << csv_quote(list) << '\n';
    }
    return os.str();
}

std::string export_dot(const ClassTable& table) {
    std::ostringstream os;
    os << "digraph szymczak_classes {\n";
    os << "  label=\"Szymczak classes of endorelations on GF(" << table.p << ")^" << table.dim << "\";\n";
    os << "  node [shape=box];\n";
    std::size_t cluster = 0;
    for (const auto& [label, members] : table.classes) {
        os << "  subgraph cluster_" << cluster++ << " {\n";
        os << "    label=\"" << dot_escape(label_key(label)) << "\";\n";
        for (const auto& m : members) {
            os << "    " << (m.index ? "r" + std::to_string(*m.index) : std::string("zero_object")) << " [label=\""
               << dot_escape(member_text(m)) << "\"];\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_json(const ClassTable& table) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [label, members] : table.classes) {
        nlohmann::json ms = nlohmann::json::array();
        for (const auto& m : members) {
            nlohmann::json entry = {{"relation", relation_to_json(m.relation)}};
            entry["index"] = m.index ? nlohmann::json(*m.index) : nlohmann::json(nullptr);
            ms.push_back(std::move(entry));
        }
        classes.push_back({{"label", label_to_json(label)}, {"size", members.size()}, {"members", std::move(ms)}});
    }
    nlohmann::json doc = {{"p", table.p},
                          {"dim", table.dim},
                          {"relation_count", table.relation_count},
                          {"include_zero_object", table.include_zero_object},
                          {"class_count", table.classes.size()},
                          {"classes", std::move(classes)}};
    return doc.dump(2) + "\n";
}

std::string enumeration_json(Prime p, std::size_t n) {
    nlohmann::json rels = nlohmann::json::array();
    relation_stream(p, n).for_each(
        [&](std::uint64_t, const Subspace& g) { rels.push_back(relation_to_json(LinearRelation(n, n, g))); });
    nlohmann::json doc = {{"p", p.value()}, {"dim", n}, {"count", rels.size()}, {"relations", std::move(rels)}};
    return doc.dump(2) + "\n";
}

std::string enumeration_csv(Prime p, std::size_t n) {
    std::ostringstream os;
    os << "index,dim_dom,dim_cod,generators\n";
    relation_stream(p, n).for_each([&](std::uint64_t idx, const Subspace& g) {
        os << idx << ',' << n << ',' << n << ',' << csv_quote(basis_to_json(g).dump()) << '\n';
    });
    return os.str();
}

}  // namespace linrel
