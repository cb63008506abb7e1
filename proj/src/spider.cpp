#include "linrel/spider.hpp"

#include "linrel/errors.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace linrel {

namespace {

const Prime kTwo{2};

std::size_t coordinate_of(std::size_t orbits, SpiderIndex idx) {
    const int k = static_cast<int>(idx.orbit);
    if (idx.orbit < 1 || idx.orbit > orbits || idx.position < -k || idx.position > k)
        throw std::out_of_range("spider index (" + std::to_string(idx.orbit) + ", " + std::to_string(idx.position) +
                                ") out of range");
    if (idx.position == 0) return 0;
    // orbits 1..k-1 occupy 2j coordinates each
    std::size_t base = 1 + (idx.orbit - 1) * idx.orbit;
    return base + static_cast<std::size_t>(idx.position < 0 ? idx.position + k : idx.position + k - 1);
}

}  // namespace

std::size_t TruncatedSpider::coordinate(SpiderIndex idx) const { return coordinate_of(orbits_, idx); }

Vector TruncatedSpider::node(SpiderIndex idx) const { return Vector::unit(kTwo, dim(), coordinate(idx)); }

TruncatedSpider build_spider(std::size_t orbits) {
    if (orbits < 1 || orbits > 8) throw GuardExceeded("spider orbit count must be in [1, 8]");
    const std::size_t n = orbits * (orbits + 1) + 1;
    Matrix arcs(kTwo, 0, 2 * n);
    std::vector<Residue> row(2 * n);
    for (std::size_t k = 1; k <= orbits; ++k) {
        const int ki = static_cast<int>(k);
        for (int s = -ki; s < ki; ++s) {
            std::fill(row.begin(), row.end(), 0);
            row[coordinate_of(orbits, {k, s})] = 1;
            row[n + coordinate_of(orbits, {k, s + 1})] = 1;
            arcs.append_row(row);
        }
    }
    return {orbits, EndoObject(LinearRelation(n, n, Subspace::row_space(arcs)))};
}

Subspace expected_power_kernel(std::size_t orbits, std::size_t k, bool backward) {
    if (k < 1 || k > orbits) throw std::out_of_range("power k must satisfy 1 <= k <= N");
    const std::size_t n = orbits * (orbits + 1) + 1;
    std::vector<Vector> gens;
    for (std::size_t i = 1; i <= k; ++i) {
        const int pos = backward ? -static_cast<int>(i) : static_cast<int>(i);
        for (std::size_t s = i; s <= orbits; ++s)
            for (std::size_t t = s + 1; t <= orbits; ++t) {
                Vector v(kTwo, n);
                v[coordinate_of(orbits, {s, pos})] = 1;
                v[coordinate_of(orbits, {t, pos})] = 1;
                gens.push_back(std::move(v));
            }
    }
    return span(kTwo, gens, n);
}

bool SpiderReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

nlohmann::json SpiderReport::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks)
        cs.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"expected_dim", c.expected_dim},
                      {"computed_dim", c.computed_dim},
                      {"detail", c.detail}});
    return {{"orbits", orbits},
            {"max_power", max_power},
            {"dimension", dimension},
            {"all_passed", all_passed()},
            {"checks", std::move(cs)}};
}

namespace {

/// alpha^k(x) = y + alpha^k(0) for every sampled x with an image, and alpha^k(span{x}) = alpha^k(0) otherwise.
SpiderCheck coset_check(const LinearRelation& ak, std::size_t k, const std::vector<Vector>& samples) {
    SpiderCheck c{"coset_law_k=" + std::to_string(k), true, 0, 0, ""};
    const Subspace fiber0 = indeterminacy(ak);
    c.expected_dim = c.computed_dim = fiber0.dim();
    std::size_t with_image = 0;
    for (const auto& x : samples) {
        const Vector xs[] = {x};
        const Subspace line = span(kTwo, xs, x.size());
        auto y = find_image(ak, x);
        if (!y) {
            c.passed = c.passed && image(ak, line) == fiber0;
            continue;
        }
        ++with_image;
        // every element of y + alpha^k(0) is an image of x, and nothing else in the span is
        std::vector<Vector> gens(1, *y);
        for (std::size_t r = 0; r < fiber0.dim(); ++r) gens.push_back(fiber0.basis().row_vector(r));
        c.passed = c.passed && image(ak, line) == span(kTwo, gens, y->size());
        if (fiber0.dim() <= 12) {
            for (std::uint64_t mask = 0; mask < (1ull << fiber0.dim()); ++mask) {
                Vector z = *y;
                for (std::size_t r = 0; r < fiber0.dim(); ++r)
                    if (mask >> r & 1u) z = z + fiber0.basis().row_vector(r);
                c.passed = c.passed && ak.relates(x, z);
            }
        }
    }
    c.detail = std::to_string(samples.size()) + " samples, " + std::to_string(with_image) + " with an image";
    return c;
}

}  // namespace

SpiderReport verify_spider(std::size_t orbits, std::size_t max_power) {
    const auto spider = build_spider(orbits);
    if (max_power > orbits) throw std::out_of_range("max power must not exceed the orbit count");
    const auto& obj = spider.object();
    const std::size_t n = spider.dim();

    SpiderReport report;
    report.orbits = orbits;
    report.max_power = max_power;
    report.dimension = n;

    std::vector<Vector> samples;
    for (std::size_t j = 0; j < n; ++j) samples.push_back(Vector::unit(kTwo, n, j));
    std::mt19937_64 rng(0x5eed'0000 + orbits);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 16; ++i) {
        Vector v(kTwo, n);
        for (std::size_t j = 0; j < n; ++j) v[j] = coin(rng) ? 1 : 0;
        samples.push_back(std::move(v));
    }

    for (std::size_t k = 1; k <= max_power; ++k) {
        for (bool backward : {false, true}) {
            const auto ak = power(obj.alpha(), backward ? -static_cast<std::int64_t>(k) : static_cast<std::int64_t>(k));
            const auto computed = indeterminacy(ak);
            const auto expected = expected_power_kernel(orbits, k, backward);
            report.checks.push_back({std::string(backward ? "backward" : "forward") + "_kernel_k=" + std::to_string(k),
                                     computed == expected, expected.dim(), computed.dim(), ""});
            if (!backward) report.checks.push_back(coset_check(ak, k, samples));
        }
    }

    const Subspace g = gim(obj);
    report.checks.push_back({"gim_inclusions", image(obj.alpha(), g).contains(g) &&
                                                   preimage(obj.alpha(), g).contains(g),
                             g.dim(), g.dim(), "gim is contained in alpha(gim) and alpha^{-1}(gim)"});
    const Vector hub = spider.node({1, 0});
    report.checks.push_back({"gim_differs_from_hub_line", !g.contains(hub) || g.dim() != 1, 1, g.dim(),
                             "finite truncation: gim has dimension " + std::to_string(g.dim()) +
                                 ", hub in gim: " + (g.contains(hub) ? "yes" : "no")});
    try {
        const auto form = leray(obj);
        report.checks.push_back({"leray_normality", true, form.dim, form.dim, "Leray image is a bijection"});
    } catch (const InvariantViolation& e) {
        report.checks.push_back({"leray_normality", false, 0, 0, e.what()});
    }
    return report;
}

}  // namespace linrel
