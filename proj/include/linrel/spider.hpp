#pragma once

#include "linrel/leray.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace linrel {

/// Node e_{k,s} of the spider: orbit k >= 1, position -k <= s <= k. Every (k, 0) is the shared hub e_0.
struct SpiderIndex {
    std::size_t orbit;
    int position;
};

/// The spider relation over GF(2) restricted to orbits 1..N. Orbit k contributes the arcs
/// e_{k,s} -> e_{k,s+1} for -k <= s < k, so e_{k,k} is a terminal node.
class TruncatedSpider {
public:
    [[nodiscard]] std::size_t orbits() const noexcept { return orbits_; }
    [[nodiscard]] const EndoObject& object() const noexcept { return object_; }
    [[nodiscard]] std::size_t dim() const noexcept { return object_.dim(); }

    /// Coordinate of e_{k,s}: the hub is 0, then orbits in order, positions ascending with 0 skipped.
    [[nodiscard]] std::size_t coordinate(SpiderIndex idx) const;
    [[nodiscard]] Vector node(SpiderIndex idx) const;

private:
    friend TruncatedSpider build_spider(std::size_t orbits);
    TruncatedSpider(std::size_t orbits, EndoObject object) : orbits_(orbits), object_(std::move(object)) {}

    std::size_t orbits_;
    EndoObject object_;
};

/// 1 <= orbits <= 8, otherwise GuardExceeded. Dimension N(N+1) + 1.
TruncatedSpider build_spider(std::size_t orbits);

/// Span of e_{s,i} + e_{s',i} over i <= s < s' <= N and 1 <= i <= k; with `backward`,
/// the mirrored nodes e_{s,-i}. Requires 1 <= k <= N.
Subspace expected_power_kernel(std::size_t orbits, std::size_t k, bool backward = false);

struct SpiderCheck {
    std::string name;
    bool passed = false;
    std::size_t expected_dim = 0;
    std::size_t computed_dim = 0;
    std::string detail;
};

struct SpiderReport {
    std::size_t orbits = 0;
    std::size_t max_power = 0;
    std::size_t dimension = 0;
    std::vector<SpiderCheck> checks;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Checks alpha^{+-k}(0) against the closed forms for k <= max_power, the coset law
/// alpha^k(x) = y + alpha^k(0) on sampled x, the generalized-image inclusions, and Leray normality.
SpiderReport verify_spider(std::size_t orbits, std::size_t max_power);

}  // namespace linrel
