#pragma once

#include "linrel/relation.hpp"

#include <initializer_list>
#include <vector>

namespace fixtures {

inline linrel::LinearRelation rel(std::uint32_t p, std::size_t dom, std::size_t cod,
                                  std::initializer_list<std::initializer_list<std::int64_t>> gens) {
    const linrel::Prime prime(p);
    std::vector<linrel::Vector> vs;
    for (const auto& g : gens) vs.emplace_back(prime, g);
    return linrel::LinearRelation::from_generators(prime, dom, cod, vs);
}

/// x -> lambda x on GF(p)
inline linrel::LinearRelation scale(std::uint32_t p, std::int64_t lambda) {
    const linrel::Prime prime(p);
    return linrel::LinearRelation::from_matrix(linrel::Matrix(prime, 1, {{lambda}}));
}

inline linrel::LinearRelation top(std::uint32_t p) { return linrel::LinearRelation::top(linrel::Prime(p), 1, 1); }
inline linrel::LinearRelation bottom(std::uint32_t p) {
    return linrel::LinearRelation::bottom(linrel::Prime(p), 1, 1);
}
/// (.0)^{-1} = {0} + Z_p
inline linrel::LinearRelation zero_inverse(std::uint32_t p) { return rel(p, 1, 1, {{0, 1}}); }

}  // namespace fixtures
