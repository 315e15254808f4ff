#pragma once

#include <cstdint>
#include <string>

#include "subdivlab/graph.hpp"

namespace subdiv {

// Deterministic functions of (n, parameter, seed); the same arguments always
// produce the same edge list, independent of platform.
SimpleGraph gen_erdos_renyi(int n, double p, std::uint64_t seed);

// Pairing model: shuffle n*d points, pair them up, retry on loops or
// parallel edges. Requires d < n and n*d even; throws after too many
// rejected pairings.
SimpleGraph gen_random_regular(int n, int d, std::uint64_t seed);

// kind: "erdos-renyi" (parameter p) or "random-regular" (parameter d).
SimpleGraph gen_random(const std::string& kind, int n, double parameter, std::uint64_t seed);

}  // namespace subdiv
