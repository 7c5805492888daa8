#pragma once

#include <cstdint>
#include <vector>

#include "gseq/bigint.hpp"

namespace gseq {

// Euler's totient. Throws std::invalid_argument for n == 0.
std::uint64_t euler_phi(std::uint64_t n);

// Divisors of n in ascending order. Throws std::invalid_argument for n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Exact binomial coefficient; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace gseq
