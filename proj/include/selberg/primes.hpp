#ifndef SELBERG_PRIMES_HPP
#define SELBERG_PRIMES_HPP

#include <cstdint>

#include "selberg/common.hpp"

namespace selberg {

// Plain Eratosthenes sieve; desk scale (N <= 1e7).
inline std::vector<std::uint8_t> prime_sieve(std::size_t n) {
    std::vector<std::uint8_t> is_prime(n + 1, 1);
    is_prime[0] = 0;
    if (n >= 1) is_prime[1] = 0;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (is_prime[p])
            for (std::size_t m = p * p; m <= n; m += p) is_prime[m] = 0;
    return is_prime;
}

inline std::vector<std::uint32_t> primes_up_to(std::size_t n) {
    auto sieve = prime_sieve(n);
    std::vector<std::uint32_t> out;
    for (std::size_t p = 2; p <= n; ++p)
        if (sieve[p]) out.push_back(static_cast<std::uint32_t>(p));
    return out;
}

}  // namespace selberg

#endif
