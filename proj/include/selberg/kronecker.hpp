#ifndef SELBERG_KRONECKER_HPP
#define SELBERG_KRONECKER_HPP

#include <cstdint>
#include <utility>

#include "selberg/common.hpp"

namespace selberg {

// Kronecker symbol (a|n) by the standard quadratic-reciprocity recursion,
// extended to all integers n (including n <= 0).
inline int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        // (a|2) = (2|a) = (-1)^((a^2-1)/8)
        while (n % 2 == 0) {
            n /= 2;
            std::int64_t r = ((a % 8) + 8) % 8;
            if (r == 3 || r == 5) result = -result;
        }
    }
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return (n == 1) ? result : 0;
}

// Fundamental discriminant test: D = 1 mod 4 squarefree, or D = 4m with
// m = 2 or 3 mod 4 squarefree.  D = 1 counts (trivial character).
inline bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0) return false;
    auto squarefree = [](std::int64_t m) {
        if (m < 0) m = -m;
        for (std::int64_t p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0) return false;
        return true;
    };
    std::int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) return squarefree(d);
    if (r == 0) {
        std::int64_t m = d / 4;
        std::int64_t rm = ((m % 4) + 4) % 4;
        return (rm == 2 || rm == 3) && squarefree(m);
    }
    return false;
}

}  // namespace selberg

#endif
