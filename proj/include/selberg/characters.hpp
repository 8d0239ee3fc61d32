#ifndef SELBERG_CHARACTERS_HPP
#define SELBERG_CHARACTERS_HPP

#include <cstdint>

#include "selberg/kronecker.hpp"

namespace selberg {

// A real primitive Dirichlet character, realized as a Kronecker symbol
// (D|n) for a fundamental discriminant D with |D| = modulus (modulus 1:
// the trivial character, i.e. a zeta factor).  The index enumerates the
// primitive real characters of that modulus (positive discriminant first);
// moduli admitting none are rejected.
class RealCharacter {
  public:
    RealCharacter(std::int64_t modulus, int index) : modulus_(modulus) {
        if (modulus < 1) throw std::invalid_argument("character modulus must be >= 1");
        if (modulus == 1) {
            if (index != 1) throw std::invalid_argument("modulus 1 has a single character");
            discriminant_ = 1;
            return;
        }
        std::vector<std::int64_t> candidates;
        if (is_fundamental_discriminant(modulus)) candidates.push_back(modulus);
        if (is_fundamental_discriminant(-modulus)) candidates.push_back(-modulus);
        if (index < 1 || static_cast<std::size_t>(index) > candidates.size())
            throw std::invalid_argument("no primitive real character with this modulus/index");
        discriminant_ = candidates[static_cast<std::size_t>(index - 1)];
    }

    int operator()(std::int64_t n) const {
        if (modulus_ == 1) return 1;
        return kronecker(discriminant_, n);
    }

    static RealCharacter from_discriminant(std::int64_t d) {
        if (d == 1) return RealCharacter(1, 1);
        if (!is_fundamental_discriminant(d))
            throw std::invalid_argument("not a fundamental discriminant");
        RealCharacter chi(d < 0 ? -d : d, 1);
        chi.discriminant_ = d;
        return chi;
    }

    std::int64_t modulus() const { return modulus_; }
    std::int64_t discriminant() const { return discriminant_; }
    bool principal() const { return modulus_ == 1; }
    // Real primitive characters are even iff D > 0.
    bool odd() const { return discriminant_ < 0; }

  private:
    std::int64_t modulus_;
    std::int64_t discriminant_;
};

}  // namespace selberg

#endif
