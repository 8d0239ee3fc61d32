#ifndef SELBERG_INVARIANTS_HPP
#define SELBERG_INVARIANTS_HPP

#include "selberg/common.hpp"

namespace selberg {

// Functional-equation data:  Phi(s) = Q^s prod Gamma(lambda_j s + mu_j) F(s),
// Phi(s) = omega * conj(Phi(1 - conj(s))).
struct GammaFactorSpec {
    double q_scale = 1.0;                            // Q
    std::vector<std::pair<double, cplx>> factors;    // (lambda_j, mu_j)
    cplx omega{1.0, 0.0};

    void validate() const {
        if (!(q_scale > 0.0)) throw std::invalid_argument("gamma spec: Q must be positive");
        if (factors.empty()) throw std::invalid_argument("gamma spec: at least one gamma factor");
        for (const auto& [lambda, mu] : factors) {
            if (!(lambda > 0.0)) throw std::invalid_argument("gamma spec: lambda must be positive");
            if (std::real(mu) < 0.0)
                throw std::invalid_argument("gamma spec: Re(mu) must be nonnegative");
        }
        if (std::abs(std::abs(omega) - 1.0) > 1e-12)
            throw std::invalid_argument("gamma spec: |omega| must be 1");
    }
};

struct SelbergInvariants {
    double degree = 0.0;   // d = 2 sum lambda_j
    cplx xi{0.0, 0.0};     // xi = 2 sum (mu_j - 1/2)
    double conductor = 0.0;  // q = (2 pi)^d Q^2 prod lambda_j^{2 lambda_j}
    double q1 = 0.0;         // Q1 = Q prod lambda_j^{lambda_j} = sqrt(q) (2 pi)^{-d/2}
    cplx omega1{0.0, 0.0};
    cplx omega1_prime{0.0, 0.0};
    cplx omega2{0.0, 0.0};
};

inline SelbergInvariants compute_invariants(const GammaFactorSpec& spec) {
    spec.validate();
    SelbergInvariants inv;
    double lambda_sum = 0.0, log_lambda_pow = 0.0;
    cplx mu_sum(0.0, 0.0);
    double im_mu_log_lambda = 0.0;
    for (const auto& [lambda, mu] : spec.factors) {
        lambda_sum += lambda;
        log_lambda_pow += lambda * std::log(lambda);
        mu_sum += mu - cplx(0.5, 0.0);
        im_mu_log_lambda += std::imag(mu) * std::log(lambda);
    }
    inv.degree = 2.0 * lambda_sum;
    inv.xi = 2.0 * mu_sum;
    inv.q1 = spec.q_scale * std::exp(log_lambda_pow);
    inv.conductor = std::pow(TWO_PI, inv.degree) * spec.q_scale * spec.q_scale *
                    std::exp(2.0 * log_lambda_pow);
    // omega1 = omega e^{-(pi/2) i (d/2 + Re xi) + i Im xi} prod lambda_j^{-2 i Im mu_j}
    const cplx i_unit(0.0, 1.0);
    inv.omega1 = spec.omega *
                 std::exp(i_unit * (-0.5 * PI * (0.5 * inv.degree + std::real(inv.xi)) +
                                    std::imag(inv.xi) - 2.0 * im_mu_log_lambda));
    // omega1' = omega e^{-(pi/2) i (1 + xi)} prod lambda_j^{-2 i Im mu_j}
    inv.omega1_prime = spec.omega * std::exp(-0.5 * PI * i_unit * (1.0 + inv.xi)) *
                       std::exp(i_unit * (-2.0 * im_mu_log_lambda));
    // omega2 = (omega1')^{-1/2}, principal branch.
    inv.omega2 = std::exp(-0.5 * std::log(inv.omega1_prime));
    return inv;
}

}  // namespace selberg

#endif
