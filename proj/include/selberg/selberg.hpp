#ifndef SELBERG_SELBERG_HPP
#define SELBERG_SELBERG_HPP

#include "selberg/afe.hpp"
#include "selberg/characters.hpp"
#include "selberg/coefficients.hpp"
#include "selberg/common.hpp"
#include "selberg/definition.hpp"
#include "selberg/em_oracle.hpp"
#include "selberg/exp_sums.hpp"
#include "selberg/gamma_delta.hpp"
#include "selberg/hardy.hpp"
#include "selberg/invariants.hpp"
#include "selberg/kronecker.hpp"
#include "selberg/log_gamma.hpp"
#include "selberg/osc_integral.hpp"
#include "selberg/primes.hpp"
#include "selberg/thresholds.hpp"
#include "selberg/version.hpp"

#endif
