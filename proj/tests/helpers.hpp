#ifndef SELBERG_TESTS_HELPERS_HPP
#define SELBERG_TESTS_HELPERS_HPP

#include <complex>
#include <string>

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(SELBERG_DATA_DIR) + "/" + name;
}

inline double cerr_abs(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want);
}

}  // namespace testutil

#endif
