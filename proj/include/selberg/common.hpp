#ifndef SELBERG_COMMON_HPP
#define SELBERG_COMMON_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace selberg {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;
inline constexpr double TWO_PI = 2.0 * PI;
inline constexpr double EULER_GAMMA = 0.57721566490153286060651209008240243;

// Numerical-tolerance failure: a requested accuracy could not be certified.
struct tolerance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resource limit hit: table too short, panel/sample budget exhausted.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Compensated (Kahan) accumulator; phase sums over 1e6 terms cancel heavily.
template <typename T>
class KahanSum {
  public:
    void add(const T& x) {
        T y = x - carry_;
        T t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    T value() const { return sum_; }

  private:
    T sum_{};
    T carry_{};
};

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace selberg

#endif
