#ifndef RMT_TYPES_HPP
#define RMT_TYPES_HPP

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rmt {

using Cx = std::complex<double>;

constexpr double PI = 3.14159265358979323846264338327950288;

inline bool is_finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// error taxonomy: every throwing path uses one of these
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// non-convergence that still carries the best value computed so far
struct AccuracyError : std::runtime_error {
    Cx best;
    double err_estimate;
    AccuracyError(const std::string& msg, Cx best_, double err_)
        : std::runtime_error(msg), best(best_), err_estimate(err_) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// integer power of a complex number; single-valued, no branch issues
inline Cx ipow(Cx z, long n) {
    if (n == 0) return Cx(1.0, 0.0);
    if (n < 0) return 1.0 / ipow(z, -n);
    Cx r(1.0, 0.0);
    while (n > 0) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

inline double rel_err(Cx got, Cx want) {
    double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

// cos(pi z / 2), sin(pi z / 2) with argument reduction by the nearest integer,
// so the zeros at (odd resp. even) integers are exact in floating point
inline Cx cos_half_pi(Cx z) {
    double k = std::round(z.real());
    Cx d = z - k;
    long q = long(k) & 3L; // k mod 4, two's complement safe for k >= -2^62
    if (q < 0) q += 4;
    Cx c = std::cos(PI * d / 2.0), s = std::sin(PI * d / 2.0);
    switch (q) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
    }
}

inline Cx sin_half_pi(Cx z) {
    double k = std::round(z.real());
    Cx d = z - k;
    long q = long(k) & 3L;
    if (q < 0) q += 4;
    Cx c = std::cos(PI * d / 2.0), s = std::sin(PI * d / 2.0);
    switch (q) {
    case 0: return s;
    case 1: return c;
    case 2: return -s;
    default: return -c;
    }
}

} // namespace rmt

#endif
