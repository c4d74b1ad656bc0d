#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

namespace carbonlens {

/// Error type thrown by all library operations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

template <class... Args>
[[noreturn]] void fail(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    throw Error(os.str());
}

template <class... Args>
void require(bool cond, Args&&... args) {
    if (!cond) fail(std::forward<Args>(args)...);
}

} // namespace detail

/// Deterministic RNG used everywhere randomness is needed. mt19937_64 output
/// is pinned by the standard, so seeded results are reproducible across
/// platforms as long as we derive values from raw draws ourselves.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n). Multiply-shift mapping of one 64-bit draw;
/// bias is < n/2^64 which is irrelevant for sampling offsets and shuffles.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

/// Uniform real in [0, 1).
inline double uniform_real(Rng& rng) {
    return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

/// Uniform real in [lo, hi).
inline double uniform_real(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_real(rng);
}

/// Fisher-Yates shuffle driven by uniform_index so the permutation is a pure
/// function of the seed.
template <class T>
void deterministic_shuffle(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

/// Compensated (Kahan) accumulator for conservation checks.
class KahanSum {
public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace carbonlens
