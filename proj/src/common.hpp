/*
   Copyright 2026 ffcircle developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFC_COMMON_HPP
#define FFC_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ffc {

inline constexpr const char* kVersion = "0.1.0";

enum class Errc {
    ok = 0,
    invalid_argument,
    parse_error,
    division_by_zero,
    field_mismatch,
    characteristic_mismatch,
    resource_limit,
    constant_input,
    zero_input,
    not_monic,
    zero_denominator,
    no_approximant,
    scalar_sum_not_one,
    precondition_violated,
    degree_too_small,
    file_format,
    size_too_large,
    no_valid_scalars,
    j_out_of_range,
    io_error,
    internal_error,
};

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Enumeration guard. Checked before any loop whose size depends on q^n.
struct ResourceCap {
    std::uint64_t max_items = 10'000'000;

    void check(std::uint64_t items, const std::string& what) const {
        if (items > max_items)
            fail(Errc::resource_limit,
                 what + ": " + std::to_string(items) + " items exceeds cap " + std::to_string(max_items));
    }
};

/// Integer extended with -infinity; used for all log_q-scale norms
/// (|0| = 0 = q^(-inf) must compare below every finite power of q).
class QExp {
   public:
    constexpr QExp() : fin_(false), e_(0) {}
    constexpr explicit QExp(long long e) : fin_(true), e_(e) {}
    static constexpr QExp ninf() { return QExp{}; }

    constexpr bool finite() const { return fin_; }
    constexpr long long value() const {
        return fin_ ? e_ : std::numeric_limits<long long>::min();
    }

    friend constexpr bool operator==(QExp a, QExp b) {
        return a.fin_ == b.fin_ && (!a.fin_ || a.e_ == b.e_);
    }
    friend constexpr bool operator<(QExp a, QExp b) {
        if (!a.fin_) return b.fin_;
        if (!b.fin_) return false;
        return a.e_ < b.e_;
    }
    friend constexpr bool operator!=(QExp a, QExp b) { return !(a == b); }
    friend constexpr bool operator<=(QExp a, QExp b) { return a < b || a == b; }
    friend constexpr bool operator>(QExp a, QExp b) { return b < a; }
    friend constexpr bool operator>=(QExp a, QExp b) { return b <= a; }

    friend constexpr bool operator<(QExp a, long long b) { return !a.fin_ || a.e_ < b; }
    friend constexpr bool operator>=(QExp a, long long b) { return a.fin_ && a.e_ >= b; }
    friend constexpr bool operator==(QExp a, long long b) { return a.fin_ && a.e_ == b; }

    // -inf absorbs shifts.
    constexpr QExp shifted(long long by) const { return fin_ ? QExp(e_ + by) : ninf(); }

    std::string str() const { return fin_ ? std::to_string(e_) : std::string("-inf"); }

   private:
    bool fin_;
    long long e_;
};

/// Exact fraction with reduced int64 numerator/denominator, denominator > 0.
class Rational {
   public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }
    static Rational integer(long long n) { return Rational(n, 1); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked(static_cast<__int128>(a.num_) * b.den_ +
                                static_cast<__int128>(b.num_) * a.den_),
                        checked(static_cast<__int128>(a.den_) * b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num_, b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked(static_cast<__int128>(a.num_) * b.num_),
                        checked(static_cast<__int128>(a.den_) * b.den_));
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

   private:
    static long long checked(__int128 v) {
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
            fail(Errc::internal_error, "rational overflow");
        return static_cast<long long>(v);
    }
    void normalize() {
        if (den_ == 0) fail(Errc::division_by_zero, "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

/// Counter-based 64-bit generator (SplitMix64). The fixed mixing constants
/// make every seeded stream reproducible across platforms and versions.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n) by rejection; n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

   private:
    std::uint64_t state_;
};

/// Truncated logarithm: log_a(x) = max(log(x)/log(a), 1).
inline double log_base_trunc(double x, double a) {
    const double raw = std::log(x) / std::log(a);
    return std::isnan(raw) ? 1.0 : std::max(raw, 1.0);
}

inline std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            fail(Errc::resource_limit, "integer power overflow");
        r *= base;
    }
    return r;
}

}  // namespace ffc

#endif
