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

#ifndef FFC_CYCLO_HPP
#define FFC_CYCLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"
#include "field.hpp"

namespace ffc {

/**
 * Exact element of Z[zeta_p], stored as p integer coefficients of
 * 1, zeta, ..., zeta^(p-1). Canonical form pins the last coefficient to 0
 * (subtracting multiples of 1 + zeta + ... + zeta^(p-1) = 0), which makes
 * representatives unique and equality coefficient-wise.
 *
 * Character sums stay in this ring end-to-end; abs() is the only place a
 * floating-point magnitude appears.
 */
class CycloValue {
   public:
    static CycloValue zero(std::uint32_t p) { return CycloValue(p); }
    static CycloValue integer(std::uint32_t p, std::int64_t n) {
        CycloValue v(p);
        v.c_[0] = n;
        return v;
    }
    static CycloValue one(std::uint32_t p) { return integer(p, 1); }
    /// zeta_p^k, canonicalized.
    static CycloValue root_power(std::uint32_t p, std::uint64_t k) {
        CycloValue v(p);
        v.c_[k % p] = 1;
        v.canonicalize();
        return v;
    }

    std::uint32_t char_p() const { return p_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    bool is_zero() const {
        for (auto c : c_)
            if (c != 0) return false;
        return true;
    }

    friend CycloValue operator+(const CycloValue& a, const CycloValue& b) {
        check_char(a, b);
        CycloValue r = a;
        for (std::uint32_t i = 0; i < r.p_; ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend CycloValue operator-(const CycloValue& a, const CycloValue& b) {
        check_char(a, b);
        CycloValue r = a;
        for (std::uint32_t i = 0; i < r.p_; ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend CycloValue operator*(const CycloValue& a, const CycloValue& b) {
        check_char(a, b);
        CycloValue r(a.p_);
        for (std::uint32_t i = 0; i < a.p_; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::uint32_t j = 0; j < b.p_; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[(i + j) % a.p_] += a.c_[i] * b.c_[j];
            }
        }
        r.canonicalize();
        return r;
    }
    CycloValue scaled(std::int64_t n) const {
        CycloValue r = *this;
        for (auto& c : r.c_) c *= n;
        return r;
    }
    CycloValue& operator+=(const CycloValue& b) {
        check_char(*this, b);
        for (std::uint32_t i = 0; i < p_; ++i) c_[i] += b.c_[i];
        return *this;
    }
    CycloValue operator-() const { return scaled(-1); }

    friend bool operator==(const CycloValue& a, const CycloValue& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycloValue& a, const CycloValue& b) { return !(a == b); }

    /// |sum c_i e^(2*pi*i*k/p)|; documented relative error <= 1e-9 at
    /// desk-scale coefficient sizes.
    double abs() const;

    std::string str() const;

   private:
    explicit CycloValue(std::uint32_t p) : p_(p), c_(p, 0) {
        if (p < 2) fail(Errc::invalid_argument, "cyclotomic order must be a prime >= 2");
    }
    static void check_char(const CycloValue& a, const CycloValue& b) {
        if (a.p_ != b.p_) fail(Errc::characteristic_mismatch, "cyclotomic values of different order");
    }
    void canonicalize() {
        const std::int64_t top = c_[p_ - 1];
        if (top != 0)
            for (auto& c : c_) c -= top;
    }

    std::uint32_t p_;
    std::vector<std::int64_t> c_;
};

/// psi(x) = zeta_p^tr(x), the additive character of F_q.
inline CycloValue psi(const FieldElement& x) {
    return CycloValue::root_power(x.field().p(), trace(x));
}

}  // namespace ffc

#endif
