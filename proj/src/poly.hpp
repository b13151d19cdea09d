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

#ifndef FFC_POLY_HPP
#define FFC_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "field.hpp"

namespace ffc {

/**
 * Element of F_q[T] as a dense coefficient vector (constant term first).
 * Invariant: the stored vector carries no leading zeros; the zero polynomial
 * is the empty vector with degree exponent -inf.
 *
 * Text format: comma-separated coefficient indices high-to-low ("1,0,2,1" is
 * T^3+2T+1 over F_3). parse() also accepts the human form "T^3+2*T+1".
 */
class Poly {
   public:
    explicit Poly(FieldDesc::Ptr field) : f_(std::move(field)) {}

    static Poly zero(FieldDesc::Ptr field) { return Poly(std::move(field)); }
    static Poly one(FieldDesc::Ptr field);
    static Poly constant(FieldDesc::Ptr field, std::uint32_t elem_idx);
    static Poly t(FieldDesc::Ptr field);  // the variable T
    static Poly t_power(FieldDesc::Ptr field, int n);
    /// Coefficient element indices, constant term first.
    static Poly from_indices(FieldDesc::Ptr field, std::vector<std::uint32_t> low_to_high);
    static Poly parse(FieldDesc::Ptr field, const std::string& text);

    const FieldDesc& field() const { return *f_; }
    const FieldDesc::Ptr& field_ptr() const { return f_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 on zero
    /// |a| = q^e with e = deg a; -inf on zero (the paper's |0| = 0).
    QExp norm_exponent() const { return c_.empty() ? QExp::ninf() : QExp(deg()); }

    std::uint32_t coeff_index(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
    }
    FieldElement coeff(int i) const { return FieldElement(*f_, coeff_index(i)); }
    FieldElement leading() const;
    const std::vector<std::uint32_t>& coeff_indices() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(std::uint32_t elem_idx) const;  // multiply by a constant
    Poly shifted(int k) const;                  // multiply by T^k, k >= 0
    Poly monicized() const;
    Poly derivative() const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Total order: by degree, then coefficients from the top down.
    static int compare(const Poly& a, const Poly& b);
    friend bool operator<(const Poly& a, const Poly& b) { return compare(a, b) < 0; }

    std::string str() const;

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static void check_owner(const Poly& a, const Poly& b) {
        if (!a.f_->same(*b.f_)) fail(Errc::field_mismatch, "polynomials over different fields");
    }

    FieldDesc::Ptr f_;
    std::vector<std::uint32_t> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (0 when both inputs are 0).
Poly gcd(const Poly& a, const Poly& b);
/// a^e mod m.
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);

// --- enumeration of monic polynomials ---
// A monic degree-n polynomial maps to the base-q packing of its n lower
// coefficient element indices, constant term least significant. Enumeration
// in index order is the canonical order of M_n.

std::uint64_t monic_count(const FieldDesc& f, int n);
Poly monic_from_index(FieldDesc::Ptr field, int n, std::uint64_t idx);
std::uint64_t monic_to_index(const Poly& a);  // a must be monic

/// Restartable stream over M_n in canonical order. Checks the cap up front.
class MonicRange {
   public:
    MonicRange(FieldDesc::Ptr field, int n, const ResourceCap& cap = {});
    std::uint64_t size() const { return count_; }

    class iterator {
       public:
        iterator(const MonicRange* r, std::uint64_t i) : r_(r), i_(i) {}
        Poly operator*() const { return monic_from_index(r_->f_, r_->n_, i_); }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }

       private:
        const MonicRange* r_;
        std::uint64_t i_;
    };
    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, count_); }

   private:
    FieldDesc::Ptr f_;
    int n_;
    std::uint64_t count_;
};

}  // namespace ffc

#endif
