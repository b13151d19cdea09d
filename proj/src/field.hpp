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

#ifndef FFC_FIELD_HPP
#define FFC_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "common.hpp"

namespace ffc {

class FieldElement;

/**
 * Description of F_q = F_p^d with an explicit monic irreducible modulus over
 * F_p (ignored for d = 1). Elements are addressed by their canonical index
 * in [0, q): the base-p packing of the coefficient vector, constant term
 * least significant.
 *
 * Spec strings: "p" for prime fields, "p^d" for an extension with the default
 * modulus (the monic irreducible of degree d with the smallest canonical
 * index), or "p^d/c_hi,...,c_lo" with explicit modulus coefficients.
 */
class FieldDesc {
   public:
    using Ptr = std::shared_ptr<const FieldDesc>;

    static Ptr prime(std::uint32_t p);
    /// modulus_low_to_high: d+1 residues mod p, monic, irreducible over F_p.
    static Ptr extension(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus_low_to_high);
    static Ptr from_spec(const std::string& spec);

    std::uint32_t p() const { return p_; }
    std::uint32_t d() const { return d_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string spec() const;

    bool same(const FieldDesc& other) const;

    // Element arithmetic on canonical indices.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws on a = 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t trace(std::uint32_t a) const;  // in [0, p)

    std::vector<std::uint32_t> decode(std::uint32_t idx) const;  // d residues, constant term first
    std::uint32_t encode(const std::vector<std::uint32_t>& rep) const;

    FieldElement element(std::uint32_t idx) const;
    FieldElement zero() const;
    FieldElement one() const;

   private:
    FieldDesc() = default;
    void init_tables();
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_ = 0;
    std::uint32_t d_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;  // low-to-high, length d+1, monic; {0,1} for prime fields

    bool has_tables_ = false;
    std::vector<std::uint32_t> add_tab_;
    std::vector<std::uint32_t> mul_tab_;
    std::vector<std::uint32_t> neg_tab_;
    std::vector<std::uint32_t> inv_tab_;
    std::vector<std::uint32_t> trace_tab_;
};

/// Immutable element of a FieldDesc. Holds a non-owning pointer; the field
/// must outlive its elements (Poly and friends keep a shared_ptr owner).
class FieldElement {
   public:
    FieldElement(const FieldDesc& field, std::uint32_t idx) : f_(&field), idx_(idx) {
        if (idx >= field.q()) fail(Errc::invalid_argument, "element index out of range");
    }

    const FieldDesc& field() const { return *f_; }
    std::uint32_t index() const { return idx_; }
    std::vector<std::uint32_t> rep() const { return f_->decode(idx_); }
    bool is_zero() const { return idx_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_owner(a, b);
        return FieldElement(*a.f_, a.f_->add(a.idx_, b.idx_));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_owner(a, b);
        return FieldElement(*a.f_, a.f_->sub(a.idx_, b.idx_));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_owner(a, b);
        return FieldElement(*a.f_, a.f_->mul(a.idx_, b.idx_));
    }
    FieldElement operator-() const { return FieldElement(*f_, f_->neg(idx_)); }
    FieldElement inverse() const { return FieldElement(*f_, f_->inv(idx_)); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.f_->same(*b.f_) && a.idx_ == b.idx_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

   private:
    static void check_owner(const FieldElement& a, const FieldElement& b) {
        if (!a.f_->same(*b.f_)) fail(Errc::field_mismatch, "elements of different fields");
    }

    const FieldDesc* f_;
    std::uint32_t idx_;
};

/// Absolute trace tr_{F_q/F_p}(x) as a residue in [0, p).
inline std::uint32_t trace(const FieldElement& x) { return x.field().trace(x.index()); }

}  // namespace ffc

#endif
