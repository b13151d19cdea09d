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

#ifndef FFC_LAURENT_HPP
#define FFC_LAURENT_HPP

#include <string>
#include <vector>

#include "cyclo.hpp"
#include "poly.hpp"

namespace ffc {

/**
 * Rational point of K_inf = F_q((1/T)), kept in canonical coprime form with
 * monic denominator. Laurent digits are extracted on demand by long
 * division; nothing is ever truncated, so every norm and digit is exact.
 *
 * Text form "U/V" in the polynomial text format ("1/1,0,1" is 1/(T^2+1));
 * a bare polynomial denotes the point with denominator 1.
 */
class LaurentPoint {
   public:
    /// Canonicalizes u/v; v must be nonzero.
    static LaurentPoint from_rational(Poly u, Poly v);
    static LaurentPoint from_poly(Poly a);
    static LaurentPoint zero(FieldDesc::Ptr field);
    static LaurentPoint parse(FieldDesc::Ptr field, const std::string& text);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldDesc& field() const { return num_.field(); }
    const FieldDesc::Ptr& field_ptr() const { return num_.field_ptr(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    friend bool operator==(const LaurentPoint& a, const LaurentPoint& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const LaurentPoint& a, const LaurentPoint& b) { return !(a == b); }

    /// Digit x_i of the expansion sum x_i T^i; representation-independent.
    FieldElement coeff(int i) const;
    /// Digits x_i for i in [lo, hi], one division pass, lowest index first.
    std::vector<FieldElement> coeff_window(int lo, int hi) const;

    /// |xi| = q^e with e = deg num - deg den; -inf on 0.
    QExp abs_exponent() const;
    /// ||xi|| = q^e for the fractional part; always < 0, -inf iff polynomial.
    QExp dist_exponent() const;

    /// e(xi) = psi(x_-1).
    CycloValue e() const;

    friend LaurentPoint operator+(const LaurentPoint& a, const LaurentPoint& b);
    LaurentPoint operator-() const;
    friend LaurentPoint operator-(const LaurentPoint& a, const LaurentPoint& b) { return a + (-b); }
    LaurentPoint times(const Poly& a) const;

    std::string str() const { return num_.str() + "/" + den_.str(); }

   private:
    LaurentPoint(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

/// e(a * xi) without building the intermediate point: one product and one
/// long-division step. This is the inner loop of every exponential sum.
CycloValue e_times(const LaurentPoint& xi, const Poly& a);

/// ||a * xi|| as a q-exponent, same fast path as e_times.
QExp dist_exponent_times(const LaurentPoint& xi, const Poly& a);

}  // namespace ffc

#endif
