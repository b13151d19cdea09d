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

#include "laurent.hpp"

namespace ffc {

LaurentPoint LaurentPoint::from_rational(Poly u, Poly v) {
    if (v.is_zero()) fail(Errc::zero_denominator, "Laurent point with zero denominator");
    if (!u.field().same(v.field())) fail(Errc::field_mismatch, "numerator and denominator fields differ");
    if (u.is_zero()) return LaurentPoint(std::move(u), Poly::one(v.field_ptr()));
    const Poly g = gcd(u, v);
    if (g.deg() > 0) {
        u = u / g;
        v = v / g;
    }
    // make the denominator monic
    const std::uint32_t lead_inv = v.field().inv(v.leading().index());
    return LaurentPoint(u.scaled(lead_inv), v.scaled(lead_inv));
}

LaurentPoint LaurentPoint::from_poly(Poly a) {
    auto one = Poly::one(a.field_ptr());
    return LaurentPoint(std::move(a), std::move(one));
}

LaurentPoint LaurentPoint::zero(FieldDesc::Ptr field) {
    return from_poly(Poly::zero(std::move(field)));
}

LaurentPoint LaurentPoint::parse(FieldDesc::Ptr field, const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return from_poly(Poly::parse(std::move(field), text));
    Poly u = Poly::parse(field, text.substr(0, slash));
    Poly v = Poly::parse(field, text.substr(slash + 1));
    return from_rational(std::move(u), std::move(v));
}

FieldElement LaurentPoint::coeff(int i) const {
    // Digits at index >= i of num/den agree with the polynomial quotient of
    // num * T^m by den (m = max(0, -i)): the remainder part has absolute
    // value < 1 and cannot contribute at nonnegative exponents.
    const QExp top = abs_exponent();
    if (!top.finite() || i > top.value()) return FieldElement(field(), 0);
    const int m = i < 0 ? -i : 0;
    const Poly quotient = num_.shifted(m) / den_;
    return quotient.coeff(i + m);
}

std::vector<FieldElement> LaurentPoint::coeff_window(int lo, int hi) const {
    std::vector<FieldElement> out;
    if (lo > hi) return out;
    const int m = lo < 0 ? -lo : 0;
    const Poly quotient = num_.shifted(m) / den_;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) out.push_back(quotient.coeff(i + m));
    return out;
}

QExp LaurentPoint::abs_exponent() const {
    if (num_.is_zero()) return QExp::ninf();
    return QExp(num_.deg() - den_.deg());
}

QExp LaurentPoint::dist_exponent() const {
    const Poly frac = num_ % den_;
    if (frac.is_zero()) return QExp::ninf();
    return QExp(frac.deg() - den_.deg());
}

CycloValue LaurentPoint::e() const { return psi(coeff(-1)); }

LaurentPoint operator+(const LaurentPoint& a, const LaurentPoint& b) {
    return LaurentPoint::from_rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentPoint LaurentPoint::operator-() const { return LaurentPoint(-num_, den_); }

LaurentPoint LaurentPoint::times(const Poly& a) const {
    return from_rational(num_ * a, den_);
}

CycloValue e_times(const LaurentPoint& xi, const Poly& a) {
    // x_-1 of (num*a)/den: remainder of (num*a) mod den, read one digit below
    // the denominator's degree. No gcd canonicalization is needed; digits do
    // not depend on the representation.
    const Poly w = xi.num() * a;
    if (w.is_zero()) return CycloValue::one(xi.field().p());
    const Poly r = w % xi.den();
    const std::uint32_t digit =
        (!r.is_zero() && r.deg() == xi.den().deg() - 1) ? r.leading().index() : 0;
    return psi(FieldElement(xi.field(), digit));
}

QExp dist_exponent_times(const LaurentPoint& xi, const Poly& a) {
    const Poly w = xi.num() * a;
    if (w.is_zero()) return QExp::ninf();
    const Poly r = w % xi.den();
    if (r.is_zero()) return QExp::ninf();
    return QExp(r.deg() - xi.den().deg());
}

}  // namespace ffc
