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

#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ffc {

Poly Poly::one(FieldDesc::Ptr field) { return constant(std::move(field), 1); }

Poly Poly::constant(FieldDesc::Ptr field, std::uint32_t elem_idx) {
    Poly a(std::move(field));
    if (elem_idx != 0) a.c_ = {elem_idx};
    return a;
}

Poly Poly::t(FieldDesc::Ptr field) { return t_power(std::move(field), 1); }

Poly Poly::t_power(FieldDesc::Ptr field, int n) {
    if (n < 0) fail(Errc::invalid_argument, "negative power of T");
    Poly a(std::move(field));
    a.c_.assign(static_cast<std::size_t>(n) + 1, 0);
    a.c_.back() = 1;
    return a;
}

Poly Poly::from_indices(FieldDesc::Ptr field, std::vector<std::uint32_t> low_to_high) {
    Poly a(std::move(field));
    for (auto idx : low_to_high)
        if (idx >= a.f_->q()) fail(Errc::invalid_argument, "coefficient index out of range");
    a.c_ = std::move(low_to_high);
    a.trim();
    return a;
}

FieldElement Poly::leading() const {
    if (c_.empty()) fail(Errc::zero_input, "leading coefficient of zero polynomial");
    return FieldElement(*f_, c_.back());
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::check_owner(a, b);
    Poly r(a.f_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = a.f_->add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    Poly r(f_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->neg(c_[i]);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_owner(a, b);
    Poly r(a.f_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    const FieldDesc& f = *a.f_;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
        }
    }
    r.trim();
    return r;
}

Poly Poly::scaled(std::uint32_t elem_idx) const {
    Poly r(f_);
    if (elem_idx == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->mul(c_[i], elem_idx);
    r.trim();
    return r;
}

Poly Poly::shifted(int k) const {
    if (k < 0) fail(Errc::invalid_argument, "negative shift");
    if (c_.empty() || k == 0) return *this;
    Poly r(f_);
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

Poly Poly::monicized() const {
    if (c_.empty()) return *this;
    return scaled(f_->inv(c_.back()));
}

Poly Poly::derivative() const {
    Poly r(f_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        // the integer i mod p is the element with index i mod p
        const auto m = static_cast<std::uint32_t>(i % f_->p());
        r.c_[i - 1] = f_->mul(c_[i], m);
    }
    r.trim();
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.f_->same(*b.f_) && a.c_ == b.c_; }

int Poly::compare(const Poly& a, const Poly& b) {
    check_owner(a, b);
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    return 0;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
    const FieldDesc& f = a.field();
    if (!f.same(b.field())) fail(Errc::field_mismatch, "polynomials over different fields");
    Poly q(a.field_ptr());
    Poly r = a;
    if (a.deg() < b.deg()) return {q, r};

    std::vector<std::uint32_t> qc(static_cast<std::size_t>(a.deg() - b.deg()) + 1, 0);
    std::vector<std::uint32_t> rc = a.coeff_indices();
    const std::vector<std::uint32_t>& bc = b.coeff_indices();
    const std::uint32_t lead_inv = f.inv(bc.back());
    for (int i = static_cast<int>(rc.size()) - 1; i >= b.deg(); --i) {
        const std::uint32_t c = f.mul(rc[static_cast<std::size_t>(i)], lead_inv);
        if (c == 0) continue;
        qc[static_cast<std::size_t>(i - b.deg())] = c;
        for (std::size_t k = 0; k < bc.size(); ++k) {
            const std::size_t pos = static_cast<std::size_t>(i - b.deg()) + k;
            rc[pos] = f.sub(rc[pos], f.mul(c, bc[k]));
        }
    }
    rc.resize(static_cast<std::size_t>(std::max(b.deg(), 0)));
    q = Poly::from_indices(a.field_ptr(), std::move(qc));
    r = Poly::from_indices(a.field_ptr(), std::move(rc));
    return {q, r};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monicized();
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
    Poly result = Poly::one(a.field_ptr()) % m;
    Poly base = a % m;
    while (e != 0) {
        if (e & 1) result = (result * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return result;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        s += std::to_string(c_[i]);
        if (i != 0) s += ",";
    }
    return s;
}

namespace {

Poly parse_human(const FieldDesc::Ptr& field, const std::string& text) {
    // Terms over {+,-}: INT | INT[*]T[^INT] | T[^INT]
    std::vector<std::uint32_t> coeffs;
    const FieldDesc& f = *field;
    auto add_term = [&](std::uint32_t elem, int degree, bool negative) {
        if (degree >= 64) fail(Errc::parse_error, "degree too large in: " + text);
        if (coeffs.size() <= static_cast<std::size_t>(degree)) coeffs.resize(degree + 1, 0);
        const std::uint32_t val = negative ? f.neg(elem) : elem;
        coeffs[static_cast<std::size_t>(degree)] = f.add(coeffs[static_cast<std::size_t>(degree)], val);
    };

    std::size_t i = 0;
    bool negative = false;
    bool any = false;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '+') {
            negative = false;
            ++i;
            continue;
        }
        if (ch == '-') {
            negative = true;
            ++i;
            continue;
        }
        std::uint64_t elem = 1;
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            elem = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                elem = elem * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (elem >= f.q()) fail(Errc::parse_error, "coefficient out of range in: " + text);
                ++i;
            }
            saw_number = true;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i < text.size() && text[i] == '*') ++i;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        }
        int degree = 0;
        if (i < text.size() && (text[i] == 'T' || text[i] == 't')) {
            ++i;
            degree = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    fail(Errc::parse_error, "missing exponent in: " + text);
                degree = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    degree = degree * 10 + (text[i++] - '0');
            }
        } else if (!saw_number) {
            fail(Errc::parse_error, "unexpected character in polynomial: " + text);
        }
        add_term(static_cast<std::uint32_t>(elem), degree, negative);
        negative = false;
        any = true;
    }
    if (!any) fail(Errc::parse_error, "empty polynomial text");
    return Poly::from_indices(field, std::move(coeffs));
}

}  // namespace

Poly Poly::parse(FieldDesc::Ptr field, const std::string& text) {
    if (text.find('T') != std::string::npos || text.find('t') != std::string::npos)
        return parse_human(field, text);
    std::vector<std::uint32_t> hi_to_lo;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // strip spaces
        std::string clean;
        for (char c : tok)
            if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
        if (clean.empty()) fail(Errc::parse_error, "empty coefficient in: " + text);
        try {
            const unsigned long v = std::stoul(clean);
            if (v >= field->q()) fail(Errc::parse_error, "coefficient out of range: " + clean);
            hi_to_lo.push_back(static_cast<std::uint32_t>(v));
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail(Errc::parse_error, "bad coefficient: " + clean);
        }
    }
    if (hi_to_lo.empty()) fail(Errc::parse_error, "empty polynomial text");
    return from_indices(std::move(field), {hi_to_lo.rbegin(), hi_to_lo.rend()});
}

std::uint64_t monic_count(const FieldDesc& f, int n) {
    if (n < 0) fail(Errc::invalid_argument, "negative degree");
    return pow_u64(f.q(), static_cast<unsigned>(n));
}

Poly monic_from_index(FieldDesc::Ptr field, int n, std::uint64_t idx) {
    const std::uint64_t q = field->q();
    std::vector<std::uint32_t> c(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(idx % q);
        idx /= q;
    }
    if (idx != 0) fail(Errc::invalid_argument, "monic index out of range");
    c[static_cast<std::size_t>(n)] = 1;
    return Poly::from_indices(std::move(field), std::move(c));
}

std::uint64_t monic_to_index(const Poly& a) {
    if (!a.is_monic()) fail(Errc::not_monic, "monic index of non-monic polynomial");
    const std::uint64_t q = a.field().q();
    std::uint64_t idx = 0;
    for (int i = a.deg() - 1; i >= 0; --i) idx = idx * q + a.coeff_index(i);
    return idx;
}

MonicRange::MonicRange(FieldDesc::Ptr field, int n, const ResourceCap& cap)
    : f_(std::move(field)), n_(n), count_(monic_count(*f_, n)) {
    cap.check(count_, "enumerate monic degree " + std::to_string(n));
}

}  // namespace ffc
