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

#include "field.hpp"

#include <algorithm>
#include <sstream>

namespace ffc {
namespace {

// Arithmetic expense is front-loaded into lookup tables up to this size;
// larger fields fall back to digit arithmetic per operation.
constexpr std::uint64_t kTableLimit = 512;

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t f = 2; static_cast<std::uint64_t>(f) * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// --- dense polynomials over F_p (residue vectors, constant term first) ---
// Self-contained so modulus validation does not depend on the Poly layer.

using FpPoly = std::vector<std::uint32_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    fp_trim(r);
    return r;
}

std::uint32_t fp_inv_scalar(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and a != 0.
    std::uint32_t r = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e != 0) {
        if (e & 1) r = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r) * base % p);
        base = static_cast<std::uint32_t>(static_cast<std::uint64_t>(base) * base % p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint32_t p) {
    fp_trim(a);
    const int dm = fp_deg(m);
    const std::uint32_t lead_inv = fp_inv_scalar(m.back(), p);
    while (fp_deg(a) >= dm) {
        const int shift = fp_deg(a) - dm;
        const std::uint32_t c =
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        for (int i = 0; i <= dm; ++i) {
            const std::uint64_t sub = static_cast<std::uint64_t>(c) * m[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        fp_trim(a);
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^e) mod m via iterated p-th powers.
FpPoly fp_frob_power(const FpPoly& m, std::uint32_t p, unsigned e) {
    FpPoly x = {0, 1};
    FpPoly cur = fp_mod(x, m, p);
    for (unsigned step = 0; step < e; ++step) {
        // cur <- cur^p mod m by square-and-multiply on the exponent p.
        FpPoly result = {1};
        FpPoly base = cur;
        std::uint32_t exp = p;
        while (exp != 0) {
            if (exp & 1) result = fp_mod(fp_mul(result, base, p), m, p);
            base = fp_mod(fp_mul(base, base, p), m, p);
            exp >>= 1;
        }
        cur = std::move(result);
    }
    return cur;
}

bool fp_is_irreducible(const FpPoly& f, std::uint32_t p) {
    const int n = fp_deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    // Rabin: x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for prime r | n.
    const FpPoly x = {0, 1};
    auto minus_x = [&](FpPoly v) {
        if (v.size() < 2) v.resize(2, 0);
        v[1] = (v[1] + p - 1) % p;
        fp_trim(v);
        return v;
    };
    FpPoly top = fp_frob_power(f, p, static_cast<unsigned>(n));
    if (minus_x(std::move(top)) != FpPoly{}) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_prime_u32(static_cast<std::uint32_t>(r))) continue;
        FpPoly g = fp_gcd(minus_x(fp_frob_power(f, p, static_cast<unsigned>(n / r))), f, p);
        if (fp_deg(g) != 0) return false;
    }
    return true;
}

}  // namespace

FieldDesc::Ptr FieldDesc::prime(std::uint32_t p) {
    if (!is_prime_u32(p)) fail(Errc::invalid_argument, "field characteristic must be prime: " + std::to_string(p));
    auto f = std::shared_ptr<FieldDesc>(new FieldDesc());
    f->p_ = p;
    f->d_ = 1;
    f->q_ = p;
    f->modulus_ = {0, 1};
    f->init_tables();
    return f;
}

FieldDesc::Ptr FieldDesc::extension(std::uint32_t p, std::uint32_t d,
                                    std::vector<std::uint32_t> modulus_low_to_high) {
    if (!is_prime_u32(p)) fail(Errc::invalid_argument, "field characteristic must be prime: " + std::to_string(p));
    if (d < 1) fail(Errc::invalid_argument, "extension degree must be >= 1");
    if (d == 1) return prime(p);

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        q *= p;
        if (q > (1ULL << 30)) fail(Errc::resource_limit, "field too large");
    }

    FpPoly m = std::move(modulus_low_to_high);
    if (m.empty()) {
        // Default modulus: the monic irreducible of degree d over F_p with the
        // smallest canonical index, so "p^d" spec strings are reproducible.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0;; ++idx) {
            if (idx >= count) fail(Errc::internal_error, "no irreducible modulus found");
            FpPoly cand(d + 1, 0);
            std::uint64_t v = idx;
            for (std::uint32_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            cand[d] = 1;
            if (fp_is_irreducible(cand, p)) {
                m = std::move(cand);
                break;
            }
        }
    } else {
        for (auto& c : m) c %= p;
        if (m.size() != d + 1 || m.back() != 1)
            fail(Errc::invalid_argument, "modulus must be monic of degree d");
        if (!fp_is_irreducible(m, p))
            fail(Errc::invalid_argument, "modulus is not irreducible over F_p");
    }

    auto f = std::shared_ptr<FieldDesc>(new FieldDesc());
    f->p_ = p;
    f->d_ = d;
    f->q_ = q;
    f->modulus_ = std::move(m);
    f->init_tables();
    return f;
}

FieldDesc::Ptr FieldDesc::from_spec(const std::string& spec) {
    const auto caret = spec.find('^');
    if (caret == std::string::npos) {
        // bare "q": a prime, or a prime power with the default modulus
        std::uint64_t v = 0;
        try {
            v = std::stoull(spec);
        } catch (...) {
            fail(Errc::parse_error, "bad field spec: " + spec);
        }
        if (v < 2) fail(Errc::invalid_argument, "field size must be >= 2");
        for (std::uint64_t p = 2; p * p <= v; ++p) {
            if (v % p != 0) continue;
            std::uint32_t d = 0;
            std::uint64_t rest = v;
            while (rest % p == 0) {
                rest /= p;
                ++d;
            }
            if (rest != 1) fail(Errc::invalid_argument, "field size must be a prime power: " + spec);
            return extension(static_cast<std::uint32_t>(p), d, {});
        }
        return prime(static_cast<std::uint32_t>(v));
    }
    const auto slash = spec.find('/', caret);
    std::uint32_t p = 0, d = 0;
    try {
        p = static_cast<std::uint32_t>(std::stoul(spec.substr(0, caret)));
        d = static_cast<std::uint32_t>(std::stoul(
            spec.substr(caret + 1, (slash == std::string::npos ? spec.size() : slash) - caret - 1)));
    } catch (...) {
        fail(Errc::parse_error, "bad field spec: " + spec);
    }
    std::vector<std::uint32_t> modulus;
    if (slash != std::string::npos) {
        // Coefficients are written high-to-low in spec strings.
        std::vector<std::uint32_t> hi_to_lo;
        std::stringstream ss(spec.substr(slash + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                hi_to_lo.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
            } catch (...) {
                fail(Errc::parse_error, "bad modulus coefficient: " + tok);
            }
        }
        modulus.assign(hi_to_lo.rbegin(), hi_to_lo.rend());
    }
    return extension(p, d, std::move(modulus));
}

std::string FieldDesc::spec() const {
    if (d_ == 1) return std::to_string(p_);
    std::string s = std::to_string(p_) + "^" + std::to_string(d_) + "/";
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        s += std::to_string(modulus_[i]);
        if (i != 0) s += ",";
    }
    return s;
}

bool FieldDesc::same(const FieldDesc& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
}

void FieldDesc::init_tables() {
    if (q_ > kTableLimit) return;
    const auto q = static_cast<std::uint32_t>(q_);
    add_tab_.resize(static_cast<std::size_t>(q) * q);
    mul_tab_.resize(static_cast<std::size_t>(q) * q);
    neg_tab_.resize(q);
    inv_tab_.assign(q, 0);
    trace_tab_.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
            // digitwise addition
            std::uint32_t s = 0, pw = 1, x = a, y = b;
            for (std::uint32_t i = 0; i < d_; ++i) {
                s += ((x % p_) + (y % p_)) % p_ * pw;
                x /= p_;
                y /= p_;
                pw *= p_;
            }
            add_tab_[static_cast<std::size_t>(a) * q + b] = s;
            mul_tab_[static_cast<std::size_t>(a) * q + b] = mul_slow(a, b);
        }
    }
    for (std::uint32_t a = 0; a < q; ++a) {
        std::uint32_t n = 0, pw = 1, x = a;
        for (std::uint32_t i = 0; i < d_; ++i) {
            n += (p_ - x % p_) % p_ * pw;
            x /= p_;
            pw *= p_;
        }
        neg_tab_[a] = n;
    }
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b)
            if (mul_tab_[static_cast<std::size_t>(a) * q + b] == 1) {
                inv_tab_[a] = b;
                break;
            }
    has_tables_ = true;  // trace needs mul; flip before computing it
    for (std::uint32_t a = 0; a < q; ++a) {
        std::uint32_t acc = 0;
        std::uint32_t term = a;
        for (std::uint32_t i = 0; i < d_; ++i) {
            acc = add(acc, term);
            term = pow(term, p_);
        }
        if (acc >= p_) fail(Errc::internal_error, "trace not in prime field");
        trace_tab_[a] = acc;
    }
}

std::uint32_t FieldDesc::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (d_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    FpPoly va = decode(a), vb = decode(b);
    fp_trim(va);
    fp_trim(vb);
    FpPoly prod = fp_mod(fp_mul(va, vb, p_), modulus_, p_);
    prod.resize(d_, 0);
    return encode(prod);
}

std::uint32_t FieldDesc::add(std::uint32_t a, std::uint32_t b) const {
    if (has_tables_) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    std::uint32_t s = 0, pw = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        s += ((a % p_) + (b % p_)) % p_ * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return s;
}

std::uint32_t FieldDesc::neg(std::uint32_t a) const {
    if (has_tables_) return neg_tab_[a];
    std::uint32_t s = 0, pw = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        s += (p_ - a % p_) % p_ * pw;
        a /= p_;
        pw *= p_;
    }
    return s;
}

std::uint32_t FieldDesc::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldDesc::mul(std::uint32_t a, std::uint32_t b) const {
    if (has_tables_) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
    return mul_slow(a, b);
}

std::uint32_t FieldDesc::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, base = a;
    while (e != 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldDesc::inv(std::uint32_t a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero field element");
    if (has_tables_) return inv_tab_[a];
    return pow(a, q_ - 2);
}

std::uint32_t FieldDesc::trace(std::uint32_t a) const {
    if (has_tables_) return trace_tab_[a];
    std::uint32_t acc = 0, term = a;
    for (std::uint32_t i = 0; i < d_; ++i) {
        acc = add(acc, term);
        term = pow(term, p_);
    }
    return acc;
}

std::vector<std::uint32_t> FieldDesc::decode(std::uint32_t idx) const {
    std::vector<std::uint32_t> rep(d_);
    for (std::uint32_t i = 0; i < d_; ++i) {
        rep[i] = idx % p_;
        idx /= p_;
    }
    return rep;
}

std::uint32_t FieldDesc::encode(const std::vector<std::uint32_t>& rep) const {
    std::uint32_t idx = 0, pw = 1;
    for (std::uint32_t i = 0; i < d_ && i < rep.size(); ++i) {
        idx += rep[i] % p_ * pw;
        pw *= p_;
    }
    return idx;
}

FieldElement FieldDesc::element(std::uint32_t idx) const { return FieldElement(*this, idx); }
FieldElement FieldDesc::zero() const { return FieldElement(*this, 0); }
FieldElement FieldDesc::one() const { return FieldElement(*this, 1); }

}  // namespace ffc
