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

#include "factor.hpp"

#include <algorithm>
#include <map>

namespace ffc {
namespace {

bool is_prime_int(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

/// f must have zero derivative; returns g with g^p = f.
Poly pth_root(const Poly& f) {
    const FieldDesc& fd = f.field();
    const std::uint32_t p = fd.p();
    std::vector<std::uint32_t> c(static_cast<std::size_t>(f.deg() / static_cast<int>(p)) + 1, 0);
    for (int i = 0; i <= f.deg(); ++i) {
        const std::uint32_t ci = f.coeff_index(i);
        if (ci == 0) continue;
        if (i % static_cast<int>(p) != 0) fail(Errc::internal_error, "pth_root of non p-th power");
        // inverse Frobenius: a -> a^(p^(d-1))
        std::uint32_t root = ci;
        for (std::uint32_t k = 0; k + 1 < fd.d(); ++k) root = fd.pow(root, p);
        c[static_cast<std::size_t>(i / static_cast<int>(p))] = root;
    }
    return Poly::from_indices(f.field_ptr(), std::move(c));
}

/// T^(q^i) mod f for i = 1..upto.
std::vector<Poly> frobenius_powers(const Poly& f, int upto) {
    std::vector<Poly> h;
    h.reserve(static_cast<std::size_t>(upto));
    Poly cur = Poly::t(f.field_ptr()) % f;
    for (int i = 0; i < upto; ++i) {
        cur = powmod(cur, f.field().q(), f);
        h.push_back(cur);
    }
    return h;
}

/// (monic squarefree product of equal-degree irreducibles, that degree)
std::vector<std::pair<Poly, int>> distinct_degree_split(Poly g) {
    std::vector<std::pair<Poly, int>> out;
    const Poly t = Poly::t(g.field_ptr());
    Poly h = t % g;
    int d = 0;
    while (g.deg() > 0) {
        ++d;
        if (2 * d > g.deg()) {
            out.emplace_back(g, g.deg());
            break;
        }
        h = powmod(h, g.field().q(), g);
        Poly gd = gcd(h - t, g);
        if (gd.deg() > 0) {
            out.emplace_back(gd, d);
            g = g / gd;
            h = h % g;
        }
    }
    return out;
}

std::uint64_t poly_hash(const Poly& a) {
    SplitMix64 h(0xFFC1C7E5u ^ (a.field().q() << 8));
    std::uint64_t acc = h.next();
    for (auto c : a.coeff_indices()) {
        SplitMix64 step(acc ^ c);
        acc = step.next();
    }
    return acc;
}

Poly random_poly_below(const FieldDesc::Ptr& field, int deg_bound, SplitMix64& rng) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg_bound), 0);
    for (auto& ci : c) ci = static_cast<std::uint32_t>(rng.below(field->q()));
    return Poly::from_indices(field, std::move(c));
}

/// Equal-degree splitting of a squarefree product of degree-d irreducibles.
/// Seeded from the input polynomial, so results are deterministic.
void equal_degree_split(const Poly& g, int d, std::vector<Poly>& out) {
    if (g.deg() == d) {
        out.push_back(g.monicized());
        return;
    }
    const FieldDesc::Ptr& field = g.field_ptr();
    SplitMix64 rng(poly_hash(g));
    const std::uint32_t p = field->p();
    for (;;) {
        Poly a = random_poly_below(field, g.deg(), rng);
        if (a.deg() < 1) continue;
        Poly u = gcd(a, g);
        if (u.deg() == 0 || u.deg() == g.deg()) {
            if (p == 2) {
                // char 2: additive trace map sum a^(2^i), i < log2(q^d)
                std::uint64_t bits = 1;
                std::uint64_t qd = pow_u64(field->q(), static_cast<unsigned>(d));
                unsigned m = 0;
                while (bits < qd) {
                    bits <<= 1;
                    ++m;
                }
                Poly acc = a % g;
                Poly term = a % g;
                for (unsigned i = 1; i < m; ++i) {
                    term = (term * term) % g;
                    acc = acc + term;
                }
                u = gcd(acc, g);
            } else {
                const std::uint64_t e = (pow_u64(field->q(), static_cast<unsigned>(d)) - 1) / 2;
                Poly b = powmod(a, e, g);
                u = gcd(b - Poly::one(field), g);
            }
        }
        if (u.deg() > 0 && u.deg() < g.deg()) {
            equal_degree_split(u.monicized(), d, out);
            equal_degree_split((g / u).monicized(), d, out);
            return;
        }
    }
}

/// (squarefree monic part, multiplicity) pairs; parts pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    const std::uint32_t p = f.field().p();
    int e = 1;
    while (f.deg() > 0) {
        Poly fp = f.derivative();
        if (fp.is_zero()) {
            f = pth_root(f);
            e *= static_cast<int>(p);
            continue;
        }
        Poly g = gcd(f, fp);
        Poly w = f / g;
        int i = 1;
        while (w.deg() > 0) {
            Poly y = gcd(w, g);
            Poly z = w / y;
            if (z.deg() > 0) out.emplace_back(z.monicized(), e * i);
            w = y;
            g = g / y;
            ++i;
        }
        f = g.monicized();
    }
    return out;
}

void sort_factors(std::vector<std::pair<Poly, int>>& factors) {
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        return Poly::compare(a.first, b.first) < 0;
    });
}

}  // namespace

Poly Factorization::product(const FieldDesc::Ptr& field) const {
    Poly r = Poly::constant(field, unit.index());
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

bool is_irreducible(const Poly& a) {
    if (a.is_constant()) fail(Errc::constant_input, "irreducibility of a constant");
    const Poly f = a.monicized();
    const int n = f.deg();
    if (n == 1) return true;
    const Poly t = Poly::t(f.field_ptr());
    const auto h = frobenius_powers(f, n);  // h[i-1] = T^(q^i) mod f
    if (!(h[static_cast<std::size_t>(n - 1)] - (t % f)).is_zero()) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_prime_int(r)) continue;
        if (gcd(h[static_cast<std::size_t>(n / r - 1)] - t, f).deg() != 0) return false;
    }
    return true;
}

Factorization factorize(const Poly& a) {
    if (a.is_zero()) fail(Errc::zero_input, "factorization of zero");
    Factorization result{a.leading(), {}};
    if (a.is_constant()) return result;
    const Poly m = a.monicized();
    for (const auto& [sqfree, mult] : squarefree_decomposition(m)) {
        for (const auto& [prod, d] : distinct_degree_split(sqfree)) {
            std::vector<Poly> primes;
            equal_degree_split(prod, d, primes);
            for (auto& p : primes) result.factors.emplace_back(std::move(p), mult);
        }
    }
    sort_factors(result.factors);
    return result;
}

Factorization factorize_trial(const Poly& a) {
    if (a.is_zero()) fail(Errc::zero_input, "factorization of zero");
    Factorization result{a.leading(), {}};
    Poly rem = a.monicized();
    for (int d = 1; 2 * d <= rem.deg(); ++d) {
        const std::uint64_t count = monic_count(rem.field(), d);
        for (std::uint64_t i = 0; i < count && 2 * d <= rem.deg(); ++i) {
            const Poly cand = monic_from_index(rem.field_ptr(), d, i);
            int mult = 0;
            for (;;) {
                auto [q, r] = divmod(rem, cand);
                if (!r.is_zero()) break;
                rem = q;
                ++mult;
            }
            if (mult > 0) result.factors.emplace_back(cand, mult);
        }
    }
    if (rem.deg() > 0) result.factors.emplace_back(rem, 1);
    sort_factors(result.factors);
    return result;
}

int mobius(const Poly& f) {
    if (f.is_zero()) fail(Errc::zero_input, "mobius of zero");
    if (!f.is_monic()) fail(Errc::not_monic, "mobius needs a monic polynomial");
    if (f.is_one()) return 1;
    const auto fac = factorize(f);
    for (const auto& [p, e] : fac.factors)
        if (e > 1) return 0;
    return fac.factors.size() % 2 == 0 ? 1 : -1;
}

int lambda_deg(const Poly& f) {
    if (f.is_zero()) fail(Errc::zero_input, "lambda of zero");
    if (!f.is_monic()) fail(Errc::not_monic, "lambda needs a monic polynomial");
    if (f.deg() == 0) return 0;

    // Prime-power probe without full factorization: strip p-th powers, peel
    // one gcd, then verify the candidate by exact division.
    Poly g = f;
    while (g.derivative().is_zero()) g = pth_root(g);
    Poly candidate(f.field_ptr());
    const Poly h = gcd(g, g.derivative());
    candidate = h.deg() == 0 ? g : (g / h).monicized();
    if (candidate.deg() == 0 || !is_irreducible(candidate)) return 0;
    Poly rem = f;
    while (rem.deg() > 0) {
        auto [q, r] = divmod(rem, candidate);
        if (!r.is_zero()) return 0;
        rem = q;
    }
    return rem.is_one() ? candidate.deg() : 0;
}

std::uint64_t phi_count(const Poly& h) {
    if (h.is_zero()) fail(Errc::zero_input, "phi of zero");
    if (h.is_constant()) return 1;
    const std::uint64_t q = h.field().q();
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factorize(h).factors) {
        const auto dp = static_cast<unsigned>(p.deg());
        phi *= pow_u64(q, dp * static_cast<unsigned>(e)) - pow_u64(q, dp * static_cast<unsigned>(e - 1));
    }
    return phi;
}

int max_irred_degree(const Poly& a) {
    if (a.is_zero()) fail(Errc::zero_input, "D of zero");
    if (a.is_constant()) return 0;
    int best = 0;
    for (const auto& [p, e] : factorize(a).factors) best = std::max(best, p.deg());
    return best;
}

std::uint64_t count_irreducibles(const FieldDesc& f, int n) {
    if (n < 1) fail(Errc::invalid_argument, "irreducible count needs n >= 1");
    // distinct prime divisors of n
    std::vector<int> primes;
    int m = n;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) primes.push_back(m);

    std::int64_t total = 0;
    const auto np = static_cast<unsigned>(primes.size());
    for (unsigned mask = 0; mask < (1u << np); ++mask) {
        int d = 1;
        for (unsigned b = 0; b < np; ++b)
            if (mask & (1u << b)) d *= primes[b];
        const int sign = (__builtin_popcount(mask) % 2 == 0) ? 1 : -1;
        total += sign * static_cast<std::int64_t>(pow_u64(f.q(), static_cast<unsigned>(n / d)));
    }
    if (total % n != 0 || total < 0) fail(Errc::internal_error, "irreducible count not integral");
    return static_cast<std::uint64_t>(total / n);
}

std::vector<Poly> divisors(const Poly& a) {
    if (a.is_zero()) fail(Errc::zero_input, "divisors of zero");
    const auto fac = factorize(a);
    std::vector<Poly> out{Poly::one(a.field_ptr())};
    for (const auto& [p, e] : fac.factors) {
        const std::size_t base = out.size();
        Poly power = Poly::one(a.field_ptr());
        for (int k = 1; k <= e; ++k) {
            power = power * p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Poly& x, const Poly& y) { return Poly::compare(x, y) < 0; });
    return out;
}

std::vector<Poly> irreducibles(FieldDesc::Ptr field, int n, const ResourceCap& cap) {
    std::vector<Poly> out;
    if (n == 0) return out;  // no irreducible constants
    for (const Poly& f : MonicRange(field, n, cap))
        if (is_irreducible(f)) out.push_back(f);
    return out;
}

}  // namespace ffc
