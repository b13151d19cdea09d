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

#include "circle.hpp"

#include <algorithm>
#include <cmath>

namespace ffc {
namespace {

void check_scalars(const FieldElement& alpha, const FieldElement& beta) {
    if (alpha.is_zero() || beta.is_zero())
        fail(Errc::scalar_sum_not_one, "scalars must be nonzero");
    const FieldElement sum = alpha + beta;
    if (sum.index() != 1)
        fail(Errc::scalar_sum_not_one,
             "alpha + beta must equal 1; otherwise no monic target is representable");
}

void check_va00(const LaurentPoint& xi, const Poly& A, const Poly& B) {
    if (!B.is_monic() || B.deg() < 1)
        fail(Errc::precondition_violated, "denominator must be monic and nonconstant");
    if (gcd(A, B).deg() != 0) fail(Errc::precondition_violated, "A and B must be coprime");
    const LaurentPoint gamma = xi - LaurentPoint::from_rational(A, B);
    if (gamma.abs_exponent() > QExp(-2LL * B.deg()))
        fail(Errc::precondition_violated, "|gamma| exceeds |B|^-2");
}

}  // namespace

PolySet PolySet::empty(FieldDesc::Ptr field, int n, const ResourceCap& cap) {
    const std::uint64_t count = monic_count(*field, n);
    cap.check(count, "polynomial set universe");
    return PolySet(std::move(field), n, count);
}

PolySet PolySet::all(FieldDesc::Ptr field, int n, const ResourceCap& cap) {
    PolySet s = empty(std::move(field), n, cap);
    s.bits_.assign(s.bits_.size(), true);
    s.card_ = s.bits_.size();
    return s;
}

PolySet PolySet::random_subset(FieldDesc::Ptr field, int n, std::uint64_t size, std::uint64_t seed,
                               const ResourceCap& cap) {
    PolySet s = empty(std::move(field), n, cap);
    const std::uint64_t total = s.bits_.size();
    if (size > total)
        fail(Errc::size_too_large, "requested " + std::to_string(size) + " of " + std::to_string(total));
    std::vector<std::uint64_t> idx(total);
    for (std::uint64_t i = 0; i < total; ++i) idx[i] = i;
    SplitMix64 rng(seed);
    for (std::uint64_t i = 0; i < size; ++i) {
        const std::uint64_t pick = i + rng.below(total - i);
        std::swap(idx[i], idx[pick]);
        s.insert_index(idx[i]);
    }
    return s;
}

bool PolySet::contains(const Poly& a) const {
    if (!a.is_monic() || a.deg() != n_) return false;
    return bits_[monic_to_index(a)];
}

void PolySet::insert_index(std::uint64_t idx) {
    if (!bits_[idx]) {
        bits_[idx] = true;
        ++card_;
    }
}

bool PolySet::insert(const Poly& a) {
    if (!a.is_monic() || a.deg() != n_)
        fail(Errc::invalid_argument, "set members must be monic of degree " + std::to_string(n_));
    const std::uint64_t idx = monic_to_index(a);
    if (bits_[idx]) return false;
    insert_index(idx);
    return true;
}

std::vector<std::uint64_t> PolySet::indices() const {
    std::vector<std::uint64_t> out;
    out.reserve(card_);
    for (std::uint64_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(i);
    return out;
}

std::uint64_t u_count(const Poly& g, const PolySet& A, const PolySet& B, const FieldElement& alpha,
                      const FieldElement& beta) {
    check_scalars(alpha, beta);
    if (!g.is_monic() || g.deg() != A.degree())
        fail(Errc::invalid_argument, "target must be monic of the sets' degree");
    const FieldDesc::Ptr& field = g.field_ptr();
    const std::uint32_t beta_inv = field->inv(beta.index());
    std::uint64_t count = 0;
    for (const std::uint64_t ai : A.indices()) {
        const Poly a = monic_from_index(field, A.degree(), ai);
        // b = beta^-1 (g - alpha a); monic of the right degree since alpha+beta=1
        const Poly b = (g - a.scaled(alpha.index())).scaled(beta_inv);
        if (B.contains(b)) ++count;
    }
    return count;
}

int v_indicator(const Poly& g, int j) {
    if (!g.is_monic()) fail(Errc::not_monic, "indicator needs a monic polynomial");
    const int n = g.deg();
    if (j < 0 || j >= n) fail(Errc::invalid_argument, "need 0 <= j < n");
    for (const auto& [p, e] : factorize(g).factors)
        if (p.deg() == n - j) return 1;
    return 0;
}

std::uint64_t w_count(const Poly& h, int j, int k, const ResourceCap& cap) {
    if (!h.is_monic()) fail(Errc::not_monic, "w needs a monic polynomial");
    const int n = h.deg();
    if (j < 0 || k < 0 || j + k != n) fail(Errc::invalid_argument, "need j + k = deg h");
    const FieldDesc::Ptr& field = h.field_ptr();
    const int ell = n - k;  // compared coefficient count
    const auto irred = irreducibles(field, n - j, cap);
    cap.check(monic_count(*field, j) * irred.size(), "w enumeration");
    std::uint64_t count = 0;
    for (const Poly& c : MonicRange(field, j, cap)) {
        for (const Poly& p : irred) {
            const Poly prod = c * p;
            bool match = true;
            for (int s = 1; s <= ell; ++s)
                if (prod.coeff_index(n - s) != h.coeff_index(n - s)) {
                    match = false;
                    break;
                }
            if (match) ++count;
        }
    }
    return count;
}

CycloValue f_set_eval(const LaurentPoint& xi, const PolySet& S, const FieldElement& scalar,
                      const ResourceCap& cap) {
    cap.check(S.size(), "exponential sum over set");
    CycloValue acc = CycloValue::zero(xi.field().p());
    const FieldDesc::Ptr& field = S.field_ptr();
    for (const std::uint64_t idx : S.indices()) {
        const Poly s = monic_from_index(field, S.degree(), idx).scaled(scalar.index());
        acc += e_times(xi, s);
    }
    return acc;
}

CycloValue f_set_eval(const LaurentPoint& xi, const std::vector<Poly>& S, const FieldElement& scalar) {
    CycloValue acc = CycloValue::zero(xi.field().p());
    for (const Poly& s : S) acc += e_times(xi, s.scaled(scalar.index()));
    return acc;
}

CycloValue geometric_sum_closed_form(const LaurentPoint& xi, int k) {
    if (k < 1) fail(Errc::invalid_argument, "need k >= 1");
    const std::uint32_t p = xi.field().p();
    if (!(xi.dist_exponent() < -static_cast<long long>(k))) return CycloValue::zero(p);
    const auto qk = static_cast<std::int64_t>(pow_u64(xi.field().q(), static_cast<unsigned>(k)));
    return e_times(xi, Poly::t_power(xi.field_ptr(), k)).scaled(qk);
}

CorrelationReport correlation(const PolySet& A, const PolySet& B, const FieldElement& alpha,
                              const FieldElement& beta, int j, const ResourceCap& cap) {
    check_scalars(alpha, beta);
    const int n = A.degree();
    if (B.degree() != n) fail(Errc::invalid_argument, "sets must share a degree");
    if (j < 1 || j >= n) fail(Errc::j_out_of_range, "need 1 <= j < n");
    const FieldDesc::Ptr& field = A.field_ptr();
    const int k = n - j;

    CorrelationReport rep;
    rep.n = n;
    rep.j = j;
    rep.k = k;
    rep.threshold = n - j;
    rep.card_a = A.size();
    rep.card_b = B.size();

    const std::uint64_t universe = monic_count(*field, n);
    cap.check(universe, "correlation tables");
    cap.check(A.size() * B.size(), "correlation pair loop");

    // u_G by one pass over A x B: each pair lands on exactly one monic G.
    rep.u.assign(universe, 0);
    const auto a_indices = A.indices();
    const auto b_indices = B.indices();
    for (const std::uint64_t ai : a_indices) {
        const Poly a = monic_from_index(field, n, ai).scaled(alpha.index());
        for (const std::uint64_t bi : b_indices) {
            const Poly g = a + monic_from_index(field, n, bi).scaled(beta.index());
            rep.u[monic_to_index(g)] += 1;
        }
    }

    // v_G and the D(G) >= n-j cut from one factorization per G
    rep.v.assign(universe, 0);
    std::uint64_t correlation_sum = 0;
    for (std::uint64_t gi = 0; gi < universe; ++gi) {
        const Poly g = monic_from_index(field, n, gi);
        int has_exact = 0, dmax = 0;
        for (const auto& [p, e] : factorize(g).factors) {
            if (p.deg() == n - j) has_exact = 1;
            dmax = std::max(dmax, p.deg());
        }
        rep.v[gi] = static_cast<std::uint8_t>(has_exact);
        if (has_exact) correlation_sum += rep.u[gi];
        if (dmax >= rep.threshold) rep.pair_count += rep.u[gi];
        rep.sum_u += rep.u[gi];
    }
    rep.correlation = correlation_sum;

    // w_G buckets from one pass over S = M_j x I_{n-j}; the class of G under
    // "first n-k coefficients" determines w_G.
    const std::uint64_t lead_buckets = pow_u64(field->q(), static_cast<unsigned>(n - k));
    std::vector<std::uint64_t> buckets(lead_buckets, 0);
    const auto irred = irreducibles(field, n - j, cap);
    cap.check(monic_count(*field, j) * irred.size(), "w enumeration");
    auto lead_key = [&](const Poly& g) {
        std::uint64_t key = 0;
        for (int s = 1; s <= n - k; ++s) key = key * field->q() + g.coeff_index(n - s);
        return key;
    };
    for (const Poly& c : MonicRange(field, j, cap))
        for (const Poly& p : irred) buckets[lead_key(c * p)] += 1;

    rep.w.assign(universe, 0);
    long long uw = 0;
    for (std::uint64_t gi = 0; gi < universe; ++gi) {
        const Poly g = monic_from_index(field, n, gi);
        rep.w[gi] = buckets[lead_key(g)];
        uw += static_cast<long long>(rep.u[gi]) * static_cast<long long>(rep.w[gi]);
    }
    rep.i1 = Rational(uw, static_cast<long long>(pow_u64(field->q(), static_cast<unsigned>(k))));
    rep.i2 = Rational::integer(static_cast<long long>(rep.correlation)) - rep.i1;
    return rep;
}

VaughanTerms vaughan_check(const Poly& F, double y, double z) {
    if (F.is_zero()) fail(Errc::zero_input, "zero polynomial");
    if (!F.is_monic()) fail(Errc::not_monic, "needs a monic polynomial");
    if (!(y > 1.0) || !(z > 1.0)) fail(Errc::invalid_argument, "cutoffs must exceed 1");
    if (!(static_cast<double>(F.deg()) > z))
        fail(Errc::degree_too_small, "identity requires deg F > z");

    const auto divs = divisors(F);
    long long term1 = 0, term2 = 0, term3 = 0;
    for (const Poly& g : divs) {
        const int mu_g = mobius(g);
        if (mu_g == 0) continue;
        if (static_cast<double>(g.deg()) <= y)
            term1 += static_cast<long long>(mu_g) * (F.deg() - g.deg());
        const Poly cofactor = F / g;
        for (const Poly& h : divisors(cofactor)) {
            const int lam = lambda_deg(h);
            if (lam == 0) continue;
            if (static_cast<double>(g.deg()) <= y && static_cast<double>(h.deg()) <= z)
                term2 += static_cast<long long>(mu_g) * lam;
            if (static_cast<double>(g.deg()) > y && static_cast<double>(h.deg()) > z)
                term3 += static_cast<long long>(mu_g) * lam;
        }
    }
    return VaughanTerms{lambda_deg(F), term1, term2, term3};
}

BoundCheck bilinear_bound_check(const LaurentPoint& xi, const Poly& A, const Poly& B, int k, int ell,
                                const ResourceCap& cap) {
    if (k < 1 || ell < 1) fail(Errc::precondition_violated, "need k, ell >= 1");
    check_va00(xi, A, B);
    const FieldDesc::Ptr& field = xi.field_ptr();
    const std::uint64_t q = field->q();
    cap.check(pow_u64(q, static_cast<unsigned>(k + ell)), "bilinear sum");

    double lhs = 0.0;
    for (const Poly& g : MonicRange(field, ell, cap)) {
        CycloValue inner = CycloValue::zero(field->p());
        const LaurentPoint xig = xi.times(g);
        for (const Poly& h : MonicRange(field, k, cap)) inner += e_times(xig, h);
        lhs += inner.abs();
    }
    const double qb = static_cast<double>(pow_u64(q, static_cast<unsigned>(B.deg())));
    const double rhs = static_cast<double>(pow_u64(q, static_cast<unsigned>(k + ell))) / qb +
                       static_cast<double>(pow_u64(q, static_cast<unsigned>(ell))) + qb;
    return BoundCheck{lhs, rhs, lhs / rhs};
}

BoundCheck irred_sum_bound_check(const LaurentPoint& xi, const Poly& A, const Poly& B, int n,
                                 const ResourceCap& cap) {
    if (n < 1) fail(Errc::invalid_argument, "need n >= 1");
    check_va00(xi, A, B);
    const FieldDesc::Ptr& field = xi.field_ptr();
    CycloValue acc = CycloValue::zero(field->p());
    for (const Poly& p : irreducibles(field, n, cap)) acc += e_times(xi, p);
    const double lhs = acc.abs();
    const double q = static_cast<double>(field->q());
    const double qb = std::pow(q, B.deg());
    const double rhs = std::pow(n, 1.5) * (std::pow(q, n) / std::sqrt(qb) + std::pow(q, 0.8 * n) +
                                           std::sqrt(qb) * std::pow(q, (n + 1) / 2.0));
    return BoundCheck{lhs, rhs, lhs / rhs};
}

FsBoundReport fs_bound_check(FieldDesc::Ptr field, int n, int j, int k, const FsSampleSpec& spec,
                             const ResourceCap& cap) {
    if (j < 1 || j >= n) fail(Errc::j_out_of_range, "need 1 <= j < n");
    if (k < 1) fail(Errc::invalid_argument, "need k >= 1");
    const double q = static_cast<double>(field->q());

    FsBoundReport rep;
    rep.n = n;
    rep.j = j;
    rep.k = k;
    rep.hypothesis_holds = j < n / 7.0 - 4.0 * log_base_trunc(n, q) - 3.0 / 7.0;
    rep.k_condition_holds = k <= n - j / 2.0;
    rep.bound_vacuous = j == 1;  // log 1 = 0

    // S = { C P } as explicit polynomials
    std::vector<Poly> members;
    const auto irred = irreducibles(field, n - j, cap);
    cap.check(monic_count(*field, j) * irred.size(), "f_S members");
    for (const Poly& c : MonicRange(field, j, cap))
        for (const Poly& p : irred) members.push_back(c * p);

    const double bound = rep.bound_vacuous
                             ? 0.0
                             : std::log(static_cast<double>(j)) / n * std::pow(q, n - j);
    const FieldElement one = field->one();

    SplitMix64 rng(spec.seed);
    for (std::uint64_t trial = 0; trial < spec.count; ++trial) {
        const int dv = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.max_den_degree)));
        const Poly den = monic_from_index(field, dv, rng.below(monic_count(*field, dv)));
        std::vector<std::uint32_t> numc(static_cast<std::size_t>(dv), 0);
        for (auto& c : numc) c = static_cast<std::uint32_t>(rng.below(field->q()));
        const Poly num = Poly::from_indices(field, std::move(numc));
        const LaurentPoint xi = LaurentPoint::from_rational(num, den);
        // domain: |xi| >= q^-k
        if (xi.abs_exponent() < -static_cast<long long>(k)) {
            ++rep.rejected;
            continue;
        }
        const double fs = f_set_eval(xi, members, one).abs();
        const double ratio = rep.bound_vacuous ? 0.0 : fs / bound;
        rep.samples.push_back(FsSample{xi, fs, bound, ratio});
        rep.max_ratio = std::max(rep.max_ratio, ratio);
    }
    return rep;
}

}  // namespace ffc
