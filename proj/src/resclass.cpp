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

#include "resclass.hpp"

#include <algorithm>
#include <cmath>

namespace ffc {
namespace {

void check_modulus(const Poly& h) {
    if (h.is_zero()) fail(Errc::zero_input, "zero modulus");
    if (!h.is_monic()) fail(Errc::not_monic, "modulus must be monic");
}

/// Packs the lead-coefficient vector as a base-q integer (first coefficient
/// most significant) for bucket indexing.
std::uint64_t pack_lead(const std::vector<std::uint32_t>& lead, std::uint64_t q) {
    std::uint64_t v = 0;
    for (auto c : lead) v = v * q + c;
    return v;
}

std::uint64_t poly_mod_index(const Poly& a, const Poly& h) {
    // residues mod h indexed by base-q packing, constant term least significant
    const Poly r = a % h;
    const std::uint64_t q = a.field().q();
    std::uint64_t idx = 0;
    for (int i = std::max(h.deg() - 1, 0); i >= 0; --i) idx = idx * q + r.coeff_index(i);
    return idx;
}

Poly poly_from_mod_index(const FieldDesc::Ptr& field, int deg_bound, std::uint64_t idx) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(std::max(deg_bound, 0)), 0);
    for (int i = 0; i < deg_bound; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(idx % field->q());
        idx /= field->q();
    }
    return Poly::from_indices(field, std::move(c));
}

}  // namespace

ResidueKey residue_key(const Poly& a, int ell, const Poly& h, int n) {
    if (!a.is_monic() || a.deg() != n) fail(Errc::not_monic, "key needs a monic polynomial of the reference degree");
    check_modulus(h);
    if (ell < 0) fail(Errc::invalid_argument, "negative coefficient count");
    std::vector<std::uint32_t> lead(static_cast<std::size_t>(ell), 0);
    for (int s = 1; s <= ell; ++s) lead[static_cast<std::size_t>(s - 1)] = a.coeff_index(n - s);
    return ResidueKey{ell, h, std::move(lead), a % h};
}

bool is_invertible(const Poly& a, const Poly& h) { return gcd(a, h).deg() == 0 || h.is_one(); }

std::uint64_t group_size(const FieldDesc& f, int ell, const Poly& h) {
    check_modulus(h);
    return pow_u64(f.q(), static_cast<unsigned>(ell)) * phi_count(h);
}

ClassCount count_irred_in_class(int n, const ResidueKey& key, const ResourceCap& cap) {
    if (n < 1) fail(Errc::invalid_argument, "degree must be >= 1");
    const FieldDesc::Ptr& field = key.h.field_ptr();
    const bool invertible = is_invertible(key.residue, key.h);

    std::uint64_t count = 0;
    for (const Poly& f : MonicRange(field, n, cap)) {
        if (!is_irreducible(f)) continue;
        if (residue_key(f, key.ell, key.h, n) == key) ++count;
    }
    const auto denom = static_cast<long long>(
        static_cast<std::uint64_t>(n) * pow_u64(field->q(), static_cast<unsigned>(key.ell)) *
        phi_count(key.h));
    const Rational main(static_cast<long long>(pow_u64(field->q(), static_cast<unsigned>(n))), denom);
    return ClassCount{count, main, invertible};
}

std::vector<std::uint64_t> irreducible_indices(FieldDesc::Ptr field, int n, const ResourceCap& cap) {
    std::vector<std::uint64_t> out;
    const std::uint64_t count = monic_count(*field, n);
    cap.check(count, "enumerate monic degree " + std::to_string(n));
    for (std::uint64_t i = 0; i < count; ++i)
        if (is_irreducible(monic_from_index(field, n, i))) out.push_back(i);
    return out;
}

DiscrepancyReport class_discrepancy_report(FieldDesc::Ptr field, int n, int ell, const Poly& h,
                                           const ResourceCap& cap) {
    return class_discrepancy_report(field, n, ell, h, irreducible_indices(field, n, cap), cap);
}

DiscrepancyReport class_discrepancy_report(FieldDesc::Ptr field, int n, int ell, const Poly& h,
                                           const std::vector<std::uint64_t>& irred,
                                           const ResourceCap& cap) {
    if (n < 1) fail(Errc::invalid_argument, "degree must be >= 1");
    check_modulus(h);
    if (ell < 0) fail(Errc::invalid_argument, "negative coefficient count");

    const std::uint64_t q = field->q();
    const std::uint64_t lead_buckets = pow_u64(q, static_cast<unsigned>(ell));
    const std::uint64_t mod_buckets = pow_u64(q, static_cast<unsigned>(std::max(h.deg(), 0)));
    cap.check(lead_buckets * mod_buckets, "residue class buckets");

    // one bucketing pass over I_n
    std::vector<std::uint64_t> buckets(lead_buckets * mod_buckets, 0);
    std::uint64_t total = 0;
    for (const std::uint64_t idx : irred) {
        const Poly f = monic_from_index(field, n, idx);
        ++total;
        std::vector<std::uint32_t> lead(static_cast<std::size_t>(ell), 0);
        for (int s = 1; s <= ell; ++s) lead[static_cast<std::size_t>(s - 1)] = f.coeff_index(n - s);
        buckets[pack_lead(lead, q) * mod_buckets + poly_mod_index(f, h)] += 1;
    }

    const std::uint64_t phi = phi_count(h);
    const auto main_den = static_cast<long long>(static_cast<std::uint64_t>(n) * lead_buckets * phi);
    const Rational main(static_cast<long long>(pow_u64(q, static_cast<unsigned>(n))), main_den);
    const double norm_denominator = std::max(ell + h.deg(), 1) *
                                    std::pow(static_cast<double>(q), n / 2.0) / n *
                                    static_cast<double>(pow_u64(q, static_cast<unsigned>(std::max(h.deg(), 0)))) /
                                    static_cast<double>(phi);

    DiscrepancyReport report{n, ell, h, total, 0, {}, 0.0};
    for (std::uint64_t li = 0; li < lead_buckets; ++li) {
        std::vector<std::uint32_t> lead(static_cast<std::size_t>(ell), 0);
        std::uint64_t v = li;
        for (int s = ell; s >= 1; --s) {
            lead[static_cast<std::size_t>(s - 1)] = static_cast<std::uint32_t>(v % q);
            v /= q;
        }
        for (std::uint64_t mi = 0; mi < mod_buckets; ++mi) {
            const Poly residue = poly_from_mod_index(field, h.deg(), mi);
            const std::uint64_t count = buckets[li * mod_buckets + mi];
            if (!is_invertible(residue, h)) {
                report.noninvertible_count += count;
                continue;
            }
            const double abs_err = std::fabs(static_cast<double>(count) - main.to_double());
            const double norm_err = abs_err / norm_denominator;
            report.rows.push_back(DiscrepancyRow{lead, residue, count, main, abs_err, norm_err});
            report.max_normalized_error = std::max(report.max_normalized_error, norm_err);
        }
    }
    return report;
}

}  // namespace ffc
