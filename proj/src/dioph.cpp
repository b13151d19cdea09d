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

#include "dioph.hpp"

namespace ffc {
namespace {

QExp approx_error_exponent(const LaurentPoint& xi, const Poly& g, const Poly& h) {
    // |xi - G/H| = |num*H - G*den| / |den*H|
    const Poly diff = xi.num() * h - g * xi.den();
    if (diff.is_zero()) return QExp::ninf();
    return QExp(diff.deg() - xi.den().deg() - h.deg());
}

}  // namespace

CFExpansion cf_expand(const LaurentPoint& xi) {
    CFExpansion out;
    const FieldDesc::Ptr& field = xi.field_ptr();
    // Euclid on (num, den); quotients past the first have degree >= 1, so
    // convergent denominators strictly increase in degree.
    Poly a = xi.num(), b = xi.den();
    Poly g_prev = Poly::zero(field), g_curr = Poly::one(field);   // G_{-2}, G_{-1}
    Poly h_prev = Poly::one(field), h_curr = Poly::zero(field);   // H_{-2}, H_{-1}
    while (!b.is_zero()) {
        auto [quot, rem] = divmod(a, b);
        out.quotients.push_back(quot);
        Poly g_next = quot * g_curr + g_prev;
        Poly h_next = quot * h_curr + h_prev;
        g_prev = std::move(g_curr);
        h_prev = std::move(h_curr);
        g_curr = std::move(g_next);
        h_curr = std::move(h_next);
        // the stored convergent gets a monic denominator; the raw recurrence
        // values keep rolling unscaled
        const std::uint32_t s = field->inv(h_curr.leading().index());
        out.convergents.emplace_back(g_curr.scaled(s), h_curr.scaled(s));
        a = std::move(b);
        b = std::move(rem);
    }
    return out;
}

RationalApprox dirichlet_approx(const LaurentPoint& xi, int n, DioConvention conv) {
    if (n < 1) fail(Errc::invalid_argument, "approximation window needs n >= 1");
    const int limit = conv.window_limit(n);

    const CFExpansion cf = cf_expand(xi);
    const std::pair<Poly, Poly>* best = nullptr;
    for (const auto& conv_k : cf.convergents) {
        if (conv_k.second.deg() > limit) break;
        best = &conv_k;
    }
    if (best == nullptr)
        fail(Errc::no_approximant,
             "no convergent inside the window: xi=" + xi.str() + " n=" + std::to_string(n) +
                 " convention=" + conv.name());
    const QExp err = approx_error_exponent(xi, best->first, best->second);
    if (!conv.gamma_ok(err, n, best->second.deg()))
        fail(Errc::no_approximant,
             "approximation bound fails: xi=" + xi.str() + " n=" + std::to_string(n) +
                 " convention=" + std::string(conv.name()) + " best=" + best->first.str() + "/" +
                 best->second.str() + " error_exp=" + err.str());
    return RationalApprox{best->first, best->second, err};
}

std::vector<RationalApprox> dirichlet_oracle(const LaurentPoint& xi, int n, DioConvention conv,
                                             const ResourceCap& cap) {
    if (n < 1) fail(Errc::invalid_argument, "approximation window needs n >= 1");
    const int limit = conv.window_limit(n);
    if (limit > 6) fail(Errc::resource_limit, "oracle window too large: deg H up to " + std::to_string(limit));

    std::vector<RationalApprox> found;
    const FieldDesc::Ptr& field = xi.field_ptr();
    for (int dh = 0; dh <= limit; ++dh) {
        const std::uint64_t h_count = monic_count(*field, dh);
        const std::uint64_t g_count = dh == 0 ? 1 : pow_u64(field->q(), static_cast<unsigned>(dh));
        cap.check(h_count * g_count, "dirichlet oracle search");
        for (std::uint64_t hi = 0; hi < h_count; ++hi) {
            const Poly h = monic_from_index(field, dh, hi);
            // all G with |G| < |H| (deg G < dh; only G = 0 when dh = 0)
            for (std::uint64_t gi = 0; gi < g_count; ++gi) {
                Poly g(field);
                if (gi != 0) {
                    std::vector<std::uint32_t> c;
                    std::uint64_t v = gi;
                    while (v != 0) {
                        c.push_back(static_cast<std::uint32_t>(v % field->q()));
                        v /= field->q();
                    }
                    g = Poly::from_indices(field, std::move(c));
                }
                if (gcd(g, h).deg() != 0) continue;
                const QExp err = approx_error_exponent(xi, g, h);
                if (conv.gamma_ok(err, n, dh)) found.push_back(RationalApprox{g, h, err});
            }
        }
    }
    return found;
}

}  // namespace ffc
