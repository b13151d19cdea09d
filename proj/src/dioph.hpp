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

#ifndef FFC_DIOPH_HPP
#define FFC_DIOPH_HPP

#include <vector>

#include "laurent.hpp"

namespace ffc {

/**
 * Dirichlet approximation window. The source inequalities |H| < q^(n/2) and
 * |xi - G/H| < 1/(|H| q^(n/2)) are ambiguous for even n, so both readings
 * are implemented:
 *
 *  - window_strict = false (default, "floor"): deg H <= floor(n/2);
 *  - window_strict = true ("strict"):          deg H <  n/2.
 *
 * The approximation bound in integer q-exponents: the strict reading of
 * |xi - G/H| < q^(-n/2)/|H| is exactly e <= -floor(n/2) - deg H - 1 for both
 * parities; gamma_strict = false relaxes even n to e <= -n/2 - deg H.
 *
 * The shipped default (floor window + strict gamma) is the one certified by
 * the exhaustive existence/uniqueness suite.
 */
struct DioConvention {
    bool window_strict = false;
    bool gamma_strict = true;

    static DioConvention floor_default() { return {false, true}; }
    static DioConvention strict() { return {true, true}; }

    int window_limit(int n) const {
        return window_strict ? (n + 1) / 2 - 1 : n / 2;
    }
    /// Largest admissible exponent of |xi - G/H| for denominator degree h.
    long long gamma_limit(int n, int h) const {
        if (gamma_strict || n % 2 != 0) return -static_cast<long long>(n / 2) - h - 1;
        return -static_cast<long long>(n / 2) - h;
    }
    bool gamma_ok(QExp e, int n, int h) const {
        return !e.finite() || e.value() <= gamma_limit(n, h);
    }
    const char* name() const { return window_strict ? "strict" : "floor"; }
};

/// Continued fraction of a rational point: partial quotients from the
/// Euclidean algorithm on (num, den), convergents from the standard
/// recurrence, normalized to monic coprime denominators.
struct CFExpansion {
    std::vector<Poly> quotients;
    std::vector<std::pair<Poly, Poly>> convergents;  // (G_k, H_k)
};

CFExpansion cf_expand(const LaurentPoint& xi);

/// G/H with gcd(G,H) = 1, H monic, and |xi - G/H| = q^gamma_exponent.
struct RationalApprox {
    Poly g;
    Poly h;
    QExp gamma_exponent;
};

/// Constructive Dirichlet approximation: the last CF convergent within the
/// window. Throws no_approximant when the convention admits no solution
/// (possible under the strict window).
RationalApprox dirichlet_approx(const LaurentPoint& xi, int n,
                                DioConvention conv = DioConvention::floor_default());

/// Exhaustive search over all (G, H) in the window; the uniqueness oracle.
std::vector<RationalApprox> dirichlet_oracle(const LaurentPoint& xi, int n,
                                             DioConvention conv = DioConvention::floor_default(),
                                             const ResourceCap& cap = {});

}  // namespace ffc

#endif
