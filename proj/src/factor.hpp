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

#ifndef FFC_FACTOR_HPP
#define FFC_FACTOR_HPP

#include <vector>

#include "poly.hpp"

namespace ffc {

/// Unit times monic prime powers, factors sorted by (degree, coefficients
/// from the top down) so all downstream output is byte-reproducible.
struct Factorization {
    FieldElement unit;
    std::vector<std::pair<Poly, int>> factors;

    Poly product(const FieldDesc::Ptr& field) const;
};

/// Distinct-degree criterion (gcds with T^(q^i) - T via modular
/// exponentiation). Input must be nonconstant.
bool is_irreducible(const Poly& a);

/// Squarefree decomposition, then distinct-degree, then equal-degree
/// splitting; deterministic for a given input.
Factorization factorize(const Poly& a);

/// Trial-division factorization; intended as the independent oracle at small
/// degree (cost grows like q^(deg/2)).
Factorization factorize_trial(const Poly& a);

int mobius(const Poly& f);                          // in {-1, 0, 1}; f monic nonzero
int lambda_deg(const Poly& f);                      // deg P when f = P^k, else 0
std::uint64_t phi_count(const Poly& h);             // #(F_q[T]/(h))^x; h != 0
int max_irred_degree(const Poly& a);                // D(a); a != 0, 0 on constants
std::uint64_t count_irreducibles(const FieldDesc& f, int n);  // (1/n) sum mu(d) q^(n/d)

/// All monic divisors, sorted by (degree, coefficients).
std::vector<Poly> divisors(const Poly& a);

/// Monic irreducibles of degree n in canonical order.
std::vector<Poly> irreducibles(FieldDesc::Ptr field, int n, const ResourceCap& cap = {});

}  // namespace ffc

#endif
