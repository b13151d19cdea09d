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

#ifndef FFC_RESCLASS_HPP
#define FFC_RESCLASS_HPP

#include <vector>

#include "factor.hpp"
#include "poly.hpp"

namespace ffc {

/**
 * Class of the equivalence relation pairing "same first ell coefficients
 * relative to a fixed degree n" with "congruent mod h". The degenerate cases
 * ell = 0 and h = 1 fall out naturally (single universal key).
 */
struct ResidueKey {
    int ell;
    Poly h;                          // monic modulus, possibly 1
    std::vector<std::uint32_t> lead; // a_{n-1}, ..., a_{n-ell}; zero-padded past n
    Poly residue;                    // reduced mod h (zero when h = 1)

    friend bool operator==(const ResidueKey& a, const ResidueKey& b) {
        return a.ell == b.ell && a.h == b.h && a.lead == b.lead && a.residue == b.residue;
    }
};

/// Key of a monic degree-n polynomial. The reference degree is explicit:
/// "first ell coefficients" only makes sense relative to it.
ResidueKey residue_key(const Poly& a, int ell, const Poly& h, int n);

/// gcd(a, h) = 1; always true for h = 1.
bool is_invertible(const Poly& a, const Poly& h);

/// #G_{ell,h} = q^ell * Phi(h).
std::uint64_t group_size(const FieldDesc& f, int ell, const Poly& h);

struct ClassCount {
    std::uint64_t count;
    Rational main_term;   // q^n / (n * q^ell * Phi(h))
    bool invertible;      // main term only predicts invertible classes
};

/// Exact count of degree-n irreducibles in the class, by enumeration.
ClassCount count_irred_in_class(int n, const ResidueKey& key, const ResourceCap& cap = {});

struct DiscrepancyRow {
    std::vector<std::uint32_t> lead;
    Poly residue;
    std::uint64_t count;
    Rational main_term;
    double abs_error;
    double normalized_error;
};

struct DiscrepancyReport {
    int n;
    int ell;
    Poly h;
    std::uint64_t irreducible_total;    // #I_n, also the partition check sum
    std::uint64_t noninvertible_count;  // irreducibles landing in non-invertible classes
    std::vector<DiscrepancyRow> rows;   // all invertible keys, canonical order
    double max_normalized_error;
};

/**
 * Exact counts versus the main-term prediction over every invertible class.
 * The normalization denominator is max(ell + deg h, 1) * q^(n/2)/n * |h|/Phi(h);
 * the max(.,1) keeps the universal class (ell = 0, h = 1) meaningful, where
 * the row reduces to the plain prime-counting discrepancy |#I_n - q^n/n|.
 */
DiscrepancyReport class_discrepancy_report(FieldDesc::Ptr field, int n, int ell, const Poly& h,
                                           const ResourceCap& cap = {});

/// Monic indices of I_n within M_n; lets grid drivers bucket one irreducible
/// enumeration many ways.
std::vector<std::uint64_t> irreducible_indices(FieldDesc::Ptr field, int n,
                                               const ResourceCap& cap = {});

/// Same report, reusing a precomputed irreducible index list.
DiscrepancyReport class_discrepancy_report(FieldDesc::Ptr field, int n, int ell, const Poly& h,
                                           const std::vector<std::uint64_t>& irred,
                                           const ResourceCap& cap);

}  // namespace ffc

#endif
