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

#include <doctest.h>

#include <cmath>
#include <set>

#include "resclass.hpp"

using namespace ffc;

TEST_CASE("residue keys") {
    auto f3 = FieldDesc::prime(3);
    auto f2 = FieldDesc::prime(2);
    const auto k1 = residue_key(Poly::parse(f3, "T^3+2*T+1"), 1, Poly::t(f3), 3);
    CHECK(k1.lead == std::vector<std::uint32_t>{0});
    CHECK(k1.residue == Poly::one(f3));

    // ell = 0, h = 1: the single universal key
    const auto k2 = residue_key(Poly::parse(f3, "T^2+1"), 0, Poly::one(f3), 2);
    const auto k3 = residue_key(Poly::parse(f3, "T^2+2*T"), 0, Poly::one(f3), 2);
    CHECK(k2 == k3);

    // zero padding beyond the degree
    const auto k4 = residue_key(Poly::parse(f2, "T^2"), 3, Poly::one(f2), 2);
    CHECK(k4.lead == std::vector<std::uint32_t>{0, 0, 0});

    CHECK_THROWS_AS(residue_key(Poly::parse(f3, "2,0"), 1, Poly::t(f3), 1), Error);
}

TEST_CASE("keys separate exactly the equivalence classes") {
    auto f3 = FieldDesc::prime(3);
    const Poly h = Poly::parse(f3, "1,0,1");
    const int n = 4, ell = 2;
    for (const Poly& a : MonicRange(f3, n)) {
        for (const Poly& b : MonicRange(f3, n)) {
            bool same_lead = true;
            for (int s = 1; s <= ell; ++s)
                same_lead = same_lead && a.coeff_index(n - s) == b.coeff_index(n - s);
            const bool equivalent = same_lead && (a - b) % h == Poly::zero(f3);
            CHECK((residue_key(a, ell, h, n) == residue_key(b, ell, h, n)) == equivalent);
        }
    }
}

TEST_CASE("invertibility") {
    auto f3 = FieldDesc::prime(3);
    CHECK(is_invertible(Poly::parse(f3, "T+1"), Poly::t(f3)));
    CHECK(!is_invertible(Poly::parse(f3, "T^2"), Poly::t(f3)));
    CHECK(is_invertible(Poly::parse(f3, "T^2"), Poly::one(f3)));
}

TEST_CASE("group sizes match exhaustive class counts") {
    auto f3 = FieldDesc::prime(3);
    CHECK(group_size(*f3, 1, Poly::t(f3)) == 6);
    CHECK(group_size(*f3, 0, Poly::one(f3)) == 1);
    CHECK(group_size(*f3, 2, Poly::parse(f3, "1,0,1")) == 72);

    for (const char* spec : {"2", "3"}) {
        auto f = FieldDesc::from_spec(spec);
        for (int dh = 0; dh <= 3; ++dh) {
            const std::uint64_t hcount = monic_count(*f, dh);
            for (std::uint64_t hi = 0; hi < hcount; ++hi) {
                const Poly h = monic_from_index(f, dh, hi);
                for (int ell = 0; ell <= 2; ++ell) {
                    // count distinct invertible keys over a degree big enough
                    // that every class is hit
                    const int n = ell + dh + 1;
                    std::set<std::pair<std::vector<std::uint32_t>, std::string>> keys;
                    for (const Poly& a : MonicRange(f, n)) {
                        if (!is_invertible(a, h)) continue;
                        const auto key = residue_key(a, ell, h, n);
                        keys.insert({key.lead, key.residue.str()});
                    }
                    CHECK(keys.size() == group_size(*f, ell, h));
                }
            }
        }
    }
}

TEST_CASE("irreducible counts per class") {
    auto f3 = FieldDesc::prime(3);
    auto f2 = FieldDesc::prime(2);
    const ClassCount c1 = count_irred_in_class(2, ResidueKey{0, Poly::t(f3), {}, Poly::one(f3)});
    CHECK(c1.count == 1);
    CHECK(c1.invertible);
    const ClassCount c2 = count_irred_in_class(2, ResidueKey{0, Poly::t(f3), {}, Poly::constant(f3, 2)});
    CHECK(c2.count == 2);
    CHECK(c2.main_term == Rational(9, 4));
    const ClassCount c3 = count_irred_in_class(3, ResidueKey{0, Poly::one(f2), {}, Poly::zero(f2)});
    CHECK(c3.count == 2);  // the universal class holds all of I_3

    // non-invertible classes are flagged and, above deg h, empty
    const ClassCount c4 = count_irred_in_class(2, ResidueKey{0, Poly::t(f3), {}, Poly::zero(f3)});
    CHECK(!c4.invertible);
    CHECK(c4.count == 0);
}

TEST_CASE("discrepancy report rows and partition") {
    auto f3 = FieldDesc::prime(3);
    const auto rep = class_discrepancy_report(f3, 2, 0, Poly::t(f3));
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].residue == Poly::one(f3));
    CHECK(rep.rows[0].count == 1);
    CHECK(rep.rows[1].residue == Poly::constant(f3, 2));
    CHECK(rep.rows[1].count == 2);
    CHECK(rep.rows[0].main_term == Rational(9, 4));

    // universal class: one row, the plain prime-counting error
    const auto uni = class_discrepancy_report(f3, 5, 0, Poly::one(f3));
    REQUIRE(uni.rows.size() == 1);
    CHECK(uni.rows[0].count == 48);  // #I_5 over F_3
    CHECK(uni.rows[0].abs_error == doctest::Approx(std::fabs(48.0 - 243.0 / 5)));

    auto f2 = FieldDesc::prime(2);
    const auto two = class_discrepancy_report(f2, 8, 1, Poly::t(f2));
    CHECK(two.rows.size() == 2);  // q^1 * Phi(T) = 2 invertible keys
}

TEST_CASE("partition identity across moduli") {
    for (const char* spec : {"2", "3"}) {
        auto f = FieldDesc::from_spec(spec);
        const std::vector<Poly> moduli{Poly::one(f), Poly::t(f), Poly::t(f) + Poly::one(f),
                                       Poly::t_power(f, 2) + Poly::one(f)};
        for (int n = 2; n <= 6; ++n) {
            const auto irred = irreducible_indices(f, n);
            for (int ell = 0; ell <= 2; ++ell) {
                for (const Poly& h : moduli) {
                    const auto rep = class_discrepancy_report(f, n, ell, h, irred, ResourceCap{});
                    std::uint64_t sum = rep.noninvertible_count;
                    for (const auto& row : rep.rows) sum += row.count;
                    CHECK(sum == rep.irreducible_total);
                    CHECK(rep.irreducible_total == count_irreducibles(*f, n));
                    if (n > h.deg()) CHECK(rep.noninvertible_count == 0);
                }
            }
        }
    }
}

TEST_CASE("grid discrepancies stay bounded") {
    double overall = 0.0;
    for (const char* spec : {"2", "3"}) {
        auto f = FieldDesc::from_spec(spec);
        for (int n = 2; n <= 8; ++n) {
            const auto irred = irreducible_indices(f, n);
            for (int ell = 0; ell <= 2; ++ell) {
                for (int dh = 0; dh <= 2; ++dh) {
                    const std::uint64_t hcount = monic_count(*f, dh);
                    for (std::uint64_t hi = 0; hi < hcount; ++hi) {
                        const auto rep = class_discrepancy_report(
                            f, n, ell, monic_from_index(f, dh, hi), irred, ResourceCap{});
                        CHECK(std::isfinite(rep.max_normalized_error));
                        overall = std::max(overall, rep.max_normalized_error);
                    }
                }
            }
        }
    }
    CHECK(overall > 0.0);
    MESSAGE("max normalized discrepancy over the unit-test grid: ", overall);
}
