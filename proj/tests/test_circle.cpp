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

#include "circle.hpp"
#include "harness.hpp"

using namespace ffc;

TEST_CASE("representation counts u_G") {
    auto f3 = FieldDesc::prime(3);
    const FieldElement two = f3->element(2);

    PolySet A = PolySet::all(f3, 1), B = PolySet::all(f3, 1);
    CHECK(u_count(Poly::t(f3), A, B, two, two) == 3);

    PolySet A1 = PolySet::empty(f3, 1), B1 = PolySet::empty(f3, 1);
    A1.insert(Poly::t(f3));
    B1.insert(Poly::t(f3));
    CHECK(u_count(Poly::t(f3), A1, B1, two, two) == 1);
    CHECK(u_count(Poly::parse(f3, "T+1"), A1, B1, two, two) == 0);

    // full sets: u_G = q^n for every G
    for (int n = 1; n <= 4; ++n) {
        PolySet full = PolySet::all(f3, n);
        const std::uint64_t qn = monic_count(*f3, n);
        for (const Poly& g : MonicRange(f3, n)) CHECK(u_count(g, full, full, two, two) == qn);
    }

    // alpha + beta != 1 is rejected to surface misconfiguration
    CHECK_THROWS_AS(u_count(Poly::t(f3), A, B, f3->element(1), f3->element(1)), Error);
    try {
        u_count(Poly::t(f3), A, B, f3->element(1), f3->element(2));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::scalar_sum_not_one);
    }
}

TEST_CASE("v indicator") {
    auto f3 = FieldDesc::prime(3);
    CHECK(v_indicator(Poly::parse(f3, "T^2+1"), 0) == 1);
    CHECK(v_indicator(Poly::parse(f3, "T^2+1"), 1) == 0);
    CHECK(v_indicator(Poly::parse(f3, "T^2"), 1) == 1);  // T^2 = T * T
}

TEST_CASE("w counts") {
    auto f3 = FieldDesc::prime(3);
    auto f2 = FieldDesc::prime(2);
    CHECK(w_count(Poly::parse(f3, "T^2"), 1, 1) == 3);

    // j = 0, k = n: the congruence compares zero coefficients, so every h
    // collects all of S and w = #I_n
    for (const Poly& h : MonicRange(f3, 3))
        CHECK(w_count(h, 0, 3) == count_irreducibles(*f3, 3));

    // j = n, k = 0: S = M_n x I_0 is empty
    CHECK(w_count(Poly::parse(f3, "T^2"), 2, 0) == 0);

    // direct small enumeration: q=2, n=3, j=1, k=2 compares the top
    // coefficient of CP with h
    std::uint64_t direct = 0;
    for (const Poly& c : MonicRange(f2, 1))
        for (const Poly& p : irreducibles(f2, 2))
            if ((c * p).coeff_index(2) == Poly::parse(f2, "T^3").coeff_index(2)) ++direct;
    CHECK(w_count(Poly::parse(f2, "T^3"), 1, 2) == direct);

    // class sums: over one representative per class w adds to #S; over all
    // of M_n each pair is seen q^(n-k) times
    for (int n = 2; n <= 6; ++n) {
        for (int j = 1; j < n; ++j) {
            const int k = n - j;
            const std::uint64_t s_size =
                monic_count(*f2, j) * count_irreducibles(*f2, n - j);
            std::uint64_t class_sum = 0, full_sum = 0;
            for (const Poly& h : MonicRange(f2, n)) {
                const std::uint64_t w = w_count(h, j, k);
                full_sum += w;
                bool low_zero = true;  // representative: the k free low coefficients all 0
                for (int i = 0; i < k; ++i) low_zero = low_zero && h.coeff_index(i) == 0;
                if (low_zero) class_sum += w;
            }
            CHECK(class_sum == s_size);
            CHECK(full_sum == s_size * pow_u64(2, static_cast<unsigned>(k)));
        }
    }
}

TEST_CASE("exponential sums over explicit sets") {
    auto f3 = FieldDesc::prime(3);
    const LaurentPoint xi = LaurentPoint::parse(f3, "1/1,0");
    PolySet m1 = PolySet::all(f3, 1);
    // sum over T+a of e((T+a)/T) = sum of psi(a) = 0
    CHECK(f_set_eval(xi, m1, f3->one()).is_zero());

    PolySet empty = PolySet::empty(f3, 2);
    CHECK(f_set_eval(LaurentPoint::parse(f3, "1/1,0,1"), empty, f3->one()).is_zero());

    PolySet m2 = PolySet::all(f3, 2);
    CHECK(f_set_eval(LaurentPoint::zero(f3), m2, f3->one()) == CycloValue::integer(3, 9));
}

TEST_CASE("geometric sum closed form") {
    auto f3 = FieldDesc::prime(3);
    CHECK(geometric_sum_closed_form(LaurentPoint::parse(f3, "1/1,0,0,0"), 2) ==
          CycloValue::root_power(3, 1).scaled(9));
    CHECK(geometric_sum_closed_form(LaurentPoint::parse(f3, "1/1,0"), 2).is_zero());
    CHECK(geometric_sum_closed_form(LaurentPoint::zero(f3), 3) == CycloValue::integer(3, 27));

    // closed form vs direct summation on random points
    SplitMix64 rng(31);
    for (const char* spec : {"2", "3"}) {
        auto f = FieldDesc::from_spec(spec);
        for (int trial = 0; trial < 1000; ++trial) {
            const int dv = 1 + static_cast<int>(rng.below(4));
            const Poly den = monic_from_index(f, dv, rng.below(monic_count(*f, dv)));
            std::vector<std::uint32_t> c(static_cast<std::size_t>(dv) + 1, 0);
            for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(f->q()));
            const LaurentPoint xi =
                LaurentPoint::from_rational(Poly::from_indices(f, std::move(c)), den);
            const int k = 1 + static_cast<int>(rng.below(6));
            CycloValue direct = CycloValue::zero(f->p());
            for (const Poly& a : MonicRange(f, k)) direct += e_times(xi, a);
            CHECK(direct == geometric_sum_closed_form(xi, k));
        }
    }
}

TEST_CASE("correlation report") {
    auto f3 = FieldDesc::prime(3);
    const FieldElement two = f3->element(2);

    // frozen desk-scale values
    PolySet m2 = PolySet::all(f3, 2);
    const CorrelationReport r2 = correlation(m2, m2, two, two, 1);
    for (const std::uint64_t u : r2.u) CHECK(u == 9);
    CHECK(r2.correlation == 54);
    CHECK(r2.sum_u == 81);
    CHECK(r2.i1 + r2.i2 == Rational::integer(54));

    PolySet m4 = PolySet::all(f3, 4);
    const CorrelationReport r4 = correlation(m4, m4, two, two, 2);
    CHECK(r4.pair_count == 5346);

    // empty set
    PolySet e = PolySet::empty(f3, 2);
    const CorrelationReport r0 = correlation(e, m2, two, two, 1);
    CHECK(r0.correlation == 0);
    CHECK(r0.sum_u == 0);
    CHECK(r0.pair_count == 0);

    // internal identities on random runs, against the independent triple count
    SplitMix64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const std::uint64_t universe = monic_count(*f3, n);
        PolySet A = PolySet::random_subset(f3, n, 1 + rng.below(universe), rng.next());
        PolySet B = PolySet::random_subset(f3, n, 1 + rng.below(universe), rng.next());
        const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        const CorrelationReport rep = correlation(A, B, two, two, j);
        CHECK(rep.correlation == correlation_triple_count(A, B, two, two, j));
        CHECK(rep.sum_u == A.size() * B.size());
        CHECK(rep.i1 + rep.i2 == Rational::integer(static_cast<long long>(rep.correlation)));
        // I = sum u_G v_G and I1 = q^-k sum u_G w_G from the tables
        std::uint64_t uv = 0;
        long long uw = 0;
        for (std::uint64_t gi = 0; gi < rep.u.size(); ++gi) {
            if (rep.v[gi]) uv += rep.u[gi];
            uw += static_cast<long long>(rep.u[gi]) * static_cast<long long>(rep.w[gi]);
        }
        CHECK(uv == rep.correlation);
        CHECK(rep.i1 == Rational(uw, static_cast<long long>(
                                         pow_u64(3, static_cast<unsigned>(rep.k)))));
        // the bucketed w table agrees with the standalone counting operation
        for (int probe = 0; probe < 3; ++probe) {
            const std::uint64_t gi = rng.below(rep.w.size());
            const Poly g = monic_from_index(f3, n, gi);
            CHECK(rep.w[gi] == w_count(g, j, rep.k));
        }
    }
}

TEST_CASE("vaughan identity terms") {
    auto f3 = FieldDesc::prime(3);
    auto f2 = FieldDesc::prime(2);
    const VaughanTerms t1 = vaughan_check(Poly::parse(f3, "T^2+1"), 1.5, 1.5);
    CHECK(t1.lambda == 2);
    CHECK(t1.term1 == 2);
    CHECK(t1.term2 == 0);
    CHECK(t1.term3 == 0);

    const VaughanTerms t2 = vaughan_check(Poly::parse(f2, "T^3"), 1.5, 1.5);
    CHECK(t2.lambda == 1);
    CHECK(t2.lambda == t2.term1 - t2.term2 + t2.term3);

    const Poly f = Poly::parse(f2, "T") * Poly::parse(f2, "T+1") * Poly::parse(f2, "T^2+T+1");
    const VaughanTerms t3 = vaughan_check(f, 1.9, 1.9);
    CHECK(t3.lambda == 0);
    CHECK(t3.lambda == t3.term1 - t3.term2 + t3.term3);

    CHECK_THROWS_AS(vaughan_check(Poly::parse(f2, "T+1"), 1.5, 1.5), Error);
    CHECK_THROWS_AS(vaughan_check(Poly::parse(f2, "T^3"), 1.0, 1.5), Error);  // cutoffs > 1

    // the identity holds exactly for every monic F with deg F > z
    for (const char* spec : {"2", "3"}) {
        auto fd = FieldDesc::from_spec(spec);
        for (double y : {1.5, 2.5}) {
            for (double z : {1.5, 2.5}) {
                for (int n = static_cast<int>(z) + 1; n <= 5; ++n) {
                    for (const Poly& p : MonicRange(fd, n)) {
                        const VaughanTerms t = vaughan_check(p, y, z);
                        CHECK(t.lambda == t.term1 - t.term2 + t.term3);
                    }
                }
            }
        }
    }

    // the preset used when the decomposition is instantiated at degree n
    for (int n = 3; n <= 6; ++n) {
        const VaughanParams params = VaughanParams::proof_preset(n);
        CHECK(params.y == doctest::Approx(0.4 * n));
        auto fd = FieldDesc::prime(3);
        for (const Poly& p : MonicRange(fd, n)) {
            const VaughanTerms t = vaughan_check(p, params);
            CHECK(t.lambda == t.term1 - t.term2 + t.term3);
        }
    }
}

TEST_CASE("bilinear bound checker") {
    auto f2 = FieldDesc::prime(2);
    const Poly B = Poly::parse(f2, "T^3+T+1");
    const Poly A = Poly::one(f2);
    const LaurentPoint xi = LaurentPoint::from_rational(A, B);
    const BoundCheck c = bilinear_bound_check(xi, A, B, 2, 2);
    CHECK(c.rhs == doctest::Approx(14.0));
    CHECK(c.ratio == doctest::Approx(c.lhs / 14.0));

    // the inner sums collapse to q^k or 0 exactly as the closed form says
    double expected = 0.0;
    for (const Poly& g : MonicRange(f2, 2))
        if (dist_exponent_times(xi, g) < -2) expected += 4.0;
    CHECK(c.lhs == doctest::Approx(expected));

    CHECK_THROWS_AS(bilinear_bound_check(xi, A, B, 0, 1), Error);
    CHECK_THROWS_AS(bilinear_bound_check(xi, A, B, 1, 0), Error);
    // gamma too large is rejected
    const LaurentPoint bad = xi + LaurentPoint::parse(f2, "1/1,0");
    CHECK_THROWS_AS(bilinear_bound_check(bad, A, B, 1, 1), Error);
    // constant denominator is rejected
    CHECK_THROWS_AS(bilinear_bound_check(xi, A, Poly::one(f2), 1, 1), Error);
}

TEST_CASE("irreducible sum bound checker") {
    auto f2 = FieldDesc::prime(2);
    auto f3 = FieldDesc::prime(3);
    {
        const Poly B = Poly::parse(f2, "T^3+T+1");
        const LaurentPoint xi = LaurentPoint::from_rational(Poly::one(f2), B);
        CHECK(irreducibles(f2, 6).size() == 9);
        const BoundCheck c = irred_sum_bound_check(xi, Poly::one(f2), B, 6);
        CHECK(std::isfinite(c.ratio));
        CHECK(c.rhs > 0);
        // direct evaluation of the same sum
        CycloValue direct = CycloValue::zero(2);
        for (const Poly& p : irreducibles(f2, 6)) direct += e_times(xi, p);
        CHECK(c.lhs == doctest::Approx(direct.abs()));
    }
    {
        const Poly B = Poly::parse(f3, "1,0,1");
        const LaurentPoint xi = LaurentPoint::from_rational(Poly::one(f3), B);
        CHECK(irreducibles(f3, 4).size() == 18);
        const BoundCheck c = irred_sum_bound_check(xi, Poly::one(f3), B, 4);
        CHECK(c.lhs >= 0.0);
    }
}

TEST_CASE("f_S bound checker") {
    auto f3 = FieldDesc::prime(3);
    FsSampleSpec spec;
    spec.count = 12;
    spec.seed = 5;
    spec.max_den_degree = 4;
    const FsBoundReport rep = fs_bound_check(f3, 6, 2, 4, spec);
    CHECK(!rep.hypothesis_holds);  // desk-scale n never satisfies it
    CHECK(rep.k_condition_holds);
    CHECK(!rep.bound_vacuous);
    CHECK(rep.samples.size() + rep.rejected == spec.count);
    for (const auto& s : rep.samples) {
        CHECK(s.xi.abs_exponent() >= -4);
        CHECK(s.bound == doctest::Approx(std::log(2.0) / 6 * 81));
        CHECK(std::isfinite(s.ratio));
    }
    // the explicit example point 1/T^4 is in the domain; 1/T^5 is not
    const LaurentPoint in_domain = LaurentPoint::parse(f3, "1/1,0,0,0,0");
    CHECK(in_domain.abs_exponent() >= -4);
    const LaurentPoint outside = LaurentPoint::parse(f3, "1/1,0,0,0,0,0");
    CHECK(outside.abs_exponent() < -4);

    // j = 1 makes the bound vacuous; the report flags it
    const FsBoundReport vac = fs_bound_check(f3, 5, 1, 4, spec);
    CHECK(vac.bound_vacuous);
    CHECK(vac.max_ratio == 0.0);

    // |f_S| at the example point, against independent direct summation
    std::vector<Poly> members;
    for (const Poly& c : MonicRange(f3, 2))
        for (const Poly& p : irreducibles(f3, 4)) members.push_back(c * p);
    CHECK(members.size() == 162);
    const double fs = f_set_eval(in_domain, members, f3->one()).abs();
    CHECK(std::isfinite(fs));
}

TEST_CASE("polynomial sets") {
    auto f3 = FieldDesc::prime(3);
    PolySet all = PolySet::all(f3, 3);
    CHECK(all.size() == 27);
    CHECK(all.contains(Poly::parse(f3, "T^3+2")));
    CHECK(!all.contains(Poly::parse(f3, "T^2+1")));  // wrong degree

    PolySet r1 = PolySet::random_subset(f3, 4, 10, 42);
    PolySet r2 = PolySet::random_subset(f3, 4, 10, 42);
    CHECK(r1.indices() == r2.indices());
    CHECK(r1.size() == 10);
    PolySet r3 = PolySet::random_subset(f3, 4, 10, 43);
    CHECK(r1.indices() != r3.indices());
    CHECK_THROWS_AS(PolySet::random_subset(f3, 2, 100, 1), Error);
}
