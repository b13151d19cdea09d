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

#include "laurent.hpp"

using namespace ffc;

namespace {

LaurentPoint random_point(const FieldDesc::Ptr& f, SplitMix64& rng, bool allow_zero = true) {
    const int dv = 1 + static_cast<int>(rng.below(4));
    const Poly den = monic_from_index(f, dv, rng.below(monic_count(*f, dv)));
    std::vector<std::uint32_t> c(static_cast<std::size_t>(dv) + 1, 0);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(f->q()));
    Poly num = Poly::from_indices(f, std::move(c));
    if (!allow_zero && num.is_zero()) num = Poly::one(f);
    return LaurentPoint::from_rational(num, den);
}

}  // namespace

TEST_CASE("canonical coprime form") {
    auto f2 = FieldDesc::prime(2);
    auto f3 = FieldDesc::prime(3);
    const auto a = LaurentPoint::from_rational(Poly::parse(f2, "T+1"), Poly::parse(f2, "T^2+T"));
    CHECK(a.num().is_one());
    CHECK(a.den() == Poly::t(f2));
    const auto b = LaurentPoint::from_rational(Poly::zero(f3), Poly::parse(f3, "T^3"));
    CHECK(b.is_zero());
    CHECK(b.den().is_one());
    const auto c = LaurentPoint::from_rational(Poly::parse(f3, "2,0"), Poly::constant(f3, 2));
    CHECK(c.num() == Poly::t(f3));
    CHECK(c.den().is_one());
    CHECK_THROWS_AS(LaurentPoint::from_rational(Poly::one(f3), Poly::zero(f3)), Error);
}

TEST_CASE("digit extraction") {
    auto f2 = FieldDesc::prime(2);
    auto f3 = FieldDesc::prime(3);
    const auto geom = LaurentPoint::parse(f2, "1/1,1");  // 1/(T+1) = T^-1 + T^-2 + ...
    CHECK(geom.coeff(-3).index() == 1);
    CHECK(geom.coeff(0).index() == 0);
    CHECK(geom.coeff(5).index() == 0);
    const auto t2 = LaurentPoint::parse(f3, "T^2");
    CHECK(t2.coeff(2).index() == 1);
    CHECK(t2.coeff(-1).index() == 0);
    CHECK(LaurentPoint::parse(f3, "2/1,0").coeff(-1).index() == 2);

    // window agrees with single digits
    const auto xi = LaurentPoint::parse(f3, "1,2,1/1,0,0,2");
    const auto window = xi.coeff_window(-6, 2);
    for (int i = -6; i <= 2; ++i)
        CHECK(window[static_cast<std::size_t>(i + 6)] == xi.coeff(i));
}

TEST_CASE("absolute value and distance exponents") {
    auto f3 = FieldDesc::prime(3);
    CHECK(LaurentPoint::parse(f3, "1/1,0,1").abs_exponent() == QExp(-2));
    CHECK(LaurentPoint::parse(f3, "T^3+1").abs_exponent() == QExp(3));
    CHECK(!LaurentPoint::zero(f3).abs_exponent().finite());

    CHECK(LaurentPoint::parse(f3, "1,0,1/1,0").dist_exponent() == QExp(-1));  // T + 1/T
    CHECK(!LaurentPoint::parse(f3, "T^5").dist_exponent().finite());
    CHECK(LaurentPoint::parse(f3, "1/1,0,1").dist_exponent() == QExp(-2));
}

TEST_CASE("additive character e") {
    auto f3 = FieldDesc::prime(3);
    CHECK(LaurentPoint::parse(f3, "1/1,0").e() == CycloValue::root_power(3, 1));
    CHECK(LaurentPoint::parse(f3, "1/1,0,0").e() == CycloValue::one(3));
    CHECK(LaurentPoint::parse(f3, "2/1,0").e() == CycloValue::root_power(3, 2));
    CHECK(LaurentPoint::parse(f3, "T^4+2*T").e() == CycloValue::one(3));  // polynomials map to 1
}

TEST_CASE("rational arithmetic") {
    auto f2 = FieldDesc::prime(2);
    auto f3 = FieldDesc::prime(3);
    CHECK(LaurentPoint::parse(f3, "1/1,0,0").times(Poly::t(f3)) == LaurentPoint::parse(f3, "1/1,0"));
    CHECK((LaurentPoint::parse(f3, "1/1,0") + LaurentPoint::parse(f3, "2/1,0")).is_zero());
    const auto x = LaurentPoint::parse(f2, "1/1,1");
    CHECK(-x == x);  // characteristic 2
    CHECK((x - x).is_zero());
}

TEST_CASE("ultrametric inequality") {
    SplitMix64 rng(21);
    for (const char* spec : {"2", "3"}) {
        auto f = FieldDesc::from_spec(spec);
        for (int trial = 0; trial < 5000; ++trial) {
            const auto a = random_point(f, rng);
            const auto b = random_point(f, rng);
            const QExp ea = a.abs_exponent(), eb = b.abs_exponent();
            const QExp es = (a + b).abs_exponent();
            CHECK(es <= (ea < eb ? eb : ea));
            if (ea != eb) CHECK(es == (ea < eb ? eb : ea));
        }
    }
}

TEST_CASE("e is a homomorphism on rational points") {
    SplitMix64 rng(22);
    for (const char* spec : {"2", "3"}) {
        auto f = FieldDesc::from_spec(spec);
        for (int trial = 0; trial < 5000; ++trial) {
            const auto a = random_point(f, rng);
            const auto b = random_point(f, rng);
            CHECK(a.e() * b.e() == (a + b).e());
        }
    }
}

TEST_CASE("digits do not depend on the representation") {
    SplitMix64 rng(23);
    auto f3 = FieldDesc::prime(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto xi = random_point(f3, rng);
        // scale numerator and denominator by a common nonzero polynomial
        std::vector<std::uint32_t> c(1 + rng.below(3), 0);
        for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(3));
        Poly scale = Poly::from_indices(f3, std::move(c));
        if (scale.is_zero()) scale = Poly::t(f3);
        const auto same = LaurentPoint::from_rational(xi.num() * scale, xi.den() * scale);
        CHECK(same == xi);
        for (int i = -5; i <= 2; ++i) CHECK(same.coeff(i) == xi.coeff(i));
    }
}

TEST_CASE("proper fractions lie in the unit torus") {
    SplitMix64 rng(24);
    auto f2 = FieldDesc::prime(2);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto xi = random_point(f2, rng);
        if (xi.num().deg() < xi.den().deg()) CHECK(xi.dist_exponent() < 0);
    }
}

TEST_CASE("fast path e(a*xi) matches the constructed point") {
    SplitMix64 rng(25);
    for (const char* spec : {"2", "3"}) {
        auto f = FieldDesc::from_spec(spec);
        for (int trial = 0; trial < 2000; ++trial) {
            const auto xi = random_point(f, rng);
            std::vector<std::uint32_t> c(1 + rng.below(4), 0);
            for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(f->q()));
            const Poly a = Poly::from_indices(f, std::move(c));
            CHECK(e_times(xi, a) == xi.times(a).e());
            CHECK(dist_exponent_times(xi, a) == xi.times(a).dist_exponent());
        }
    }
}

TEST_CASE("text form round-trip") {
    auto f3 = FieldDesc::prime(3);
    const auto xi = LaurentPoint::parse(f3, "1/1,0,1");
    CHECK(xi.str() == "1/1,0,1");
    CHECK(LaurentPoint::parse(f3, xi.str()) == xi);
    CHECK(LaurentPoint::parse(f3, "T^2+1") == LaurentPoint::from_poly(Poly::parse(f3, "1,0,1")));
}
