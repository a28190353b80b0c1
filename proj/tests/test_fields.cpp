/*
   Copyright 2026 The lefschetz authors

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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "lefschetz/fields.hpp"

using namespace lefschetz;

TEST_CASE("prime field basics") {
    PrimeField one = PrimeField::make_unit(7);
    PrimeField two = one.from_int(2);
    CHECK(two.inverse().value() == 4);  // 2*4 = 8 = 1 mod 7
    CHECK((two * two.inverse()).is_one());

    PrimeField u = PrimeField::make_unit(32003);
    CHECK((u.from_int(16001) * u.from_int(2)).value() == 32002);  // 16001*2 = 32002 < 32003
    CHECK(u.from_int(-1).value() == 32002);
    CHECK(u.from_int(32003).is_zero());
}

TEST_CASE("prime field errors") {
    PrimeField u7 = PrimeField::make_unit(7);
    PrimeField u11 = PrimeField::make_unit(11);
    CHECK_THROWS_AS(u7.zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(u7 + u11, MixedFields);
    CHECK_THROWS_AS(PrimeField::make_unit(32004), Error);
    CHECK_THROWS_AS(PrimeField::make_unit(1), Error);
    // 2^31 - 1 is prime but sits exactly at the width limit
    CHECK_THROWS_AS(PrimeField::make_unit(2147483648u), Error);
    CHECK(PrimeField::make_unit(2147483647u).modulus() == 2147483647u);
}

TEST_CASE("rational canonical form") {
    Rational half(BigInt(1), BigInt(2));
    Rational third(BigInt(1), BigInt(3));
    CHECK((half + third).to_string() == "5/6");

    Rational r(BigInt(2), BigInt(-4));
    CHECK(r.numerator() == -1);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-1/2");

    CHECK(Rational(BigInt(0), BigInt(-5)).denominator() == 1);
    CHECK(Rational(7).to_string() == "7");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZero);
    CHECK_THROWS_AS(Rational(3).zero().inverse(), DivisionByZero);
}

TEMPLATE_TEST_CASE("field axioms on random samples", "", PrimeField, Rational) {
    std::mt19937_64 rng(12345);
    auto sample = []<class K>(const K& unit, std::mt19937_64& r) -> K {
        if constexpr (std::is_same_v<K, PrimeField>) {
            return unit.from_int(static_cast<std::int64_t>(r() % unit.modulus()));
        } else {
            std::int64_t n = static_cast<std::int64_t>(r() % 2001) - 1000;
            std::int64_t d = static_cast<std::int64_t>(r() % 50) + 1;
            return Rational(BigInt(n), BigInt(d));
        }
    };
    TestType unit;
    if constexpr (std::is_same_v<TestType, PrimeField>) {
        unit = PrimeField::make_unit(kDefaultPrime);
    } else {
        unit = Rational(1);
    }
    for (int i = 0; i < 200; ++i) {
        TestType a = sample(unit, rng), b = sample(unit, rng), c = sample(unit, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + unit.zero() == a);
        CHECK(a * unit.one() == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
            CHECK(a / a == unit.one());
        }
    }
}
