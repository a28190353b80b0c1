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

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "lefschetz/artinian.hpp"
#include "lefschetz/parser.hpp"

using namespace lefschetz;

namespace {

RingPtr<Rational> qring() {
    return make_ring<Rational>(numbered_names("x", 3), MonomialOrder::grevlex(), Rational(1));
}

RingPtr<PrimeField> pring() {
    return make_ring<PrimeField>(numbered_names("x", 3), MonomialOrder::grevlex(),
                                 PrimeField::make_unit(kDefaultPrime));
}

template <Field K>
QuotientAlgebra<K> quotient_of(const RingPtr<K>& R, const std::string& gens) {
    return make_quotient(R, parse_polynomial_list<K>(R, gens));
}

std::vector<CIType> ci_types_up_to(int max_socle) {
    std::vector<CIType> out;
    for (int d1 = 2; d1 + 4 <= max_socle + 3; ++d1)
        for (int d2 = d1; d1 + d2 + 2 <= max_socle + 3; ++d2)
            for (int d3 = d2; d1 + d2 + d3 <= max_socle + 3; ++d3) out.push_back(CIType(d1, d2, d3));
    return out;
}

}  // namespace

TEST_CASE("complete intersection types", "[artinian]") {
    CIType t(4, 2, 3);
    CHECK(t.d1 == 2);
    CHECK(t.d2 == 3);
    CHECK(t.d3 == 4);
    CHECK(t.socle_degree() == 6);
    CHECK_THROWS_AS(CIType(1, 2, 2), DegreeOutOfRange);
}

TEST_CASE("complete intersection hilbert functions", "[artinian]") {
    CHECK(ci_hilbert_function(CIType(2, 2, 2)) == HilbertFunction{1, 3, 3, 1});
    CHECK(ci_hilbert_function(CIType(2, 2, 4)) == HilbertFunction{1, 3, 4, 4, 3, 1});
    CHECK(ci_hilbert_function(CIType(2, 3, 3)) == HilbertFunction{1, 3, 5, 5, 3, 1});
    CHECK(ci_hilbert_function(CIType(4, 4, 6)) == HilbertFunction{1, 3, 6, 10, 13, 15, 15, 13, 10, 6, 3, 1});

    SECTION("symmetric, positive, total dimension d1*d2*d3") {
        for (const auto& t : ci_types_up_to(12)) {
            auto hf = ci_hilbert_function(t);
            REQUIRE(static_cast<int>(hf.size()) == t.socle_degree() + 1);
            for (std::size_t i = 0; i < hf.size(); ++i) {
                CHECK(hf[i] > 0);
                CHECK(hf[i] == hf[hf.size() - 1 - i]);
            }
            CHECK(std::accumulate(hf.begin(), hf.end(), 0) == t.d1 * t.d2 * t.d3);
        }
    }
    SECTION("agrees with the monomial quotient for every type with e <= 12") {
        auto R = pring();
        for (const auto& t : ci_types_up_to(12)) {
            auto A = monomial_ci(R, t);
            CHECK(A.hilbert_function() == ci_hilbert_function(t));
            REQUIRE(A.ci_type.has_value());
            CHECK(*A.ci_type == t);
        }
    }
}

TEST_CASE("quotient construction", "[artinian]") {
    auto R = qring();

    SECTION("squarefree cube") {
        auto A = quotient_of<Rational>(R, "x1^2, x2^2, x3^2");
        CHECK(A.hilbert_function() == HilbertFunction{1, 3, 3, 1});
        CHECK(A.socle_degree() == 3);
    }
    SECTION("residue field") {
        auto A = quotient_of<Rational>(R, "x1, x2, x3");
        CHECK(A.hilbert_function() == HilbertFunction{1});
        CHECK(A.socle_degree() == 0);
    }
    SECTION("type (2,2,4) counts") {
        auto A = quotient_of<Rational>(R, "x1^2, x2^2, x3^4");
        CHECK(A.hilbert_function() == HilbertFunction{1, 3, 4, 4, 3, 1});
    }
    SECTION("same over the default prime field") {
        auto A = quotient_of<PrimeField>(pring(), "x1^2, x2^2, x3^4");
        CHECK(A.hilbert_function() == HilbertFunction{1, 3, 4, 4, 3, 1});
    }
    SECTION("errors") {
        CHECK_THROWS_AS(quotient_of<Rational>(R, "x1, x2"), NotArtinian);
        CHECK_THROWS_AS(quotient_of<Rational>(R, "x1 + x2^2, x2^2, x3^2, x1^5"), NotHomogeneous);
        CHECK_THROWS_AS(quotient_of<Rational>(R, "3"), NotArtinian);
    }
}

TEST_CASE("standard monomial bases", "[artinian]") {
    auto R = qring();
    auto A = quotient_of<Rational>(R, "x1^2, x2^2, x3^2");
    auto names = R->names;

    REQUIRE(A.basis(0).size() == 1);
    CHECK(A.basis(0)[0].is_one());
    REQUIRE(standard_monomials(A, 2).size() == 3);
    CHECK(standard_monomials(A, 2)[0].to_string(names) == "x1*x2");
    CHECK(standard_monomials(A, 2)[1].to_string(names) == "x1*x3");
    CHECK(standard_monomials(A, 2)[2].to_string(names) == "x2*x3");
    CHECK(A.basis(4).empty());

    auto B = quotient_of<Rational>(R, "x1^2, x2^2, x3^4");
    auto d3 = standard_monomials(B, 3);
    REQUIRE(d3.size() == 4);
    CHECK(d3[0].to_string(names) == "x1*x2*x3");
    CHECK(d3[1].to_string(names) == "x1*x3^2");
    CHECK(d3[2].to_string(names) == "x2*x3^2");
    CHECK(d3[3].to_string(names) == "x3^3");
}

TEST_CASE("multiplication matrices", "[artinian]") {
    auto R = qring();
    auto A = quotient_of<Rational>(R, "x1^2, x2^2, x3^2");

    SECTION("general linear form in the middle") {
        auto ell = parse_polynomial<Rational>(R, "x1 + x2 + x3");
        auto m = multiplication_matrix(A, ell, 1);
        REQUIRE(m.rows() == 3);
        REQUIRE(m.cols() == 3);
        // Bases x1,x2,x3 and x1x2,x1x3,x2x3.
        const int expected[3][3] = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) CHECK(m.at(r, c) == Rational(expected[r][c]));
        CHECK(m.rank() == 3);
        CHECK(m.determinant() == Rational(-2));
    }
    SECTION("the same map degenerates in characteristic two") {
        auto R2 = make_ring<PrimeField>(numbered_names("x", 3), MonomialOrder::grevlex(), PrimeField::make_unit(2));
        auto A2 = quotient_of<PrimeField>(R2, "x1^2, x2^2, x3^2");
        auto ell = parse_polynomial<PrimeField>(R2, "x1 + x2 + x3");
        CHECK(multiplication_matrix(A2, ell, 1).rank() == 2);
    }
    SECTION("zero form gives the zero matrix in the conic shape") {
        auto m = multiplication_matrix(A, Polynomial<Rational>::zero(R), 1);
        CHECK(m.rows() == 1);
        CHECK(m.cols() == 3);
        CHECK(m.rank() == 0);
    }
    SECTION("conic x3^2 is injective on degree one of the (2,2,4) quotient") {
        auto B = quotient_of<Rational>(R, "x1^2, x2^2, x3^4");
        auto m = multiplication_matrix(B, parse_polynomial<Rational>(R, "x3^2"), 1);
        REQUIRE(m.rows() == 4);
        REQUIRE(m.cols() == 3);
        CHECK(m.rank() == 3);
    }
    SECTION("beyond the socle the matrix has no rows") {
        auto m = multiplication_matrix(A, parse_polynomial<Rational>(R, "x1*x2"), 2);
        CHECK(m.rows() == 0);
        CHECK(m.cols() == 3);
    }
    SECTION("composition") {
        auto P = pring();
        auto B = quotient_of<PrimeField>(P, "x1^2, x2^2, x3^4");
        Rng rng(3);
        for (int iter = 0; iter < 5; ++iter) {
            auto f = random_form(P, 2, rng);
            auto g = random_form(P, 1, rng);
            for (int i = 0; i <= 2; ++i) {
                auto lhs = multiplication_matrix(B, f * g, i);
                auto rhs = multiplication_matrix(B, f, i + 1) * multiplication_matrix(B, g, i);
                CHECK(lhs == rhs);
            }
        }
    }
    SECTION("errors") {
        CHECK_THROWS_AS(multiplication_matrix(A, parse_polynomial<Rational>(R, "x1 + x2^2"), 0), NotHomogeneous);
        CHECK_THROWS_AS(multiplication_matrix(A, parse_polynomial<Rational>(R, "x1"), -1), DegreeOutOfRange);
        CHECK_THROWS_AS(multiplication_matrix(A, parse_polynomial<Rational>(R, "x1"), 0, 2), DegreeMismatch);
        auto other = make_ring<Rational>(numbered_names("y", 3), MonomialOrder::grevlex(), Rational(1));
        CHECK_THROWS_AS(multiplication_matrix(A, Polynomial<Rational>::variable(other, 0), 0), RingMismatch);
    }
}

TEST_CASE("socle and gorenstein detection", "[artinian]") {
    auto R = qring();

    SECTION("complete intersections have socle only on top") {
        auto A = quotient_of<Rational>(R, "x1^2, x2^2, x3^2");
        CHECK(has_socle_in_degree(A, 3));
        CHECK_FALSE(has_socle_in_degree(A, 1));
        CHECK_FALSE(has_socle_in_degree(A, 0));
        CHECK(A.is_gorenstein());

        auto B = quotient_of<Rational>(R, "x1^2, x2^2, x3^4");
        CHECK_FALSE(has_socle_in_degree(B, 4));
        CHECK(has_socle_in_degree(B, 5));
        CHECK(B.is_gorenstein());
        CHECK_THROWS_AS(has_socle_in_degree(B, 6), DegreeOutOfRange);
    }
    SECTION("a fat point square is not gorenstein") {
        auto A = quotient_of<Rational>(R, "x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^2");
        CHECK(A.hilbert_function() == HilbertFunction{1, 3});
        CHECK(has_socle_in_degree(A, 1));
        CHECK_FALSE(A.is_gorenstein());
    }
}

TEST_CASE("random complete intersections", "[artinian]") {
    auto P = pring();

    SECTION("hilbert function matches the closed form") {
        for (const auto& t : {CIType(2, 2, 3), CIType(2, 3, 3), CIType(3, 3, 4)}) {
            auto A = random_ci(P, t, 1);
            CHECK(A.hilbert_function() == ci_hilbert_function(t));
            CHECK(A.is_gorenstein());
        }
    }
    SECTION("deterministic per seed") {
        auto A = random_ci(P, CIType(2, 2, 3), 7);
        auto B = random_ci(P, CIType(2, 2, 3), 7);
        CHECK(A.ideal().gens == B.ideal().gens);
        auto C = random_ci(P, CIType(2, 2, 3), 8);
        CHECK(A.ideal().gens != C.ideal().gens);
    }
}
