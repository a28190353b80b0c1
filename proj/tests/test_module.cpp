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

#include "lefschetz/conic_locus.hpp"
#include "lefschetz/module_presentation.hpp"
#include "lefschetz/parser.hpp"
#include "test_util.hpp"

using namespace lefschetz;

namespace {

const PrimeField kUnit = PrimeField::make_unit(kDefaultPrime);

RingPtr<PrimeField> xring() {
    return make_ring<PrimeField>(numbered_names("x", 3), MonomialOrder::grevlex(), kUnit);
}

// n=1 presentation of R/(f1,f2,f3) as a module: 0 -> R(-d_j)^3 -> R -> A -> 0.
ModulePresentation<PrimeField> ci_module(const RingPtr<PrimeField>& R, const std::string& gens) {
    auto fs = parse_polynomial_list<PrimeField>(R, gens);
    std::vector<int> a;
    for (const auto& f : fs) a.push_back(f.degree());
    return make_module<PrimeField>(R, {0}, a, {fs});
}

}  // namespace

TEST_CASE("residue field presentation") {
    auto R = xring();
    auto M = ci_module(R, "x1, x2, x3");
    CHECK(M.min_degree() == 0);
    CHECK(M.socle_degree() == 0);
    CHECK(M.hilbert_function() == std::vector<int>{1});
    CHECK(module_graded_piece(M, 0).dim() == 1);
    CHECK(module_graded_piece(M, 1).dim() == 0);
    auto x1 = Polynomial<PrimeField>::variable(R, 0);
    auto m = module_multiplication_matrix(M, x1, 0);
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 1);
}

TEST_CASE("complete intersection presentations reproduce the closed-form Hilbert function") {
    auto R = xring();
    auto check = [&](const std::string& gens, CIType t) {
        auto M = ci_module(R, gens);
        auto hf = M.hilbert_function();
        CHECK(hf == ci_hilbert_function(t));
        CHECK(M.socle_degree() == t.socle_degree());
        CHECK(M.degree_bound() == t.d1 + t.d2 + t.d3);
    };
    check("x1^2, x2^2, x3^2", CIType(2, 2, 2));
    check("x1^2, x2^2, x3^4", CIType(2, 2, 4));
    check("x1^2, x2^3, x3^3", CIType(2, 3, 3));
    check("x1^3, x2^3, x3^4", CIType(3, 3, 4));
}

TEST_CASE("infinite-length cokernels are rejected") {
    auto R = xring();
    auto fs = parse_polynomial_list<PrimeField>(R, "x1^2, x1x2, x2^2");
    CHECK_THROWS_AS(make_module<PrimeField>(R, {0}, {2, 2, 2}, {fs}), NotFiniteLength);
    // The zero matrix presents a free module.
    auto z = Polynomial<PrimeField>::zero(R);
    CHECK_THROWS_AS(make_module<PrimeField>(R, {0}, {1, 1, 1}, {{z, z, z}}), NotFiniteLength);
}

TEST_CASE("shape and degree validation") {
    auto R = xring();
    auto fs = parse_polynomial_list<PrimeField>(R, "x1, x2, x3");
    CHECK_THROWS_AS(make_module<PrimeField>(R, {}, {1, 1}, {}), DegreeMismatch);
    CHECK_THROWS_AS(make_module<PrimeField>(R, {0}, {1, 1}, {{fs[0], fs[1]}}), DegreeMismatch);
    // Declared source degree 2, actual entry degree 1.
    CHECK_THROWS_AS(make_module<PrimeField>(R, {0}, {2, 1, 1}, {fs}), DegreeMismatch);
    auto bad = parse_polynomial_list<PrimeField>(R, "x1 + x2^2, x2, x3");
    CHECK_THROWS_AS(make_module<PrimeField>(R, {0}, {1, 1, 1}, {bad}), DegreeMismatch);
}

TEST_CASE("target shifts move the support") {
    auto R = xring();
    auto fs = parse_polynomial_list<PrimeField>(R, "x1, x2, x3");
    auto M = make_module<PrimeField>(R, {-1}, {0, 0, 0}, {fs});
    CHECK(M.min_degree() == -1);
    CHECK(M.socle_degree() == -1);
    CHECK(M.hilbert_function() == std::vector<int>{1});
    CHECK(module_graded_piece(M, -1).dim() == 1);
    CHECK(module_graded_piece(M, 0).dim() == 0);
}

TEST_CASE("multiplication by x3^2 on the (2,2,4) module has full rank") {
    auto R = xring();
    auto M = ci_module(R, "x1^2, x2^2, x3^4");
    auto f = parse_polynomial<PrimeField>(R, "x3^2");
    auto m = module_multiplication_matrix(M, f, 1);
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 3);
    CHECK(m.rank() == 3);
}

TEST_CASE("module and algebra multiplication ranks agree on complete intersections") {
    auto R = xring();
    Rng rng(2024);
    for (const std::string gens : {"x1^2, x2^2, x3^2", "x1^2, x2^2, x3^4", "x1^2, x2^3, x3^3"}) {
        auto M = ci_module(R, gens);
        auto A = make_quotient(R, parse_polynomial_list<PrimeField>(R, gens));
        const int e = A.socle_degree();
        REQUIRE(M.hilbert_function() == A.hilbert_function());
        for (int d = 1; d <= 3; ++d)
            for (int i = 0; i <= e; ++i) {
                auto f = random_form(R, d, rng);
                CHECK(module_multiplication_matrix(M, f, i).rank() ==
                      A.multiplication_matrix(f, i).rank());
            }
    }
}

TEST_CASE("multiplication matrices compose") {
    auto R = xring();
    auto M = ci_module(R, "x1^2, x2^3, x3^3");
    Rng rng(77);
    for (int iter = 0; iter < 5; ++iter) {
        auto f = random_form(R, 1, rng);
        auto g = random_form(R, 2, rng);
        for (int i = 0; i <= M.socle_degree(); ++i) {
            auto lhs = module_multiplication_matrix(M, f * g, i);
            auto rhs = module_multiplication_matrix(M, f, i + 2) * module_multiplication_matrix(M, g, i);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("graded piece dimensions match a direct rank computation") {
    auto R = xring();
    Rng rng(5);
    // Random 2x4 presentation with linear entries; resample until the minors
    // certify finite length.
    std::vector<std::vector<Polynomial<PrimeField>>> phi;
    for (int attempt = 0; attempt < 32; ++attempt) {
        phi.clear();
        for (int i = 0; i < 2; ++i) {
            std::vector<Polynomial<PrimeField>> row;
            for (int j = 0; j < 4; ++j) row.push_back(random_form(R, 1, rng));
            phi.push_back(std::move(row));
        }
        try {
            make_module<PrimeField>(R, {0, 0}, {1, 1, 1, 1}, phi);
            break;
        } catch (const NotFiniteLength&) {
        }
    }
    auto M = make_module<PrimeField>(R, {0, 0}, {1, 1, 1, 1}, phi);
    for (int d = 0; d <= M.degree_bound(); ++d) {
        // Independent oracle: assemble the degree-d component column by
        // column and subtract its rank from the target dimension.
        auto target = monomials_of_degree(3, d, R->order);
        auto source = monomials_of_degree(3, d - 1, R->order);
        const int target_dim = 2 * static_cast<int>(target.size());
        DenseMatrix<PrimeField> phi_d(target_dim, 4 * static_cast<int>(source.size()),
                                      kUnit.zero());
        std::unordered_map<std::string, int> index;
        std::vector<std::string> names = numbered_names("x", 3);
        for (int t = 0; t < target_dim; ++t)
            index.emplace(std::to_string(t % 2) + "|" +
                              target[static_cast<std::size_t>(t / 2)].to_string(names),
                          t);
        int col = 0;
        for (int j = 0; j < 4; ++j)
            for (const auto& m : source) {
                for (int t = 0; t < 2; ++t) {
                    Polynomial<PrimeField> g =
                        phi[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)].scaled_shifted(
                            kUnit, m);
                    for (const auto& term : g.terms()) {
                        int row = index.at(std::to_string(t) + "|" + term.m.to_string(names));
                        phi_d.at(row, col) = phi_d.at(row, col) + term.c;
                    }
                }
                ++col;
            }
        CHECK(module_graded_piece(M, d).dim() == target_dim - phi_d.rank());
    }
}

TEST_CASE("module presentation text round trip") {
    auto R = xring();
    const std::string text =
        "# complete intersection (2,2,4) as a cyclic module\n"
        "1\n"
        "0\n"
        "2 2 4\n"
        "x1^2\n"
        "x2^2\n"
        "x3^4\n";
    auto M = parse_module_presentation<PrimeField>(R, text);
    CHECK(M.hilbert_function() == ci_hilbert_function(CIType(2, 2, 4)));
    CHECK_THROWS_AS(parse_module_presentation<PrimeField>(R, "1\n0\n2 2 4\nx1^2\n"), ParseError);
    CHECK_THROWS_AS(parse_module_presentation<PrimeField>(R, "0\n"), ParseError);
    // Aliases x,y,z are accepted in entries.
    auto M2 = parse_module_presentation<PrimeField>(R, "1\n0\n1 1 1\nx\ny\nz\n");
    CHECK(M2.hilbert_function() == std::vector<int>{1});
}

TEST_CASE("generic conic matrices from the module path match the algebra path") {
    auto R = xring();
    auto S = conic_parameter_ring<PrimeField>(kUnit);
    auto M = ci_module(R, "x1^2, x2^2, x3^4");
    auto A = make_quotient(R, parse_polynomial_list<PrimeField>(R, "x1^2, x2^2, x3^4"));
    Rng rng(99);
    for (int i = 0; i + 2 <= A.socle_degree(); ++i) {
        auto BM = generic_conic_matrix(M, S, i);
        auto BA = generic_conic_matrix(A, S, i);
        REQUIRE(BM.entries.rows == BA.entries.rows);
        REQUIRE(BM.entries.cols == BA.entries.cols);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<PrimeField> c;
            for (int k = 0; k < 6; ++k) c.push_back(random_element<PrimeField>(rng, kUnit));
            CHECK(specialize(BM, c).rank() == specialize(BA, c).rank());
        }
    }
}

TEST_CASE("module locus report for a cyclic complete intersection") {
    auto R = xring();
    auto S = conic_parameter_ring<PrimeField>(kUnit);
    auto M = ci_module(R, "x1^2, x2^2, x3^2");
    auto report = locus_ideal(M, S);
    auto golden = Ideal<PrimeField>::make(S, parse_polynomial_list<PrimeField>(S, "a2, a3, a5"));
    CHECK(ideals_equal(report.total, golden));
    CHECK(report.codim == 3);
    LocusOptions opts;
    opts.mode = LocusMode::middle;
    CHECK_THROWS_AS(locus_ideal(M, S, opts), MiddleModeUnjustified);
}

TEST_CASE("module certificates for linear and conic multiplication") {
    auto R = xring();
    auto M = ci_module(R, "x1^2, x2^2, x3^4");
    auto wlp = wlp_check(M, 1, 3);
    REQUIRE(wlp.found);
    CHECK(linear_form_has_maximal_ranks(M, wlp.ell, 1));
    auto slp = slp_range2_check(M, 1, 3);
    REQUIRE(slp.found);
    CHECK(linear_form_has_maximal_ranks(M, slp.ell, 2));
}
