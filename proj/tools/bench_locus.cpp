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

// Timing harness for the expensive per-degree minors-ideal computations.
// Not part of the test suite; run by hand when tuning the locus strategy.

#include <chrono>
#include <cstdio>
#include <string>

#include "lefschetz/conic_locus.hpp"
#include "lefschetz/fields.hpp"

using namespace lefschetz;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_degree(const char* label, const QuotientAlgebra<PrimeField>& A,
                  const RingPtr<PrimeField>& S, int i) {
    auto t0 = Clock::now();
    auto B = generic_conic_matrix(A, S, i);
    auto I = minors_ideal(B);
    double t_minors = seconds_since(t0);
    std::printf("%s i=%d: %d x %d, %zu minors (%.2fs minors)\n", label, i, B.entries.rows,
                B.entries.cols, I.gens.size(), t_minors);
    std::fflush(stdout);
    t0 = Clock::now();
    auto dd = dimension_and_degree(I);
    std::printf("%s i=%d: codim %d degree %s (%.2fs groebner)\n", label, i, dd.codim,
                dd.degree.str().c_str(), seconds_since(t0));
    std::fflush(stdout);
}

void bench_slicing(const char* label, const QuotientAlgebra<PrimeField>& A,
                   const RingPtr<PrimeField>& S, int i) {
    auto B = generic_conic_matrix(A, S, i);
    auto t0 = Clock::now();
    auto I = minors_ideal(B);
    double t_minors = seconds_since(t0);
    t0 = Clock::now();
    int c = codim_via_slicing(I, 7, 3);
    std::printf("%s i=%d (slicing): %zu minors (%.2fs), codim %d (%.2fs)\n", label, i,
                I.gens.size(), t_minors, c, seconds_since(t0));
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    PrimeField unit = PrimeField::make_unit(kDefaultPrime);
    auto xring = make_ring<PrimeField>(numbered_names("x", 3), MonomialOrder::grevlex(), unit);
    auto S = conic_parameter_ring<PrimeField>(unit);

    if (which == "all" || which == "334") {
        auto A = monomial_ci(xring, CIType(3, 3, 4));
        bench_degree("mono334", A, S, 1);
        bench_degree("mono334", A, S, 2);
    }
    if (which == "all" || which == "334r") {
        auto A = random_ci(xring, CIType(3, 3, 4), 11);
        bench_degree("rand334", A, S, 1);
        bench_degree("rand334", A, S, 2);
    }
    if (which == "all" || which == "235") {
        auto A = monomial_ci(xring, CIType(2, 3, 5));
        for (int i = 1; i <= 4; ++i) bench_degree("mono235", A, S, i);
    }
    if (which == "446") {
        auto A = monomial_ci(xring, CIType(4, 4, 6));
        bench_slicing("mono446", A, S, 4);
    }
    if (which == "446exact") {
        auto A = monomial_ci(xring, CIType(4, 4, 6));
        bench_degree("mono446", A, S, 4);
    }
    if (which == "446all") {
        auto A = monomial_ci(xring, CIType(4, 4, 6));
        for (int i = 0; i <= 4; ++i) bench_degree("mono446", A, S, i);
    }
    if (which == "446rand") {
        auto A = random_ci(xring, CIType(4, 4, 6), 11);
        bench_degree("rand446", A, S, 4);
    }
    if (which == "336") {
        auto A = monomial_ci(xring, CIType(3, 3, 6));
        for (int i = 0; i <= 3; ++i) bench_degree("mono336", A, S, i);
    }
    if (which == "rational") {
        // Golden monomial instances over Q: decides whether the acceptance
        // checks can afford the characteristic-zero pass.
        auto qring =
            make_ring<Rational>(numbered_names("x", 3), MonomialOrder::grevlex(), Rational(1));
        auto QS = conic_parameter_ring<Rational>(Rational(1));
        for (CIType t : {CIType(2, 2, 2), CIType(2, 2, 4), CIType(2, 3, 5), CIType(3, 3, 4),
                         CIType(3, 3, 6), CIType(4, 4, 6)}) {
            auto A = monomial_ci(qring, t);
            auto t0 = Clock::now();
            int c = locus_codim(A, QS);
            std::printf("monoQ(%d,%d,%d): codim %d (%.2fs)\n", t.d1, t.d2, t.d3, c,
                        seconds_since(t0));
            std::fflush(stdout);
        }
    }
    if (which == "crit2") {
        for (CIType t : {CIType(2, 2, 3), CIType(2, 2, 6), CIType(2, 2, 4), CIType(2, 3, 5),
                         CIType(2, 3, 3), CIType(3, 3, 4)}) {
            for (std::uint64_t seed : {1, 2, 3}) {
                auto A = random_ci(xring, t, seed);
                auto t0 = Clock::now();
                int c = locus_codim(A, S);
                std::printf("rand(%d,%d,%d) seed %llu: codim %d (%.2fs)\n", t.d1, t.d2, t.d3,
                            static_cast<unsigned long long>(seed), c, seconds_since(t0));
                std::fflush(stdout);
            }
        }
    }
    return 0;
}
