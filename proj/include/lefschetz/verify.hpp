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

#ifndef LEFSCHETZ_VERIFY_HPP
#define LEFSCHETZ_VERIFY_HPP

// Self-contained verification suites over the library's own results: golden
// worked examples, the random complete-intersection codimension table, and
// structural property checks. Each check is timed and, where a runtime budget
// is part of the contract, exceeding the budget fails the check.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lefschetz/apolarity.hpp"
#include "lefschetz/conic_locus.hpp"
#include "lefschetz/module_presentation.hpp"
#include "lefschetz/parser.hpp"

namespace lefschetz {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs one timed check. The body fills in passed/detail; an escaping
// exception fails the check with its message. budget_seconds = 0 means no
// budget.
template <typename Body>
CheckResult run_check(const std::string& name, double budget_seconds, Body&& body) {
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& ex) {
        r.passed = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && r.seconds >= budget_seconds) {
        r.passed = false;
        std::ostringstream os;
        os << r.detail << (r.detail.empty() ? "" : "; ") << "over budget (" << std::fixed
           << std::setprecision(2) << r.seconds << "s, budget " << std::setprecision(0)
           << budget_seconds << "s)";
        r.detail = os.str();
    }
    return r;
}

using CheckJob = std::function<CheckResult()>;

// Order-stable fan-out: result i always comes from job i, regardless of which
// worker ran it or when it finished. workers <= 1 runs everything inline.
inline std::vector<CheckResult> run_jobs(const std::vector<CheckJob>& jobs, int workers = 1) {
    std::vector<CheckResult> results(jobs.size());
    if (workers <= 1 || jobs.size() <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto drain = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            results[i] = jobs[i]();
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(workers, static_cast<int>(jobs.size()));
    pool.reserve(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
    return results;
}

namespace verify_detail {

inline PrimeField default_unit() { return PrimeField::make_unit(kDefaultPrime); }

template <Field K>
RingPtr<K> poly_ring(const K& unit) {
    return make_ring<K>(numbered_names("x", 3), MonomialOrder::grevlex(), unit);
}

template <Field K>
std::string field_name(const K&) {
    return "Q";
}
inline std::string field_name(const PrimeField& unit) {
    return "F_" + std::to_string(unit.modulus());
}

inline int hf_at(const HilbertFunction& hf, int d) {
    if (d < 0 || d >= static_cast<int>(hf.size())) return 0;
    return hf[static_cast<std::size_t>(d)];
}

inline std::string type_str(const CIType& t) {
    return "(" + std::to_string(t.d1) + "," + std::to_string(t.d2) + "," + std::to_string(t.d3) +
           ")";
}

// Complete-intersection types with 2 <= d1 <= d2 <= d3 and socle degree <= emax,
// in (socle degree, d1, d2) order, truncated to the first `count`.
inline std::vector<CIType> ci_types_up_to(int emax, std::size_t count) {
    std::vector<CIType> out;
    for (int e = 3; e <= emax && out.size() < count; ++e)
        for (int d1 = 2; 3 * d1 <= e + 3 && out.size() < count; ++d1)
            for (int d2 = d1; d1 + 2 * d2 <= e + 3 && out.size() < count; ++d2)
                out.emplace_back(d1, d2, e + 3 - d1 - d2);
    return out;
}

// Locus of a monomial CI against golden generators: two-way membership
// equality plus the stated codimension.
template <Field K>
bool golden_locus(const K& unit, const CIType& t, const std::string& golden_gens, int want_codim,
                  std::string* why) {
    auto R = poly_ring(unit);
    auto S = conic_parameter_ring<K>(unit);
    auto A = monomial_ci(R, t);
    auto rep = locus_ideal(A, S, LocusOptions{});
    auto G = Ideal<K>::make(S, parse_polynomial_list<K>(S, golden_gens));
    if (!ideals_equal(rep.total, G)) {
        *why = field_name(unit) + ": ideal mismatch";
        return false;
    }
    if (rep.codim != want_codim) {
        *why = field_name(unit) + ": codim " + std::to_string(rep.codim) + " wanted " +
               std::to_string(want_codim);
        return false;
    }
    return true;
}

// Duality, rank-jump containment, and middle-degree equality for one monomial
// CI over one field; all assertions are exact membership checks.
template <Field K>
bool monomial_ideal_structure(const K& unit, const CIType& t, std::string* why) {
    auto R = poly_ring(unit);
    auto S = conic_parameter_ring<K>(unit);
    auto A = monomial_ci(R, t);
    const int e = A.socle_degree();
    const auto& hf = A.hilbert_function();
    auto tag = [&](int i) { return field_name(unit) + " " + type_str(t) + " i=" + std::to_string(i); };

    std::vector<Ideal<K>> ideals;
    std::vector<GroebnerBasis<K>> gbs;
    for (int i = 0; i <= e - 2; ++i) {
        ideals.push_back(minors_ideal(generic_conic_matrix(A, S, i)));
        gbs.push_back(buchberger(ideals.back()));
    }
    auto contained = [&](const Ideal<K>& I, const GroebnerBasis<K>& gb) {
        for (const auto& g : I.gens)
            if (!ideal_membership(g, gb)) return false;
        return true;
    };

    // Duality: the degree-i and degree-(e-2-i) ideals agree.
    for (int i = 0; i <= e - 2 - i; ++i) {
        int j = e - 2 - i;
        if (!contained(ideals[i], gbs[j]) || !contained(ideals[j], gbs[i])) {
            *why = "duality failed at " + tag(i);
            return false;
        }
    }
    // Containment under the rank-jump hypothesis: h_i <= h_{i+2} <= h_{i+4}
    // and no socle in degrees i, i+1 force I_{i+2} inside I_i.
    for (int i = 0; i + 2 <= e - 2; ++i) {
        if (hf_at(hf, i) > hf_at(hf, i + 2) || hf_at(hf, i + 2) > hf_at(hf, i + 4)) continue;
        if (A.socle_in_degree(i) || A.socle_in_degree(i + 1)) continue;
        if (!contained(ideals[i + 2], gbs[i])) {
            *why = "containment failed at " + tag(i);
            return false;
        }
    }
    // Middle-degree equality: the total locus ideal is the middle ideal. The
    // intersection is contained in I_m for free, so equality reduces to
    // I_m being contained in every I_i.
    const int m = (e - 2) / 2;
    for (int i = 0; i <= e - 2; ++i) {
        if (!contained(ideals[m], gbs[i])) {
            *why = "middle equality failed at " + tag(i);
            return false;
        }
    }
    return true;
}

// Criterion-2 table row: computed codimension equals the classifier for
// every seed, within the per-instance budget.
inline CheckResult check_random_ci_codim(const CIType& t, int want) {
    return run_check("2 random " + type_str(t) + " codim", 0.0, [&](CheckResult& r) {
        PrimeField unit = default_unit();
        auto R = poly_ring(unit);
        auto S = conic_parameter_ring<PrimeField>(unit);
        if (expected_codim_ci(t) != want) {
            r.detail = "classifier disagrees with pinned value";
            return;
        }
        std::ostringstream os;
        bool ok = true;
        int first = -2;
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            auto t0 = std::chrono::steady_clock::now();
            auto A = random_ci(R, t, seed);
            int c = locus_codim(A, S);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (first == -2) first = c;
            if (c != want || c != first || secs >= 180.0) ok = false;
            os << " seed" << seed << ":" << c << " (" << std::fixed << std::setprecision(2) << secs
               << "s)";
        }
        r.passed = ok;
        r.detail = "want " + std::to_string(want) + ";" + os.str();
    });
}

}  // namespace verify_detail

// Golden worked examples (criteria 1a-1e): exact ideals and codimensions over
// both the rationals and the default prime field, with pinned runtime budgets.
inline std::vector<CheckResult> verify_paper_examples(int workers = 1) {
    using namespace verify_detail;
    std::vector<CheckJob> jobs;

    jobs.push_back([] {
        return run_check("1a (2,2,2) golden ideal", 1.0, [](CheckResult& r) {
            std::string why;
            r.passed = golden_locus(default_unit(), CIType(2, 2, 2), "a2, a3, a5", 3, &why) &&
                       golden_locus(Rational(1), CIType(2, 2, 2), "a2, a3, a5", 3, &why);
            r.detail = r.passed ? "total = (a2, a3, a5), codim 3 over F_32003 and Q" : why;
        });
    });

    jobs.push_back([] {
        return run_check("1b (2,2,4) golden ideal + radical", 5.0, [](CheckResult& r) {
            const std::string golden = "a6^3, a5*a6^2, a3*a6^2, 2*a3*a5*a6 - a2*a6^2";
            std::string why;
            if (!golden_locus(default_unit(), CIType(2, 2, 4), golden, 1, &why) ||
                !golden_locus(Rational(1), CIType(2, 2, 4), golden, 1, &why)) {
                r.detail = why;
                return;
            }
            // Radical membership pins the reduced locus to the plane a6 = 0.
            auto run_radical = [&](auto unit) {
                using KF = decltype(unit);
                auto R = poly_ring<KF>(unit);
                auto S = conic_parameter_ring<KF>(unit);
                auto rep = locus_ideal(monomial_ci(R, CIType(2, 2, 4)), S, LocusOptions{});
                return radical_membership(parse_polynomial<KF>(S, "a6"), rep.total) &&
                       !radical_membership(parse_polynomial<KF>(S, "a5"), rep.total);
            };
            r.passed = run_radical(default_unit()) && run_radical(Rational(1));
            r.detail = r.passed ? "4 generators, codim 1, a6 in radical, a5 not; F_32003 and Q"
                                : "radical membership mismatch";
        });
    });

    jobs.push_back([] {
        return run_check("1c (3,3,4) codim", 120.0, [](CheckResult& r) {
            PrimeField unit = default_unit();
            int cf = locus_codim(monomial_ci(poly_ring(unit), CIType(3, 3, 4)),
                                 conic_parameter_ring<PrimeField>(unit));
            int cq = locus_codim(monomial_ci(poly_ring<Rational>(Rational(1)), CIType(3, 3, 4)),
                                 conic_parameter_ring<Rational>(Rational(1)));
            r.passed = cf == 2 && cq == 2;
            r.detail = "codim " + std::to_string(cf) + " over F_32003, " + std::to_string(cq) +
                       " over Q; want 2";
        });
    });

    jobs.push_back([] {
        return run_check("1d (4,4,6) exact vs slicing", 960.0, [](CheckResult& r) {
            using Clock = std::chrono::steady_clock;
            PrimeField unit = default_unit();
            auto R = poly_ring(unit);
            auto S = conic_parameter_ring<PrimeField>(unit);
            auto A = monomial_ci(R, CIType(4, 4, 6));
            auto t0 = Clock::now();
            int exact = locus_codim(A, S);
            int exact_q = locus_codim(monomial_ci(poly_ring<Rational>(Rational(1)), CIType(4, 4, 6)),
                                      conic_parameter_ring<Rational>(Rational(1)));
            double exact_secs = std::chrono::duration<double>(Clock::now() - t0).count();
            t0 = Clock::now();
            int sliced = locus_codim_via_slicing(A, S, 17);
            double slice_secs = std::chrono::duration<double>(Clock::now() - t0).count();
            r.passed = exact == 1 && exact_q == 1 && sliced == 1 && exact_secs < 900.0 &&
                       slice_secs < 60.0;
            std::ostringstream os;
            os << "exact " << exact << " (F), " << exact_q << " (Q) in " << std::fixed
               << std::setprecision(2) << exact_secs << "s; slicing " << sliced << " in "
               << slice_secs << "s; want 1, budgets 900s/60s";
            r.detail = os.str();
        });
    });

    jobs.push_back([] {
        return run_check("1e d3 = d1+d2 drops below expected codim", 0.0, [](CheckResult& r) {
            bool ok = true;
            std::ostringstream os;
            for (CIType t : {CIType(2, 2, 4), CIType(2, 3, 5), CIType(3, 3, 6)}) {
                PrimeField unit = default_unit();
                int cf = locus_codim(monomial_ci(poly_ring(unit), t),
                                     conic_parameter_ring<PrimeField>(unit));
                int cq = locus_codim(monomial_ci(poly_ring<Rational>(Rational(1)), t),
                                     conic_parameter_ring<Rational>(Rational(1)));
                int want_expected = expected_codim_ci(t);
                ok = ok && cf == 1 && cq == 1 && want_expected == 2;
                os << type_str(t) << ": codim " << cf << "/" << cq << " expected "
                   << want_expected << "; ";
            }
            r.passed = ok;
            r.detail = os.str() + "want codim 1 with expected 2";
        });
    });

    return run_jobs(jobs, workers);
}

// Random complete-intersection codimension table (criterion 2) and the
// even-socle hypersurface degree (criterion 3).
inline std::vector<CheckResult> verify_theorem_main_ci(int workers = 1) {
    using namespace verify_detail;
    std::vector<CheckJob> jobs;
    const std::vector<std::pair<CIType, int>> table = {
        {CIType(2, 2, 3), 1}, {CIType(2, 2, 6), 1}, {CIType(2, 2, 4), 2},
        {CIType(2, 3, 5), 2}, {CIType(2, 3, 3), 3}, {CIType(3, 3, 4), 3},
    };
    for (const auto& row : table)
        jobs.push_back([row] { return check_random_ci_codim(row.first, row.second); });

    jobs.push_back([] {
        return run_check("3 even socle degree: hypersurface of degree h_{e/2-1}", 0.0,
                         [](CheckResult& r) {
            PrimeField unit = default_unit();
            auto R = poly_ring(unit);
            auto S = conic_parameter_ring<PrimeField>(unit);
            bool ok = true;
            std::ostringstream os;
            for (std::uint64_t seed : {1ULL, 2ULL}) {
                for (int kind = 0; kind < 2; ++kind) {
                    QuotientAlgebra<PrimeField> A =
                        kind == 0 ? random_ci(R, CIType(2, 2, 3), seed)
                                  : random_gorenstein(4, seed);
                    auto rep = locus_ideal(A, S, LocusOptions{});
                    int e = A.socle_degree();
                    int h_mid = A.hilbert_function()[static_cast<std::size_t>(e / 2 - 1)];
                    bool good = rep.codim == 1 && rep.degree.has_value() &&
                                *rep.degree == BigInt(h_mid) && h_mid == 3;
                    ok = ok && good;
                    os << (kind == 0 ? "ci" : "gor") << " seed" << seed << ": codim " << rep.codim
                       << " deg " << (rep.degree ? rep.degree->str() : "-") << "; ";
                }
            }
            r.passed = ok;
            r.detail = os.str() + "want codim 1 degree 3";
        });
    });

    return run_jobs(jobs, workers);
}

// Structural property suite (criterion 4).
inline std::vector<CheckResult> verify_properties(int workers = 1) {
    using namespace verify_detail;
    std::vector<CheckJob> jobs;
    const std::vector<CIType> wlp_types = ci_types_up_to(9, 20);
    const std::vector<CIType> small_types = ci_types_up_to(7, 100);

    jobs.push_back([wlp_types] {
        return run_check("4a WLP certificates (20 random CIs, e <= 9)", 0.0, [&](CheckResult& r) {
            PrimeField unit = default_unit();
            auto R = poly_ring(unit);
            int found = 0;
            std::string misses;
            for (std::size_t k = 0; k < wlp_types.size(); ++k) {
                auto A = random_ci(R, wlp_types[k], 100 + k);
                auto cert = wlp_check(A, 1, 3);
                if (cert.found && cert.trials_used <= 3)
                    ++found;
                else
                    misses += " " + type_str(wlp_types[k]);
            }
            r.passed = found == static_cast<int>(wlp_types.size());
            r.detail = std::to_string(found) + "/" + std::to_string(wlp_types.size()) +
                       " certified within 3 trials" + (misses.empty() ? "" : ";" + misses);
        });
    });

    jobs.push_back([wlp_types] {
        return run_check("4b SLP-at-range-2 certificates (same instances)", 0.0,
                         [&](CheckResult& r) {
            PrimeField unit = default_unit();
            auto R = poly_ring(unit);
            int found = 0;
            std::string misses;
            for (std::size_t k = 0; k < wlp_types.size(); ++k) {
                auto A = random_ci(R, wlp_types[k], 100 + k);
                auto cert = slp_range2_check(A, 1, 3);
                if (cert.found && cert.trials_used <= 3)
                    ++found;
                else
                    misses += " " + type_str(wlp_types[k]);
            }
            r.passed = found == static_cast<int>(wlp_types.size());
            r.detail = std::to_string(found) + "/" + std::to_string(wlp_types.size()) +
                       " certified within 3 trials" + (misses.empty() ? "" : ";" + misses);
        });
    });

    jobs.push_back([small_types] {
        return run_check("4c duality + containments + middle equality (monomial CIs, e <= 7)", 0.0,
                         [&](CheckResult& r) {
            std::string why;
            for (const CIType& t : small_types) {
                if (!monomial_ideal_structure(default_unit(), t, &why) ||
                    !monomial_ideal_structure(Rational(1), t, &why)) {
                    r.detail = why;
                    return;
                }
            }
            r.passed = true;
            r.detail = std::to_string(small_types.size()) +
                       " monomial types over F_32003 and Q, exact membership";
        });
    });

    jobs.push_back([small_types] {
        return run_check("4d specialization coherence (100 conics per instance)", 0.0,
                         [&](CheckResult& r) {
            PrimeField unit = default_unit();
            auto R = poly_ring(unit);
            auto S = conic_parameter_ring<PrimeField>(unit);
            Rng rng(2026);
            for (const CIType& t : small_types) {
                auto A = monomial_ci(R, t);
                const int e = A.socle_degree();
                std::vector<GenericConicMatrix<PrimeField>> mats;
                for (int i = 0; i <= e - 2; ++i) mats.push_back(generic_conic_matrix(A, S, i));
                for (int trial = 0; trial < 100; ++trial) {
                    std::vector<PrimeField> c;
                    for (int k = 0; k < 6; ++k) c.push_back(random_element<PrimeField>(rng, unit));
                    auto conic = conic_from_coefficients(R, c);
                    for (int i = 0; i <= e - 2; ++i) {
                        if (specialize(mats[static_cast<std::size_t>(i)], c) !=
                            A.multiplication_matrix(conic, i, 2)) {
                            r.detail = "mismatch at " + type_str(t) + " i=" + std::to_string(i);
                            return;
                        }
                    }
                }
            }
            r.passed = true;
            r.detail = std::to_string(small_types.size()) + " instances, all degrees, 100 conics";
        });
    });

    jobs.push_back([] {
        return run_check("4e slicing agrees with exact codim (criteria 1-2 instances)", 0.0,
                         [](CheckResult& r) {
            PrimeField unit = default_unit();
            auto R = poly_ring(unit);
            auto S = conic_parameter_ring<PrimeField>(unit);
            std::ostringstream os;
            for (CIType t : {CIType(2, 2, 2), CIType(2, 2, 4), CIType(3, 3, 4), CIType(4, 4, 6),
                             CIType(2, 3, 5), CIType(3, 3, 6)}) {
                auto A = monomial_ci(R, t);
                int exact = locus_codim(A, S);
                int sliced = locus_codim_via_slicing(A, S, 23);
                if (exact != sliced) {
                    r.detail = "monomial " + verify_detail::type_str(t) + ": exact " +
                               std::to_string(exact) + " sliced " + std::to_string(sliced);
                    return;
                }
            }
            for (CIType t : {CIType(2, 2, 3), CIType(2, 2, 6), CIType(2, 2, 4), CIType(2, 3, 5),
                             CIType(2, 3, 3), CIType(3, 3, 4)}) {
                for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
                    auto A = random_ci(R, t, seed);
                    int exact = locus_codim(A, S);
                    int sliced = locus_codim_via_slicing(A, S, 23 + seed);
                    if (exact != sliced) {
                        r.detail = "random " + verify_detail::type_str(t) + " seed " +
                                   std::to_string(seed) + ": exact " + std::to_string(exact) +
                                   " sliced " + std::to_string(sliced);
                        return;
                    }
                }
            }
            r.passed = true;
            r.detail = "6 monomial + 18 random instances agree";
        });
    });

    jobs.push_back([] {
        return run_check("4f expected codim bounds computed codim", 0.0, [](CheckResult& r) {
            PrimeField unit = default_unit();
            auto R = poly_ring(unit);
            auto S = conic_parameter_ring<PrimeField>(unit);
            auto check_one = [&](const QuotientAlgebra<PrimeField>& A, const std::string& label,
                                 std::string* why) {
                int expected = expected_codim_locus(A);
                int computed = locus_codim(A, S);
                if (expected < computed) {
                    *why = label + ": expected " + std::to_string(expected) + " < computed " +
                           std::to_string(computed);
                    return false;
                }
                return true;
            };
            std::string why;
            int instances = 0;
            for (CIType t : {CIType(2, 2, 2), CIType(2, 2, 4), CIType(3, 3, 4), CIType(4, 4, 6),
                             CIType(2, 3, 5), CIType(3, 3, 6)}) {
                if (!check_one(monomial_ci(R, t), "monomial " + verify_detail::type_str(t), &why)) {
                    r.detail = why;
                    return;
                }
                ++instances;
            }
            for (CIType t : {CIType(2, 2, 3), CIType(2, 2, 6), CIType(2, 2, 4), CIType(2, 3, 5),
                             CIType(2, 3, 3), CIType(3, 3, 4)}) {
                for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
                    if (!check_one(random_ci(R, t, seed),
                                   "random " + verify_detail::type_str(t), &why)) {
                        r.detail = why;
                        return;
                    }
                    ++instances;
                }
            }
            if (!check_one(random_gorenstein(4, 1), "gorenstein e=4", &why)) {
                r.detail = why;
                return;
            }
            ++instances;
            r.passed = true;
            r.detail = std::to_string(instances) + " instances, bound holds on each";
        });
    });

    return run_jobs(jobs, workers);
}

// Cross-path consistency (criterion 5): a complete intersection presented as
// a one-generator module reproduces the quotient-algebra Hilbert function and
// every multiplication-matrix rank.
inline std::vector<CheckResult> verify_module_consistency(int workers = 1) {
    using namespace verify_detail;
    std::vector<CheckJob> jobs;
    jobs.push_back([] {
        return run_check("5 module path reproduces algebra path", 0.0, [](CheckResult& r) {
            PrimeField unit = default_unit();
            auto R = poly_ring(unit);
            Rng rng(404);
            for (CIType t : {CIType(2, 2, 2), CIType(2, 2, 4), CIType(2, 3, 3)}) {
                auto A = monomial_ci(R, t);
                const auto& gens = A.ideal().gens;
                auto M = make_module<PrimeField>(R, {0}, {t.d1, t.d2, t.d3},
                                                 {{gens[0], gens[1], gens[2]}});
                if (M.hilbert_function() != A.hilbert_function()) {
                    r.detail = type_str(t) + ": Hilbert function mismatch";
                    return;
                }
                std::vector<Polynomial<PrimeField>> multipliers;
                for (const auto& mono : conic_monomials())
                    multipliers.push_back(Polynomial<PrimeField>::monomial(R, mono, unit.one()));
                for (int v = 0; v < 3; ++v)
                    multipliers.push_back(Polynomial<PrimeField>::variable(R, v));
                for (int extra = 0; extra < 10; ++extra) {
                    std::vector<PrimeField> c;
                    for (int k = 0; k < 6; ++k) c.push_back(random_element<PrimeField>(rng, unit));
                    multipliers.push_back(conic_from_coefficients(R, c));
                }
                for (const auto& f : multipliers) {
                    int deg = f.is_zero() ? 2 : f.degree();
                    for (int i = 0; i <= A.socle_degree(); ++i) {
                        if (M.multiplication_matrix(f, i, deg).rank() !=
                            A.multiplication_matrix(f, i, deg).rank()) {
                            r.detail = type_str(t) + ": rank mismatch at degree " +
                                       std::to_string(i);
                            return;
                        }
                    }
                }
            }
            r.passed = true;
            r.detail = "(2,2,2), (2,2,4), (2,3,3): Hilbert functions and all ranks agree";
        });
    });
    return run_jobs(jobs, workers);
}

// Named-suite dispatch shared by the CLI and the acceptance harness.
inline std::vector<CheckResult> verify_suite(const std::string& name, int workers = 1) {
    if (name == "paper-examples") return verify_paper_examples(workers);
    if (name == "theorem-main-ci") return verify_theorem_main_ci(workers);
    if (name == "properties") return verify_properties(workers);
    if (name == "module") return verify_module_consistency(workers);
    throw std::invalid_argument("unknown suite: " + name);
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

inline std::string format_check_table(const std::vector<CheckResult>& results) {
    std::size_t width = 4;
    for (const auto& r : results) width = std::max(width, r.name.size());
    std::ostringstream os;
    int passed = 0;
    for (const auto& r : results) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(static_cast<int>(width))
           << r.name << "  " << std::right << std::fixed << std::setprecision(2) << std::setw(8)
           << r.seconds << "s  " << r.detail << "\n";
        if (r.passed) ++passed;
    }
    os << passed << "/" << results.size() << " checks passed\n";
    return os.str();
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_VERIFY_HPP
