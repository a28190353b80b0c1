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

#ifndef LEFSCHETZ_CONIC_LOCUS_HPP
#define LEFSCHETZ_CONIC_LOCUS_HPP

#include <map>
#include <optional>
#include <vector>

#include "lefschetz/artinian.hpp"
#include "lefschetz/groebner.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/module_presentation.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

// The parameter correspondence: a1 <-> x1^2, a2 <-> x1x2, a3 <-> x1x3,
// a4 <-> x2^2, a5 <-> x2x3, a6 <-> x3^2. Everything downstream depends on
// this exact order.
inline const std::vector<Monomial>& conic_monomials() {
    static const std::vector<Monomial> kList = {
        Monomial::from_exponents({2, 0, 0}), Monomial::from_exponents({1, 1, 0}),
        Monomial::from_exponents({1, 0, 1}), Monomial::from_exponents({0, 2, 0}),
        Monomial::from_exponents({0, 1, 1}), Monomial::from_exponents({0, 0, 2})};
    return kList;
}

// S = k[a1..a6], the coordinate ring of the space of conics.
template <Field K>
RingPtr<K> conic_parameter_ring(const K& unit) {
    return make_ring<K>(numbered_names("a", 6), MonomialOrder::grevlex(), unit);
}

// The conic with the given six coefficients, as an element of the polynomial
// ring of the algebra.
template <Field K>
Polynomial<K> conic_from_coefficients(const RingPtr<K>& xring, const std::vector<K>& c) {
    if (static_cast<int>(c.size()) != 6 || xring->arity() != 3)
        throw ArityMismatch("a conic takes six coefficients over three variables");
    Polynomial<K> f = Polynomial<K>::zero(xring);
    for (int k = 0; k < 6; ++k)
        f += Polynomial<K>::monomial(xring, conic_monomials()[static_cast<std::size_t>(k)],
                                     c[static_cast<std::size_t>(k)]);
    return f;
}

// B_i, the h_{i+2} x h_i matrix of linear forms in a1..a6 representing
// multiplication by the generic conic from [A]_i to [A]_{i+2}.
template <Field K>
struct GenericConicMatrix {
    RingPtr<K> sring;
    int i = 0;
    PolyMatrix<K> entries;
};

template <Field K>
GenericConicMatrix<K> generic_conic_matrix(const QuotientAlgebra<K>& A, const RingPtr<K>& sring, int i) {
    const int e = A.socle_degree();
    if (i < 0 || i > e - 2) throw DegreeOutOfRange("conic degree index outside [0, e-2]");
    std::vector<DenseMatrix<K>> layers;
    for (int k = 0; k < 6; ++k) {
        Polynomial<K> mk = Polynomial<K>::monomial(A.ring(), conic_monomials()[static_cast<std::size_t>(k)],
                                                   A.ring()->unit);
        layers.push_back(A.multiplication_matrix(mk, i));
    }
    const int rows = layers[0].rows();
    const int cols = layers[0].cols();
    PolyMatrix<K> m(sring, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::vector<Term<K>> terms;
            for (int k = 0; k < 6; ++k) {
                const K& coeff = layers[static_cast<std::size_t>(k)].at(r, c);
                if (!coeff.is_zero()) terms.push_back({Monomial::variable(6, k), coeff});
            }
            m.at(r, c) = Polynomial<K>::from_terms(sring, std::move(terms));
        }
    return {sring, i, std::move(m)};
}

// Module overload. No degree window is enforced: pieces outside the support
// are zero and give 0 x 0 (or one-sided) matrices.
template <Field K>
GenericConicMatrix<K> generic_conic_matrix(const ModulePresentation<K>& M, const RingPtr<K>& sring, int i) {
    std::vector<DenseMatrix<K>> layers;
    for (int k = 0; k < 6; ++k) {
        Polynomial<K> mk = Polynomial<K>::monomial(M.ring(), conic_monomials()[static_cast<std::size_t>(k)],
                                                   M.ring()->unit);
        layers.push_back(M.multiplication_matrix(mk, i));
    }
    const int rows = layers[0].rows();
    const int cols = layers[0].cols();
    PolyMatrix<K> m(sring, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::vector<Term<K>> terms;
            for (int k = 0; k < 6; ++k) {
                const K& coeff = layers[static_cast<std::size_t>(k)].at(r, c);
                if (!coeff.is_zero()) terms.push_back({Monomial::variable(6, k), coeff});
            }
            m.at(r, c) = Polynomial<K>::from_terms(sring, std::move(terms));
        }
    return {sring, i, std::move(m)};
}

// Specializes B_i at a coefficient tuple; equals the multiplication matrix of
// the corresponding concrete conic.
template <Field K>
DenseMatrix<K> specialize(const GenericConicMatrix<K>& B, const std::vector<K>& c) {
    return B.entries.evaluated(c);
}

// I(C_{A,i}): the ideal of maximal minors of B_i.
template <Field K>
Ideal<K> minors_ideal(const GenericConicMatrix<K>& B) {
    return Ideal<K>::make(B.sring, maximal_minors(B.entries));
}

// ---------------------------------------------------------------------------
// Rank checkers.

struct ConicTestResult {
    bool lefschetz = false;
    int first_failure = -1;  // degree index of the first submaximal rank, or -1
};

template <Field K>
ConicTestResult is_lefschetz_conic(const QuotientAlgebra<K>& A, const Polynomial<K>& C) {
    if (C.is_zero() || !C.is_homogeneous() || C.degree() != 2)
        throw NotDegreeTwo("a conic is a nonzero homogeneous form of degree two");
    const auto& hf = A.hilbert_function();
    const int e = A.socle_degree();
    for (int i = 0; i + 2 <= e; ++i) {
        const int full = std::min(hf[static_cast<std::size_t>(i)], hf[static_cast<std::size_t>(i) + 2]);
        if (A.multiplication_matrix(C, i).rank() < full) return {false, i};
    }
    return {true, -1};
}

// Certificate from randomized search: maximal rank is an open condition, so
// any one witness proves the property; failure is only inconclusive.
template <Field K>
struct LefschetzCertificate {
    bool found = false;
    Polynomial<K> ell;
    int trials_used = 0;
    std::uint64_t seed = 0;
};

template <Field K>
bool linear_form_has_maximal_ranks(const QuotientAlgebra<K>& A, const Polynomial<K>& ell, int power) {
    const auto& hf = A.hilbert_function();
    const int e = A.socle_degree();
    Polynomial<K> f = power == 1 ? ell : ell * ell;
    for (int i = 0; i + power <= e; ++i) {
        const int full =
            std::min(hf[static_cast<std::size_t>(i)], hf[static_cast<std::size_t>(i + power)]);
        if (A.multiplication_matrix(f, i).rank() < full) return false;
    }
    return true;
}

template <Field K>
LefschetzCertificate<K> wlp_check(const QuotientAlgebra<K>& A, std::uint64_t seed, int trials) {
    Rng rng(seed);
    for (int t = 1; t <= trials; ++t) {
        Polynomial<K> ell = random_form(A.ring(), 1, rng);
        if (linear_form_has_maximal_ranks(A, ell, 1)) return {true, ell, t, seed};
    }
    return {false, Polynomial<K>::zero(A.ring()), trials, seed};
}

template <Field K>
LefschetzCertificate<K> slp_range2_check(const QuotientAlgebra<K>& A, std::uint64_t seed, int trials) {
    Rng rng(seed);
    for (int t = 1; t <= trials; ++t) {
        Polynomial<K> ell = random_form(A.ring(), 1, rng);
        if (linear_form_has_maximal_ranks(A, ell, 2)) return {true, ell, t, seed};
    }
    return {false, Polynomial<K>::zero(A.ring()), trials, seed};
}

template <Field K>
bool linear_form_has_maximal_ranks(const ModulePresentation<K>& M, const Polynomial<K>& ell, int power) {
    Polynomial<K> f = power == 1 ? ell : ell * ell;
    for (int i = M.min_degree(); i + power <= M.socle_degree(); ++i) {
        const int full = std::min(M.piece(i).dim(), M.piece(i + power).dim());
        if (M.multiplication_matrix(f, i).rank() < full) return false;
    }
    return true;
}

template <Field K>
LefschetzCertificate<K> wlp_check(const ModulePresentation<K>& M, std::uint64_t seed, int trials) {
    Rng rng(seed);
    for (int t = 1; t <= trials; ++t) {
        Polynomial<K> ell = random_form(M.ring(), 1, rng);
        if (linear_form_has_maximal_ranks(M, ell, 1)) return {true, ell, t, seed};
    }
    return {false, Polynomial<K>::zero(M.ring()), trials, seed};
}

template <Field K>
LefschetzCertificate<K> slp_range2_check(const ModulePresentation<K>& M, std::uint64_t seed, int trials) {
    Rng rng(seed);
    for (int t = 1; t <= trials; ++t) {
        Polynomial<K> ell = random_form(M.ring(), 1, rng);
        if (linear_form_has_maximal_ranks(M, ell, 2)) return {true, ell, t, seed};
    }
    return {false, Polynomial<K>::zero(M.ring()), trials, seed};
}

// A conic witness that every B_i drops rank only on a proper subvariety;
// proves codim I(C_{A,i}) >= 1 for every i simultaneously.
template <Field K>
LefschetzCertificate<K> lefschetz_conic_search(const QuotientAlgebra<K>& A, std::uint64_t seed, int trials) {
    Rng rng(seed);
    for (int t = 1; t <= trials; ++t) {
        Polynomial<K> c = random_form(A.ring(), 2, rng);
        if (is_lefschetz_conic(A, c).lefschetz) return {true, c, t, seed};
    }
    return {false, Polynomial<K>::zero(A.ring()), trials, seed};
}

// ---------------------------------------------------------------------------
// Expected codimension classifiers.

inline int expected_codim_ci(const CIType& t) {
    const int e = t.socle_degree();
    if (e % 2 == 0 || t.d3 > t.d1 + t.d2) return 1;
    if (t.d3 == t.d1 + t.d2) return 2;
    return 3;
}

inline int expected_codim_locus(const HilbertFunction& hf) {
    const int e = static_cast<int>(hf.size()) - 1;
    if (e < 2) return 6;
    const int m = e / 2 - 1;
    int jump = hf[static_cast<std::size_t>(m + 2)] - hf[static_cast<std::size_t>(m)];
    if (jump < 0) jump = -jump;
    return std::min(jump + 1, 6);
}

template <Field K>
int expected_codim_locus(const QuotientAlgebra<K>& A) {
    return expected_codim_locus(A.hilbert_function());
}

// ---------------------------------------------------------------------------
// Locus reports.

enum class LocusMode { full, middle };

template <Field K>
struct LocusReport {
    std::optional<CIType> type;
    HilbertFunction hf;
    int e = 0;
    LocusMode mode = LocusMode::full;
    std::map<int, Ideal<K>> ideals;  // per-degree I(C_{A,i})
    Ideal<K> total;                  // I(C_A)
    int codim = 0;                   // 6 means the locus is empty
    std::optional<BigInt> degree;
    std::optional<int> expected_codim;
    bool wlp_certified = false;
};

struct LocusOptions {
    LocusMode mode = LocusMode::full;
    std::uint64_t wlp_seed = 1;
    int wlp_trials = 3;
};

// Codimension in P^5 of a homogeneous ideal of S, clamped so that an empty
// locus reports 6.
template <Field K>
int projective_codim(const Ideal<K>& I) {
    if (I.is_zero_ideal()) return 0;
    auto dd = dimension_and_degree(I);
    return std::min(dd.codim, 6);
}

template <Field K>
LocusReport<K> locus_ideal(const QuotientAlgebra<K>& A, const RingPtr<K>& sring, const LocusOptions& opts = {}) {
    LocusReport<K> report;
    report.type = A.ci_type;
    report.hf = A.hilbert_function();
    report.e = A.socle_degree();
    report.mode = opts.mode;
    report.expected_codim = expected_codim_locus(A);
    const int e = report.e;

    if (e < 2) {
        // No conic degrees exist; every conic is Lefschetz and the locus is
        // empty regardless of mode.
        report.total = Ideal<K>::make(sring, {Polynomial<K>::constant(sring, sring->unit)});
        report.codim = 6;
        return report;
    }

    if (opts.mode == LocusMode::middle) {
        if (!A.is_gorenstein())
            throw MiddleModeUnjustified("middle-degree reduction requires a Gorenstein algebra");
        auto cert = wlp_check(A, opts.wlp_seed, opts.wlp_trials);
        if (!cert.found)
            throw MiddleModeUnjustified("no WLP certificate found; middle-degree reduction unavailable");
        report.wlp_certified = true;
        const int m = e / 2 - 1;
        Ideal<K> mid = minors_ideal(generic_conic_matrix(A, sring, m));
        report.ideals.emplace(m, mid);
        report.total = mid;
    } else {
        for (int i = 0; i + 2 <= e; ++i)
            report.ideals.emplace(i, minors_ideal(generic_conic_matrix(A, sring, i)));
        Ideal<K> total = report.ideals.at(0);
        for (int i = 1; i + 2 <= e; ++i) total = ideal_intersection(total, report.ideals.at(i));
        report.total = total;
    }

    auto dd = dimension_and_degree(report.total);
    report.codim = std::min(dd.codim, 6);
    if (report.codim >= 1 && report.codim <= 5) report.degree = dd.degree;
    return report;
}

// Module overload: degrees run over the whole support; duality and middle
// mode are algebra facts, so only the full intersection is offered.
template <Field K>
LocusReport<K> locus_ideal(const ModulePresentation<K>& M, const RingPtr<K>& sring,
                           const LocusOptions& opts = {}) {
    if (opts.mode == LocusMode::middle)
        throw MiddleModeUnjustified("middle-degree reduction is not certified for modules");
    LocusReport<K> report;
    report.hf = M.hilbert_function();
    report.e = M.socle_degree();
    report.mode = LocusMode::full;
    std::optional<Ideal<K>> total;
    for (int i = M.min_degree(); i + 2 <= M.socle_degree(); ++i) {
        if (M.piece(i).dim() == 0 || M.piece(i + 2).dim() == 0) continue;
        Ideal<K> Ii = minors_ideal(generic_conic_matrix(M, sring, i));
        report.ideals.emplace(i, Ii);
        total = total ? ideal_intersection(*total, Ii) : Ii;
    }
    if (!total) total = Ideal<K>::make(sring, {Polynomial<K>::constant(sring, sring->unit)});
    report.total = *total;
    auto dd = dimension_and_degree(report.total);
    report.codim = std::min(dd.codim, 6);
    if (report.codim >= 1 && report.codim <= 5) report.degree = dd.degree;
    return report;
}

// Exact locus codimension without materializing the intersection:
// codim of a finite intersection of ideals is the minimum of the codimensions.
// Gorenstein duality (I(C_{A,i}) = I(C_{A,e-2-i})) halves the degree range.
template <Field K>
int locus_codim(const QuotientAlgebra<K>& A, const RingPtr<K>& sring) {
    const int e = A.socle_degree();
    if (e < 2) return 6;
    const int last = A.is_gorenstein() ? (e - 2) / 2 : e - 2;
    int best = 6;
    for (int i = 0; i <= last; ++i) {
        int c = projective_codim(minors_ideal(generic_conic_matrix(A, sring, i)));
        best = std::min(best, c);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Probabilistic codimension by affine slicing: a generic affine c-plane in
// the parameter space meets the cone over the locus iff codim <= c. Majority
// vote over repeated slices.
template <Field K>
int codim_via_slicing(const Ideal<K>& I, std::uint64_t seed, int slices_per_codim = 3) {
    if (I.is_zero_ideal()) return 0;
    Rng rng(seed);
    for (int c = 1; c <= 5; ++c) {
        auto uring = make_ring<K>(numbered_names("u", c), I.ring->order, I.ring->unit);
        int hits = 0;
        for (int s = 0; s < slices_per_codim; ++s) {
            std::vector<Polynomial<K>> images;
            for (int k = 0; k < 6; ++k) {
                Polynomial<K> img =
                    Polynomial<K>::constant(uring, random_element<K>(rng, uring->unit));
                for (int v = 0; v < c; ++v)
                    img += Polynomial<K>::monomial(uring, Monomial::variable(c, v),
                                                   random_element<K>(rng, uring->unit));
                images.push_back(std::move(img));
            }
            std::vector<Polynomial<K>> restricted;
            for (const auto& g : I.gens) restricted.push_back(g.substituted(images));
            if (!buchberger(Ideal<K>::make(uring, std::move(restricted))).is_unit()) ++hits;
        }
        if (2 * hits > slices_per_codim) return c;
    }
    return 6;
}

// Slicing analogue of locus_codim: slice each per-degree ideal and take the
// minimum, again halving the range by Gorenstein duality.
template <Field K>
int locus_codim_via_slicing(const QuotientAlgebra<K>& A, const RingPtr<K>& sring,
                            std::uint64_t seed, int slices_per_codim = 3) {
    const int e = A.socle_degree();
    if (e < 2) return 6;
    const int last = A.is_gorenstein() ? (e - 2) / 2 : e - 2;
    int best = 6;
    for (int i = 0; i <= last; ++i) {
        auto I = minors_ideal(generic_conic_matrix(A, sring, i));
        best = std::min(best, codim_via_slicing(I, seed + static_cast<std::uint64_t>(i),
                                                slices_per_codim));
    }
    return best;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_CONIC_LOCUS_HPP
