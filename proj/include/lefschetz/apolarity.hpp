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

#ifndef LEFSCHETZ_APOLARITY_HPP
#define LEFSCHETZ_APOLARITY_HPP

#include <cstdint>
#include <vector>

#include "lefschetz/artinian.hpp"
#include "lefschetz/groebner.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

// k[X1,X2,X3], the home of dual generators. Contraction is the divided-power
// action x^a . X^b = X^(b-a), so no binomial factors appear; still, the
// polynomial model of the divided-power algebra is only faithful when the
// characteristic exceeds the socle degree, hence the p > e guard.
template <Field K>
RingPtr<K> dual_ring(const K& unit) {
    return make_ring<K>(numbered_names("X", 3), MonomialOrder::grevlex(), unit);
}

template <Field K>
struct DualGenerator {
    Polynomial<K> form;

    explicit DualGenerator(Polynomial<K> f) : form(std::move(f)) {
        if (form.is_zero() || !form.is_homogeneous())
            throw NotHomogeneous("a dual generator is a nonzero homogeneous form");
        if constexpr (requires(const K& k) { k.modulus(); }) {
            if (form.ring()->unit.modulus() <= form.degree())
                throw DegreeOutOfRange("the characteristic must exceed the socle degree");
        }
    }

    int degree() const { return form.degree(); }
};

// f . F under contraction; lives in the ring of F.
template <Field K>
Polynomial<K> contract(const Polynomial<K>& f, const DualGenerator<K>& F) {
    Polynomial<K> out = Polynomial<K>::zero(F.form.ring());
    for (const auto& tf : f.terms())
        for (const auto& tF : F.form.terms())
            if (tf.m.divides(tF.m))
                out += Polynomial<K>::monomial(F.form.ring(), tF.m / tf.m, tf.c * tF.c);
    return out;
}

// Matrix of [R]_d -> [dual]_(e-d), x^a -> x^a . F, in descending monomial
// bases on both sides.
template <Field K>
DenseMatrix<K> catalecticant_matrix(const DualGenerator<K>& F, int d) {
    const int e = F.degree();
    if (d < 0 || d > e + 1) throw DegreeOutOfRange("catalecticant degree outside [0, e+1]");
    const auto& order = F.form.ring()->order;
    auto cols = monomials_of_degree(3, d, order);
    auto rows = monomials_of_degree(3, e - d, order);
    std::unordered_map<Monomial, K, MonomialHash> coeff;
    for (const auto& t : F.form.terms()) coeff.emplace(t.m, t.c);
    DenseMatrix<K> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                     F.form.ring()->unit.zero());
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            auto it = coeff.find(cols[static_cast<std::size_t>(c)] * rows[static_cast<std::size_t>(r)]);
            if (it != coeff.end()) m.at(r, c) = it->second;
        }
    return m;
}

// Hilbert function of R/Ann(F), read off as catalecticant ranks.
template <Field K>
HilbertFunction catalecticant_hilbert_function(const DualGenerator<K>& F) {
    HilbertFunction hf;
    for (int d = 0; d <= F.degree(); ++d)
        hf.push_back(catalecticant_matrix(F, d).rank());
    return hf;
}

// Ann(F) in the given polynomial ring, minimally generated: each catalecticant
// kernel element enters only if it is not already in the ideal of the earlier
// ones.
template <Field K>
Ideal<K> apolar_ideal(const RingPtr<K>& ring, const DualGenerator<K>& F) {
    if (ring->arity() != 3) throw ArityMismatch("apolarity here lives in three variables");
    const int e = F.degree();
    std::vector<Polynomial<K>> gens;
    GroebnerBasis<K> gb{ring, {}};
    auto consider = [&](Polynomial<K> f) {
        if (f.is_zero()) return;
        if (!gens.empty() && normal_form(f, gb).is_zero()) return;
        gens.push_back(std::move(f));
        gb = buchberger(Ideal<K>::make(ring, gens));
    };
    const auto& order = ring->order;
    for (int d = 1; d <= e + 1; ++d) {
        auto cols = monomials_of_degree(3, d, order);
        if (d == e + 1) {
            // The map is zero; every monomial is annihilated.
            for (const auto& m : cols)
                consider(Polynomial<K>::monomial(ring, m, ring->unit));
            continue;
        }
        auto kernel = catalecticant_matrix(F, d).kernel_basis();
        for (const auto& v : kernel) {
            std::vector<Term<K>> terms;
            for (int c = 0; c < static_cast<int>(cols.size()); ++c)
                if (!v[static_cast<std::size_t>(c)].is_zero())
                    terms.push_back({cols[static_cast<std::size_t>(c)], v[static_cast<std::size_t>(c)]});
            consider(Polynomial<K>::from_terms(ring, std::move(terms)));
        }
    }
    return Ideal<K>::make(ring, std::move(gens));
}

// ---------------------------------------------------------------------------
// SI-sequences and g-vectors.

using GVector = std::vector<int>;

// Largest value an O-sequence may take in degree d+1 after the value c in
// degree d >= 1 (Macaulay's bound via the d-th binomial representation).
inline std::int64_t macaulay_bound(std::int64_t c, int d) {
    auto binom = [](std::int64_t n, std::int64_t k) -> std::int64_t {
        if (k < 0 || n < k) return 0;
        std::int64_t r = 1;
        for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    std::int64_t rem = c;
    std::int64_t bound = 0;
    for (int i = d; i >= 1 && rem > 0; --i) {
        std::int64_t k = i;
        while (binom(k + 1, i) <= rem) ++k;
        rem -= binom(k, i);
        bound += binom(k + 1, i + 1);
    }
    return bound;
}

inline bool is_o_sequence(const std::vector<int>& c) {
    if (c.empty() || c[0] != 1) return false;
    for (int v : c)
        if (v < 0) return false;
    for (std::size_t d = 1; d + 1 < c.size(); ++d)
        if (c[d + 1] > macaulay_bound(c[d], static_cast<int>(d))) return false;
    return true;
}

// Positive part of the first difference: (h_0, h_1-h_0, ..., up to the middle).
inline GVector g_vector(const HilbertFunction& hf) {
    const int e = static_cast<int>(hf.size()) - 1;
    GVector g = {hf[0]};
    for (int i = 1; i <= e / 2; ++i)
        g.push_back(hf[static_cast<std::size_t>(i)] - hf[static_cast<std::size_t>(i) - 1]);
    return g;
}

// Symmetric with first-half first difference an O-sequence: exactly the
// Hilbert functions of height-3 Artinian Gorenstein algebras.
inline bool is_si_sequence(const HilbertFunction& hf) {
    if (hf.empty()) return false;
    const int e = static_cast<int>(hf.size()) - 1;
    for (int i = 0; i <= e; ++i)
        if (hf[static_cast<std::size_t>(i)] != hf[static_cast<std::size_t>(e - i)]) return false;
    return is_o_sequence(g_vector(hf));
}

// Begins (1,2,3,...), then possibly one flat run, then strictly decreasing.
inline bool is_decreasing_type(const GVector& g) {
    const int n = static_cast<int>(g.size());
    int i = 0;
    while (i < n && g[static_cast<std::size_t>(i)] == i + 1) ++i;
    if (i == 0) return false;
    const int peak = i;
    while (i < n && g[static_cast<std::size_t>(i)] == peak) ++i;
    for (; i < n; ++i)
        if (g[static_cast<std::size_t>(i)] >= g[static_cast<std::size_t>(i) - 1]) return false;
    return true;
}

// Apolar algebra of a dense random form of degree e over the default prime
// field; deterministic per seed.
inline QuotientAlgebra<PrimeField> random_gorenstein(int e, std::uint64_t seed) {
    if (e < 1) throw DegreeOutOfRange("socle degree must be positive");
    PrimeField unit = PrimeField::make_unit(kDefaultPrime);
    auto R = make_ring<PrimeField>(numbered_names("x", 3), MonomialOrder::grevlex(), unit);
    auto D = dual_ring<PrimeField>(unit);
    Rng rng(seed);
    DualGenerator<PrimeField> F(random_form(D, e, rng));
    return make_quotient(R, apolar_ideal(R, F).gens);
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_APOLARITY_HPP
