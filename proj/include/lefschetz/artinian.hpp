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

#ifndef LEFSCHETZ_ARTINIAN_HPP
#define LEFSCHETZ_ARTINIAN_HPP

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lefschetz/groebner.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

using HilbertFunction = std::vector<int>;

// Complete intersection type (d1, d2, d3) with d1 <= d2 <= d3, all >= 2.
struct CIType {
    int d1 = 2;
    int d2 = 2;
    int d3 = 2;

    CIType(int a, int b, int c) : d1(a), d2(b), d3(c) {
        if (d1 > d2) std::swap(d1, d2);
        if (d2 > d3) std::swap(d2, d3);
        if (d1 > d2) std::swap(d1, d2);
        if (d1 < 2) throw DegreeOutOfRange("complete intersection degrees must be at least 2");
    }

    int socle_degree() const { return d1 + d2 + d3 - 3; }

    bool operator==(const CIType& o) const { return d1 == o.d1 && d2 == o.d2 && d3 == o.d3; }
};

// Coefficients of (1+t+...+t^(d1-1))(1+...+t^(d2-1))(1+...+t^(d3-1)).
inline HilbertFunction ci_hilbert_function(const CIType& t) {
    std::vector<int> acc{1};
    for (int d : {t.d1, t.d2, t.d3}) {
        std::vector<int> next(acc.size() + static_cast<std::size_t>(d) - 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (int j = 0; j < d; ++j) next[i + static_cast<std::size_t>(j)] += acc[i];
        acc = std::move(next);
    }
    return acc;
}

// Artinian graded quotient A = R/I over three variables. Immutable: the
// Groebner basis, all standard-monomial bases and the Hilbert function are
// materialized at construction.
template <Field K>
class QuotientAlgebra {
  public:
    QuotientAlgebra(RingPtr<K> ring, Ideal<K> ideal)
        : ring_(std::move(ring)), ideal_(std::move(ideal)) {
        for (const auto& g : ideal_.gens)
            if (!g.is_homogeneous()) throw NotHomogeneous("quotient ideal generators must be homogeneous");
        gb_ = buchberger(ideal_);
        if (gb_.is_unit()) throw NotArtinian("the quotient is the zero ring");
        if (dimension_and_degree(gb_).dim != 0) throw NotArtinian("the quotient has positive dimension");
        build_bases();
    }

    const RingPtr<K>& ring() const { return ring_; }
    const Ideal<K>& ideal() const { return ideal_; }
    const GroebnerBasis<K>& groebner() const { return gb_; }
    const HilbertFunction& hilbert_function() const { return hf_; }
    int socle_degree() const { return static_cast<int>(hf_.size()) - 1; }

    // Monomials of degree d outside the leading-term ideal, descending.
    const std::vector<Monomial>& basis(int d) const {
        static const std::vector<Monomial> kEmpty;
        if (d < 0 || d >= static_cast<int>(bases_.size())) return kEmpty;
        return bases_[static_cast<std::size_t>(d)];
    }

    Polynomial<K> reduce(const Polynomial<K>& f) const { return normal_form(f, gb_); }

    // Matrix of multiplication by a homogeneous form f of degree d, mapping
    // [A]_i into [A]_{i+d} in the standard bases. A zero f defaults to the
    // degree-two (conic) shape unless degree_hint says otherwise.
    DenseMatrix<K> multiplication_matrix(const Polynomial<K>& f, int i, int degree_hint = -1) const {
        if (!ring_same(f.ring(), ring_)) throw RingMismatch("form lives in a different ring");
        if (!f.is_homogeneous()) throw NotHomogeneous("multiplication by an inhomogeneous form is not graded");
        if (i < 0) throw DegreeOutOfRange("negative degree index");
        int d = degree_hint;
        if (!f.is_zero()) {
            if (d >= 0 && d != f.degree()) throw DegreeMismatch("degree hint contradicts the form");
            d = f.degree();
        } else if (d < 0) {
            d = 2;
        }
        const auto& source = basis(i);
        const auto& target = basis(i + d);
        DenseMatrix<K> m(static_cast<int>(target.size()), static_cast<int>(source.size()), ring_->unit.zero());
        if (target.empty() || source.empty() || f.is_zero()) return m;
        const auto& index = index_[static_cast<std::size_t>(i + d)];
        for (int c = 0; c < static_cast<int>(source.size()); ++c) {
            Polynomial<K> image = reduce(f.scaled_shifted(ring_->unit, source[static_cast<std::size_t>(c)]));
            for (const auto& t : image.terms()) m.at(index.at(t.m), c) = t.c;
        }
        return m;
    }

    // True iff [A]_i contains an element killed by all three variables.
    bool socle_in_degree(int i) const {
        if (i < 0 || i > socle_degree()) throw DegreeOutOfRange("socle degree index out of range");
        const int h = static_cast<int>(basis(i).size());
        std::vector<DenseMatrix<K>> blocks;
        for (int v = 0; v < ring_->arity(); ++v)
            blocks.push_back(multiplication_matrix(Polynomial<K>::variable(ring_, v), i));
        return DenseMatrix<K>::stacked(blocks, h, ring_->unit.zero()).kernel_dimension() > 0;
    }

    // One-dimensional socle; with the Artinian grading this means the socle
    // sits entirely in the top degree and h_e = 1.
    bool is_gorenstein() const {
        if (hf_.back() != 1) return false;
        for (int i = 0; i < socle_degree(); ++i)
            if (socle_in_degree(i)) return false;
        return true;
    }

    // Set when the algebra was built from a complete intersection type.
    std::optional<CIType> ci_type;

  private:
    void build_bases() {
        std::vector<Monomial> lts;
        for (const auto& g : gb_.elements) lts.push_back(g.leading_monomial());
        for (int d = 0;; ++d) {
            std::vector<Monomial> level;
            for (const auto& m : monomials_of_degree(ring_->arity(), d, ring_->order)) {
                bool cut = false;
                for (const auto& lt : lts)
                    if (lt.divides(m)) {
                        cut = true;
                        break;
                    }
                if (!cut) level.push_back(m);
            }
            if (level.empty()) break;
            std::unordered_map<Monomial, int, MonomialHash> index;
            for (int k = 0; k < static_cast<int>(level.size()); ++k) index[level[static_cast<std::size_t>(k)]] = k;
            hf_.push_back(static_cast<int>(level.size()));
            bases_.push_back(std::move(level));
            index_.push_back(std::move(index));
        }
    }

    RingPtr<K> ring_;
    Ideal<K> ideal_;
    GroebnerBasis<K> gb_;
    HilbertFunction hf_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<std::unordered_map<Monomial, int, MonomialHash>> index_;
};

template <Field K>
QuotientAlgebra<K> make_quotient(const RingPtr<K>& ring, std::vector<Polynomial<K>> gens) {
    return QuotientAlgebra<K>(ring, Ideal<K>::make(ring, std::move(gens)));
}

template <Field K>
const std::vector<Monomial>& standard_monomials(const QuotientAlgebra<K>& A, int d) {
    return A.basis(d);
}

template <Field K>
DenseMatrix<K> multiplication_matrix(const QuotientAlgebra<K>& A, const Polynomial<K>& f, int i,
                                     int degree_hint = -1) {
    return A.multiplication_matrix(f, i, degree_hint);
}

template <Field K>
bool has_socle_in_degree(const QuotientAlgebra<K>& A, int i) {
    return A.socle_in_degree(i);
}

// Monomial complete intersection (x1^d1, x2^d2, x3^d3).
template <Field K>
QuotientAlgebra<K> monomial_ci(const RingPtr<K>& ring, const CIType& t) {
    if (ring->arity() != 3) throw ArityMismatch("complete intersections here live in three variables");
    std::vector<Polynomial<K>> gens;
    const int degs[3] = {t.d1, t.d2, t.d3};
    for (int v = 0; v < 3; ++v)
        gens.push_back(Polynomial<K>::variable(ring, v, degs[v]));
    QuotientAlgebra<K> A = make_quotient(ring, std::move(gens));
    A.ci_type = t;
    return A;
}

// Dense random forms of the prescribed degrees, resampled until they form a
// regular sequence (equivalently, until the quotient is Artinian).
template <Field K>
QuotientAlgebra<K> random_ci(const RingPtr<K>& ring, const CIType& t, std::uint64_t seed) {
    if (ring->arity() != 3) throw ArityMismatch("complete intersections here live in three variables");
    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Polynomial<K>> gens{random_form(ring, t.d1, rng), random_form(ring, t.d2, rng),
                                        random_form(ring, t.d3, rng)};
        try {
            QuotientAlgebra<K> A = make_quotient(ring, std::move(gens));
            A.ci_type = t;
            return A;
        } catch (const NotArtinian&) {
            continue;
        }
    }
    throw NotArtinian("no regular sequence found after 32 samples");
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_ARTINIAN_HPP
