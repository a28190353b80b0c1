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

#ifndef LEFSCHETZ_MODULE_PRESENTATION_HPP
#define LEFSCHETZ_MODULE_PRESENTATION_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/groebner.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/parser.hpp"

namespace lefschetz {

// Degree-d slice of a presented module: the cokernel of the degree-d
// component of the presentation matrix. Basis vectors are coset
// representatives (target block, monomial).
template <Field K>
struct GradedPiece {
    int degree = 0;
    RowSpace<K> image;
    std::vector<std::pair<int, Monomial>> target_basis;
    std::vector<std::pair<int, Monomial>> basis;  // cokernel representatives
    std::vector<int> coker_index_of_column;       // -1 on pivot columns

    explicit GradedPiece(const K& zero) : image(0, zero) {}
    int dim() const { return static_cast<int>(basis.size()); }
};

// A finite-length graded module given by a minimal-shape presentation
//   (+) R(-a_j)  --phi-->  (+) R(-b_i)  -->  M  -->  0
// with phi of size n x (n+2). Finite length is certified up front: the ideal
// of n x n minors of phi must have codimension 3.
template <Field K>
class ModulePresentation {
  public:
    ModulePresentation(RingPtr<K> ring, std::vector<int> target_shifts,
                       std::vector<int> source_shifts,
                       std::vector<std::vector<Polynomial<K>>> phi)
        : ring_(std::move(ring)),
          b_(std::move(target_shifts)),
          a_(std::move(source_shifts)),
          phi_(std::move(phi)),
          empty_(ring_->unit.zero()) {
        const int n = static_cast<int>(b_.size());
        if (n < 1 || static_cast<int>(a_.size()) != n + 2)
            throw DegreeMismatch("presentation must map n+2 source summands onto n >= 1 targets");
        if (static_cast<int>(phi_.size()) != n)
            throw DegreeMismatch("presentation matrix has the wrong number of rows");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(phi_[static_cast<std::size_t>(i)].size()) != n + 2)
                throw DegreeMismatch("presentation matrix has the wrong number of columns");
            for (int j = 0; j < n + 2; ++j) {
                const auto& f = entry(i, j);
                if (f.is_zero()) continue;
                if (!ring_same(f.ring(), ring_))
                    throw RingMismatch("presentation entry from a foreign ring");
                if (!f.is_homogeneous() || f.degree() != a_[static_cast<std::size_t>(j)] - b_[static_cast<std::size_t>(i)])
                    throw DegreeMismatch("entry (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ") must be homogeneous of degree " +
                                         std::to_string(a_[static_cast<std::size_t>(j)] - b_[static_cast<std::size_t>(i)]));
            }
        }
        certify_finite_length();
        build_pieces();
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<int>& target_shifts() const { return b_; }
    const std::vector<int>& source_shifts() const { return a_; }
    const Polynomial<K>& entry(int i, int j) const {
        return phi_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    // All graded pieces vanish above this bound.
    int degree_bound() const {
        int s = 0;
        for (int aj : a_) s += aj;
        return s;
    }
    int min_degree() const { return *std::min_element(b_.begin(), b_.end()); }

    // Largest degree with a nonzero piece; min_degree() - 1 for the zero
    // module.
    int socle_degree() const { return socle_; }

    const GradedPiece<K>& piece(int d) const {
        auto it = pieces_.find(d);
        return it != pieces_.end() ? it->second : empty_;
    }

    // Hilbert function on [min_degree, socle_degree]; empty for the zero
    // module.
    std::vector<int> hilbert_function() const {
        std::vector<int> hf;
        for (int d = min_degree(); d <= socle_; ++d) hf.push_back(piece(d).dim());
        return hf;
    }

    // Matrix of multiplication by f from [M]_i to [M]_{i+deg f} in the
    // cokernel bases. A zero f is taken to have the conic degree 2 unless a
    // hint says otherwise.
    DenseMatrix<K> multiplication_matrix(const Polynomial<K>& f, int i, int degree_hint = -1) const {
        if (!f.is_zero() && !ring_same(f.ring(), ring_))
            throw RingMismatch("form from a foreign ring");
        if (!f.is_zero() && !f.is_homogeneous())
            throw NotHomogeneous("multiplication requires a homogeneous form");
        int d = f.is_zero() ? (degree_hint >= 0 ? degree_hint : 2) : f.degree();
        if (!f.is_zero() && degree_hint >= 0 && degree_hint != d)
            throw DegreeMismatch("degree hint contradicts the form");
        const auto& src = piece(i);
        const auto& dst = piece(i + d);
        DenseMatrix<K> m(dst.dim(), src.dim(), ring_->unit.zero());
        if (f.is_zero() || dst.target_basis.empty()) return m;
        for (int c = 0; c < src.dim(); ++c) {
            const auto& [block, mono] = src.basis[static_cast<std::size_t>(c)];
            std::vector<K> v = target_vector(dst, block, f, mono);
            v = dst.image.reduce(std::move(v));
            for (int col = 0; col < static_cast<int>(v.size()); ++col) {
                int r = dst.coker_index_of_column[static_cast<std::size_t>(col)];
                if (r >= 0) m.at(r, c) = v[static_cast<std::size_t>(col)];
            }
        }
        return m;
    }

  private:
    void certify_finite_length() {
        const int n = static_cast<int>(b_.size());
        PolyMatrix<K> m(ring_, n, n + 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n + 2; ++j) m.at(i, j) = entry(i, j);
        auto minors = Ideal<K>::make(ring_, maximal_minors(m));
        if (dimension_and_degree(minors).codim != 3)
            throw NotFiniteLength("the maximal minors of the presentation do not cut out points");
    }

    // Expands f * mono placed in the given target block as a coordinate
    // vector of the piece.
    std::vector<K> target_vector(const GradedPiece<K>& dst, int block, const Polynomial<K>& f,
                                 const Monomial& mono) const {
        std::vector<K> v(dst.target_basis.size(), ring_->unit.zero());
        Polynomial<K> g = f.scaled_shifted(ring_->unit, mono);
        for (const auto& t : g.terms()) {
            auto it = column_index_.find(key_of(dst.degree, block, t.m));
            v[static_cast<std::size_t>(it->second)] = v[static_cast<std::size_t>(it->second)] + t.c;
        }
        return v;
    }

    static std::string key_of(int degree, int block, const Monomial& m) {
        std::string k = std::to_string(degree) + "|" + std::to_string(block) + "|";
        for (int v = 0; v < m.arity(); ++v) k += std::to_string(m.exponent(v)) + ",";
        return k;
    }

    void build_pieces() {
        const int n = static_cast<int>(b_.size());
        const int lo = min_degree();
        const int hi = degree_bound();
        socle_ = lo - 1;
        for (int d = lo; d <= hi; ++d) {
            GradedPiece<K> p(ring_->unit.zero());
            p.degree = d;
            for (int t = 0; t < n; ++t)
                for (const auto& m : monomials_of_degree(3, d - b_[static_cast<std::size_t>(t)], ring_->order))
                    p.target_basis.emplace_back(t, m);
            for (int col = 0; col < static_cast<int>(p.target_basis.size()); ++col)
                column_index_.emplace(key_of(d, p.target_basis[static_cast<std::size_t>(col)].first,
                                             p.target_basis[static_cast<std::size_t>(col)].second),
                                      col);
            p.image = RowSpace<K>(static_cast<int>(p.target_basis.size()), ring_->unit.zero());
            for (int j = 0; j < n + 2; ++j)
                for (const auto& m : monomials_of_degree(3, d - a_[static_cast<std::size_t>(j)], ring_->order)) {
                    std::vector<K> v(p.target_basis.size(), ring_->unit.zero());
                    bool nonzero = false;
                    for (int t = 0; t < n; ++t) {
                        const auto& f = entry(t, j);
                        if (f.is_zero()) continue;
                        Polynomial<K> g = f.scaled_shifted(ring_->unit, m);
                        for (const auto& term : g.terms()) {
                            int col = column_index_.at(key_of(d, t, term.m));
                            v[static_cast<std::size_t>(col)] = v[static_cast<std::size_t>(col)] + term.c;
                            nonzero = true;
                        }
                    }
                    if (nonzero) p.image.insert(std::move(v));
                }
            p.coker_index_of_column.assign(p.target_basis.size(), -1);
            for (int col : p.image.non_pivot_columns()) {
                p.coker_index_of_column[static_cast<std::size_t>(col)] = static_cast<int>(p.basis.size());
                p.basis.push_back(p.target_basis[static_cast<std::size_t>(col)]);
            }
            if (p.dim() > 0) socle_ = d;
            pieces_.emplace(d, std::move(p));
        }
    }

    RingPtr<K> ring_;
    std::vector<int> b_;
    std::vector<int> a_;
    std::vector<std::vector<Polynomial<K>>> phi_;
    GradedPiece<K> empty_;
    std::map<int, GradedPiece<K>> pieces_;
    std::unordered_map<std::string, int> column_index_;
    int socle_ = -1;
};

template <Field K>
ModulePresentation<K> make_module(RingPtr<K> ring, std::vector<int> b, std::vector<int> a,
                                  std::vector<std::vector<Polynomial<K>>> phi) {
    return ModulePresentation<K>(std::move(ring), std::move(b), std::move(a), std::move(phi));
}

template <Field K>
GradedPiece<K> module_graded_piece(const ModulePresentation<K>& M, int d) {
    return M.piece(d);
}

template <Field K>
DenseMatrix<K> module_multiplication_matrix(const ModulePresentation<K>& M, const Polynomial<K>& f,
                                            int i, int degree_hint = -1) {
    return M.multiplication_matrix(f, i, degree_hint);
}

// Text format: optional '#' comment lines, then n, then n target shifts, then
// n+2 source shifts, then the n*(n+2) entries row-major, one per line.
template <Field K>
ModulePresentation<K> parse_module_presentation(const RingPtr<K>& ring, const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    std::size_t at = 0;
    auto next_line = [&]() -> const std::string& {
        if (at >= lines.size()) throw ParseError("unexpected end of module presentation", 0, 0);
        return lines[at++];
    };
    auto parse_ints = [](const std::string& s, int count) {
        std::istringstream is(s);
        std::vector<int> out;
        int v = 0;
        while (is >> v) out.push_back(v);
        if (static_cast<int>(out.size()) != count)
            throw ParseError("expected " + std::to_string(count) + " integers", 0, 0);
        return out;
    };
    int n = parse_ints(next_line(), 1)[0];
    if (n < 1) throw ParseError("presentation needs at least one target summand", 0, 0);
    std::vector<int> b = parse_ints(next_line(), n);
    std::vector<int> a = parse_ints(next_line(), n + 2);
    std::vector<std::vector<Polynomial<K>>> phi;
    for (int i = 0; i < n; ++i) {
        std::vector<Polynomial<K>> row;
        for (int j = 0; j < n + 2; ++j)
            row.push_back(parse_polynomial<K>(ring, next_line(), xyz_aliases()));
        phi.push_back(std::move(row));
    }
    return make_module<K>(ring, std::move(b), std::move(a), std::move(phi));
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_MODULE_PRESENTATION_HPP
