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

#ifndef LEFSCHETZ_GROEBNER_HPP
#define LEFSCHETZ_GROEBNER_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lefschetz/polynomial.hpp"

namespace lefschetz {

// Generators are nonzero, sign-normalized, deduplicated, sorted.
template <Field K>
struct Ideal {
    RingPtr<K> ring;
    std::vector<Polynomial<K>> gens;

    static Ideal make(RingPtr<K> ring, std::vector<Polynomial<K>> raw) {
        Ideal I;
        I.ring = std::move(ring);
        for (auto& p : raw) {
            if (p.is_zero()) continue;
            if (!ring_same(p.ring(), I.ring)) throw RingMismatch("generator from a different ring");
            I.gens.push_back(canonicalize_generator(p));
        }
        std::sort(I.gens.begin(), I.gens.end(),
                  [](const Polynomial<K>& a, const Polynomial<K>& b) { return polynomial_compare(a, b) < 0; });
        I.gens.erase(std::unique(I.gens.begin(), I.gens.end(),
                                 [](const Polynomial<K>& a, const Polynomial<K>& b) { return a == b; }),
                     I.gens.end());
        return I;
    }

    bool is_zero_ideal() const { return gens.empty(); }
};

template <Field K>
struct GroebnerBasis {
    RingPtr<K> ring;
    std::vector<Polynomial<K>> elements;  // reduced, sign-normalized, sorted ascending by leading monomial

    bool is_zero() const { return elements.empty(); }
    bool is_unit() const { return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero(); }
};

namespace detail {

// Shared full-reduction loop. `find` maps a monomial to a reducer whose
// leading monomial divides it, or nullptr. Deterministic for a fixed `find`;
// the result is the unique normal form whenever the reducers form a Groebner
// basis.
template <Field K, class FindReducer>
Polynomial<K> reduce_full(const Polynomial<K>& f, FindReducer&& find) {
    const RingPtr<K>& ring = f.ring();
    const MonomialOrder& order = ring->order;
    std::vector<Term<K>> done;
    std::vector<Term<K>> rest(f.terms());
    std::vector<Term<K>> merged;
    std::vector<Term<K>> scaled;
    std::size_t pos = 0;
    while (pos < rest.size()) {
        const Monomial& m = rest[pos].m;
        const Polynomial<K>* g = find(m);
        if (!g) {
            done.push_back(rest[pos]);
            ++pos;
            continue;
        }
        K factor = rest[pos].c / g->leading_coefficient();
        Monomial shift = m / g->leading_monomial();
        scaled.clear();
        scaled.reserve(g->terms().size());
        for (const auto& t : g->terms()) scaled.push_back({t.m * shift, t.c * factor});
        // merged = rest[pos..] - scaled (leading terms cancel by construction)
        merged.clear();
        std::size_t i = pos, j = 0;
        while (i < rest.size() && j < scaled.size()) {
            int c = monomial_compare(rest[i].m, scaled[j].m, order);
            if (c > 0) {
                merged.push_back(rest[i++]);
            } else if (c < 0) {
                merged.push_back({scaled[j].m, -scaled[j].c});
                ++j;
            } else {
                K s = rest[i].c - scaled[j].c;
                if (!s.is_zero()) merged.push_back({rest[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < rest.size(); ++i) merged.push_back(rest[i]);
        for (; j < scaled.size(); ++j) merged.push_back({scaled[j].m, -scaled[j].c});
        rest.swap(merged);
        pos = 0;
    }
    return Polynomial<K>::from_sorted_terms(ring, std::move(done));
}

}  // namespace detail

// Full normal form: no term of the result is divisible by any leading
// monomial of `basis`. `basis` entries must be nonzero.
template <Field K>
Polynomial<K> normal_form_against(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
    return detail::reduce_full(f, [&basis](const Monomial& m) -> const Polynomial<K>* {
        for (const auto& g : basis)
            if (g.leading_monomial().divides(m)) return &g;
        return nullptr;
    });
}

template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
    if (!ring_same(f.ring(), gb.ring)) throw RingMismatch("normal form in a different ring");
    if (gb.elements.empty()) return f;
    return normal_form_against(f, gb.elements);
}

namespace detail {

template <Field K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    Polynomial<K> a = f.scaled_shifted(f.leading_coefficient().inverse(), l / f.leading_monomial());
    Polynomial<K> b = g.scaled_shifted(g.leading_coefficient().inverse(), l / g.leading_monomial());
    return a - b;
}

struct PairKey {
    int degree;
    Monomial lcm;
    int i;
    int j;
};

template <Field K>
class Buchberger {
  public:
    explicit Buchberger(RingPtr<K> ring)
        : ring_(std::move(ring)), order_(ring_->order), pairs_(PairLess{order_}) {}

    // Runs the Gebauer-Moeller maintained Buchberger loop and returns the
    // reduced basis.
    std::vector<Polynomial<K>> run(std::vector<Polynomial<K>> input) {
        std::sort(input.begin(), input.end(),
                  [](const Polynomial<K>& a, const Polynomial<K>& b) { return polynomial_compare(a, b) < 0; });
        for (auto& p : input) {
            if (p.is_zero()) continue;
            Polynomial<K> r = reduce(p);
            if (!r.is_zero()) add_element(make_monic(r));
        }
        while (!pairs_.empty()) {
            auto it = pairs_.begin();
            PairKey key = *it;
            pairs_.erase(it);
            Polynomial<K> s = s_polynomial(basis_[static_cast<std::size_t>(key.i)], basis_[static_cast<std::size_t>(key.j)]);
            Polynomial<K> r = reduce(s);
            if (!r.is_zero()) add_element(make_monic(r));
        }
        return reduced_final();
    }

  private:
    struct PairLess {
        MonomialOrder order;
        bool operator()(const PairKey& a, const PairKey& b) const {
            if (a.degree != b.degree) return a.degree < b.degree;
            int c = monomial_compare(a.lcm, b.lcm, order);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    Polynomial<K> reduce(const Polynomial<K>& p) const {
        if (basis_.empty()) return p;
        // by_lm_ is sorted ascending by leading monomial, so the scan can
        // stop once leading monomials exceed the target (divisibility
        // implies order-smaller for admissible orders).
        return reduce_full(p, [this](const Monomial& m) -> const Polynomial<K>* {
            for (int idx : by_lm_) {
                const Polynomial<K>& g = basis_[static_cast<std::size_t>(idx)];
                const Monomial& lm = g.leading_monomial();
                if (monomial_compare(lm, m, order_) > 0) break;
                if (lm.divides(m)) return &g;
            }
            return nullptr;
        });
    }

    // Gebauer-Moeller UPDATE with the new element h.
    void add_element(Polynomial<K> h) {
        const int t = static_cast<int>(basis_.size());
        const Monomial& lm_h = h.leading_monomial();

        // new candidate pairs (i, t), processed by ascending index
        std::vector<int> keep;
        std::vector<Monomial> lcm_with(static_cast<std::size_t>(t), Monomial());
        for (int i = 0; i < t; ++i)
            lcm_with[static_cast<std::size_t>(i)] = basis_[static_cast<std::size_t>(i)].leading_monomial().lcm(lm_h);
        std::vector<bool> dropped(static_cast<std::size_t>(t), false);
        for (int i = 0; i < t; ++i) {
            if (!alive_[static_cast<std::size_t>(i)]) {
                dropped[static_cast<std::size_t>(i)] = true;
                continue;
            }
            const Monomial& li = lcm_with[static_cast<std::size_t>(i)];
            bool coprime = basis_[static_cast<std::size_t>(i)].leading_monomial().coprime(lm_h);
            if (coprime) continue;  // decided by the product criterion below; still usable as an eliminator
            for (int j = 0; j < t; ++j) {
                if (j == i || dropped[static_cast<std::size_t>(j)] || !alive_[static_cast<std::size_t>(j)]) continue;
                const Monomial& lj = lcm_with[static_cast<std::size_t>(j)];
                if (lj == li) {
                    if (j < i) {
                        dropped[static_cast<std::size_t>(i)] = true;
                        break;
                    }
                    continue;
                }
                if (lj.divides(li)) {
                    dropped[static_cast<std::size_t>(i)] = true;
                    break;
                }
            }
        }
        for (int i = 0; i < t; ++i) {
            if (!alive_[static_cast<std::size_t>(i)] || dropped[static_cast<std::size_t>(i)]) continue;
            if (basis_[static_cast<std::size_t>(i)].leading_monomial().coprime(lm_h)) continue;
            keep.push_back(i);
        }

        // eliminate old pairs superseded by h
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Monomial& l = it->lcm;
            if (lm_h.divides(l) && lcm_with[static_cast<std::size_t>(it->i)] != l &&
                lcm_with[static_cast<std::size_t>(it->j)] != l) {
                it = pairs_.erase(it);
            } else {
                ++it;
            }
        }

        for (int i : keep) {
            const Monomial& l = lcm_with[static_cast<std::size_t>(i)];
            pairs_.insert(PairKey{l.degree(), l, i, t});
        }

        // retire basis elements whose leading monomial h divides
        for (int i = 0; i < t; ++i)
            if (alive_[static_cast<std::size_t>(i)] && lm_h.divides(basis_[static_cast<std::size_t>(i)].leading_monomial()))
                alive_[static_cast<std::size_t>(i)] = false;

        basis_.push_back(std::move(h));
        alive_.push_back(true);
        // maintain by_lm_: alive elements sorted ascending by leading monomial
        by_lm_.clear();
        for (int i = 0; i <= t; ++i)
            if (alive_[static_cast<std::size_t>(i)]) by_lm_.push_back(i);
        std::sort(by_lm_.begin(), by_lm_.end(), [this](int a, int b) {
            return monomial_compare(basis_[static_cast<std::size_t>(a)].leading_monomial(),
                                    basis_[static_cast<std::size_t>(b)].leading_monomial(), order_) < 0;
        });
    }

    std::vector<Polynomial<K>> reduced_final() {
        // minimal basis: alive elements (no leading monomial divides another's)
        std::vector<Polynomial<K>> minimal;
        for (int idx : by_lm_) minimal.push_back(basis_[static_cast<std::size_t>(idx)]);
        // tail-reduce each against the others
        std::vector<Polynomial<K>> reduced;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial<K>> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial<K> r = others.empty() ? minimal[i] : normal_form_against(minimal[i], others);
            if (!r.is_zero()) reduced.push_back(make_monic(r));
        }
        // Largest leading monomial first; the order users see in listings.
        std::sort(reduced.begin(), reduced.end(),
                  [](const Polynomial<K>& a, const Polynomial<K>& b) { return polynomial_compare(a, b) > 0; });
        return reduced;
    }

    RingPtr<K> ring_;
    MonomialOrder order_;
    std::vector<Polynomial<K>> basis_;
    std::vector<bool> alive_;
    std::vector<int> by_lm_;
    std::set<PairKey, PairLess> pairs_{PairLess{MonomialOrder::grevlex()}};
};

}  // namespace detail

template <Field K>
GroebnerBasis<K> buchberger(const Ideal<K>& I) {
    detail::Buchberger<K> engine(I.ring);
    GroebnerBasis<K> gb;
    gb.ring = I.ring;
    std::vector<Polynomial<K>> elems = engine.run(I.gens);
    gb.elements.reserve(elems.size());
    for (auto& e : elems) gb.elements.push_back(canonicalize_generator(e));
    std::sort(gb.elements.begin(), gb.elements.end(),
              [](const Polynomial<K>& a, const Polynomial<K>& b) { return polynomial_compare(a, b) > 0; });
    return gb;
}

template <Field K>
bool ideal_membership(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
    return normal_form(f, gb).is_zero();
}

template <Field K>
bool ideal_membership(const Polynomial<K>& f, const Ideal<K>& I) {
    return ideal_membership(f, buchberger(I));
}

// Equality of ideals as sets, by two-way generator membership.
template <Field K>
bool ideals_equal(const Ideal<K>& I, const Ideal<K>& J) {
    GroebnerBasis<K> gi = buchberger(I), gj = buchberger(J);
    for (const auto& g : I.gens)
        if (!ideal_membership(g, gj)) return false;
    for (const auto& g : J.gens)
        if (!ideal_membership(g, gi)) return false;
    return true;
}

namespace detail {

// Maps f into the ring extended by auxiliary variables; `offset` is the
// position at which the original variables start.
template <Field K>
Polynomial<K> embed(const Polynomial<K>& f, const RingPtr<K>& ext, int offset) {
    std::vector<Term<K>> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) terms.push_back({t.m.embedded(ext->arity(), offset), t.c});
    return Polynomial<K>::from_terms(ext, std::move(terms));
}

template <Field K>
Polynomial<K> contract_front(const Polynomial<K>& f, const RingPtr<K>& target, int count) {
    std::vector<Term<K>> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) terms.push_back({t.m.contracted_front(count), t.c});
    return Polynomial<K>::from_terms(target, std::move(terms));
}

}  // namespace detail

// I cap J via the elimination of t from t*I + (1-t)*J.
template <Field K>
Ideal<K> ideal_intersection(const Ideal<K>& I, const Ideal<K>& J) {
    if (!ring_same(I.ring, J.ring)) throw RingMismatch("intersection across rings");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal<K>::make(I.ring, {});
    RingPtr<K> base = I.ring;
    std::vector<std::string> names;
    names.push_back("t");
    names.insert(names.end(), base->names.begin(), base->names.end());
    RingPtr<K> ext = make_ring<K>(names, MonomialOrder::elimination(1), base->unit);
    Polynomial<K> t = Polynomial<K>::variable(ext, 0);
    Polynomial<K> one_minus_t = Polynomial<K>::constant(ext, ext->unit) - t;
    std::vector<Polynomial<K>> gens;
    for (const auto& f : I.gens) gens.push_back(t * detail::embed(f, ext, 1));
    for (const auto& g : J.gens) gens.push_back(one_minus_t * detail::embed(g, ext, 1));
    GroebnerBasis<K> gb = buchberger(Ideal<K>::make(ext, std::move(gens)));
    std::vector<Polynomial<K>> kept;
    for (const auto& e : gb.elements)
        if (e.leading_monomial().exponent(0) == 0) kept.push_back(detail::contract_front(e, base, 1));
    return Ideal<K>::make(base, std::move(kept));
}

// Rabinowitsch: f lies in the radical iff 1 in I + (1 - t*f).
template <Field K>
bool radical_membership(const Polynomial<K>& f, const Ideal<K>& I) {
    if (!ring_same(f.ring(), I.ring)) throw RingMismatch("radical membership across rings");
    if (f.is_zero()) return true;
    RingPtr<K> base = I.ring;
    std::vector<std::string> names = base->names;
    names.push_back("t");
    RingPtr<K> ext = make_ring<K>(names, MonomialOrder::grevlex(), base->unit);
    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.gens) gens.push_back(detail::embed(g, ext, 0));
    Polynomial<K> t = Polynomial<K>::variable(ext, base->arity());
    gens.push_back(Polynomial<K>::constant(ext, ext->unit) - t * detail::embed(f, ext, 0));
    GroebnerBasis<K> gb = buchberger(Ideal<K>::make(ext, std::move(gens)));
    return gb.is_unit();
}

struct DimensionDegree {
    int dim = 0;    // Krull dimension of the quotient; -1 for the unit ideal
    int codim = 0;  // arity - dim
    BigInt degree = 0;
};

namespace detail {

inline std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return monomial_compare(a, b, MonomialOrder::grevlex()) < 0;
    });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool divisible = false;
        for (const auto& g : out)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

// Numerator of the Hilbert series of S/(gens) over (1-t)^arity, by pivot
// recursion: N(L) = N(L + (p)) + t^deg(p) * N(L : p).
inline std::vector<BigInt> hilbert_numerator(std::vector<Monomial> gens, int arity) {
    gens = minimal_monomial_generators(std::move(gens));
    if (gens.empty()) return {BigInt(1)};
    if (gens[0].is_one()) return {BigInt(0)};
    // pure powers of distinct variables: product formula
    bool pure = true;
    for (const auto& g : gens)
        if (std::popcount(g.support()) != 1) {
            pure = false;
            break;
        }
    if (pure) {
        std::vector<BigInt> acc{BigInt(1)};
        for (const auto& g : gens) {
            std::vector<BigInt> next(acc.size() + static_cast<std::size_t>(g.degree()), BigInt(0));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i];
                next[i + static_cast<std::size_t>(g.degree())] -= acc[i];
            }
            acc = std::move(next);
        }
        return acc;
    }
    // Pivot among the generators that are not pure powers: the variable
    // occurring most often there, with its minimum positive exponent there.
    // Minimality of gens then guarantees x_var^b lies outside the ideal, so
    // the plus branch strictly grows and the recursion terminates.
    std::array<int, kMaxVars> count{};
    for (const auto& g : gens) {
        if (std::popcount(g.support()) == 1) continue;
        for (int v = 0; v < arity; ++v)
            if (g.exponent(v)) ++count[static_cast<std::size_t>(v)];
    }
    int var = 0;
    for (int v = 1; v < arity; ++v)
        if (count[static_cast<std::size_t>(v)] > count[static_cast<std::size_t>(var)]) var = v;
    int b = 0;
    for (const auto& g : gens) {
        if (std::popcount(g.support()) == 1) continue;
        if (g.exponent(var) > 0 && (b == 0 || g.exponent(var) < b)) b = g.exponent(var);
    }
    // L + (x_var^b)
    std::vector<Monomial> plus = gens;
    plus.push_back(Monomial::variable(gens[0].arity(), var, b));
    std::vector<BigInt> n_plus = hilbert_numerator(std::move(plus), arity);
    // L : x_var^b
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        Monomial q = g;
        q.set_exponent(var, std::max(0, g.exponent(var) - b));
        colon.push_back(q);
    }
    std::vector<BigInt> n_colon = hilbert_numerator(std::move(colon), arity);
    std::vector<BigInt> out(std::max(n_plus.size(), n_colon.size() + static_cast<std::size_t>(b)), BigInt(0));
    for (std::size_t i = 0; i < n_plus.size(); ++i) out[i] += n_plus[i];
    for (std::size_t i = 0; i < n_colon.size(); ++i) out[i + static_cast<std::size_t>(b)] += n_colon[i];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

// Exact division by (1-t); the caller guarantees divisibility.
inline std::vector<BigInt> divide_one_minus_t(const std::vector<BigInt>& n) {
    // q_i = sum_{j <= i} n_j, and the total sum must vanish
    std::vector<BigInt> q(n.size() > 0 ? n.size() - 1 : 0, BigInt(0));
    BigInt run = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
        run += n[i];
        q[i] = run;
    }
    run += n.empty() ? BigInt(0) : n.back();
    if (run != 0) throw Error("Hilbert numerator not divisible by 1-t");
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

}  // namespace detail

template <Field K>
DimensionDegree dimension_and_degree(const GroebnerBasis<K>& gb) {
    const int arity = gb.ring->arity();
    DimensionDegree out;
    if (gb.is_unit()) {
        out.dim = -1;
        out.codim = arity + 1;
        out.degree = 0;
        return out;
    }
    std::vector<Monomial> lms;
    lms.reserve(gb.elements.size());
    for (const auto& e : gb.elements) lms.push_back(e.leading_monomial());
    lms = detail::minimal_monomial_generators(std::move(lms));
    // dimension: largest variable subset meeting no leading-term support
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << arity); ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : lms)
            if ((m.support() & ~mask) == 0) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    out.dim = best;
    out.codim = arity - best;
    std::vector<BigInt> num = detail::hilbert_numerator(lms, arity);
    for (int i = 0; i < out.codim; ++i) num = detail::divide_one_minus_t(num);
    BigInt deg = 0;
    for (const auto& c : num) deg += c;
    out.degree = deg;
    return out;
}

template <Field K>
DimensionDegree dimension_and_degree(const Ideal<K>& I) {
    return dimension_and_degree(buchberger(I));
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_GROEBNER_HPP
