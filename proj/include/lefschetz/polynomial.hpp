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

#ifndef LEFSCHETZ_POLYNOMIAL_HPP
#define LEFSCHETZ_POLYNOMIAL_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/fields.hpp"
#include "lefschetz/monomial.hpp"

namespace lefschetz {

inline bool same_field(const Rational&, const Rational&) { return true; }
inline bool same_field(const PrimeField& a, const PrimeField& b) { return a.modulus() == b.modulus(); }

template <Field K>
inline bool is_negative(const K& c) {
    if constexpr (std::is_same_v<K, Rational>) {
        return c.numerator() < 0;
    } else {
        return false;
    }
}

// Ring descriptor: variable names, monomial order, and the coefficient
// field's multiplicative identity (the context from which constants are
// minted).
template <Field K>
struct Ring {
    std::vector<std::string> names;
    MonomialOrder order;
    K unit;

    int arity() const { return static_cast<int>(names.size()); }
};

template <Field K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <Field K>
RingPtr<K> make_ring(std::vector<std::string> names, MonomialOrder order, K unit) {
    return std::make_shared<const Ring<K>>(Ring<K>{std::move(names), order, std::move(unit)});
}

inline std::vector<std::string> numbered_names(const std::string& stem, int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

template <Field K>
bool ring_same(const RingPtr<K>& a, const RingPtr<K>& b) {
    if (a.get() == b.get()) return true;
    return a->names == b->names && a->order == b->order && same_field(a->unit, b->unit);
}

template <Field K>
struct Term {
    Monomial m;
    K c;
};

// Sorted-term multivariate polynomial. Terms are strictly descending in the
// ring's order, with no zero coefficients; the zero polynomial has no terms.
template <Field K>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr<K> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<K> ring, const K& c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.push_back({Monomial::one(ring->arity()), c});
        return p;
    }

    static Polynomial monomial(RingPtr<K> ring, const Monomial& m, const K& c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.push_back({m, c});
        return p;
    }

    static Polynomial variable(RingPtr<K> ring, int index, int power = 1) {
        const int n = ring->arity();
        return monomial(ring, Monomial::variable(n, index, power), ring->unit);
    }

    // Trusted constructor: `terms` must already be canonical (strictly
    // descending, nonzero coefficients).
    static Polynomial from_sorted_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    // Canonicalizes an arbitrary term soup: sorts, merges duplicates, drops
    // zeros.
    static Polynomial from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
        Polynomial p(ring);
        std::sort(terms.begin(), terms.end(), [&ring](const Term<K>& a, const Term<K>& b) {
            return monomial_compare(a.m, b.m, ring->order) > 0;
        });
        for (auto& t : terms) {
            if (t.c.is_zero()) continue;
            if (!p.terms_.empty() && p.terms_.back().m == t.m) {
                p.terms_.back().c += t.c;
                if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const { return terms_.front().m; }
    const K& leading_coefficient() const { return terms_.front().c; }

    // Total degree; -1 for the zero polynomial. Terms are sorted by a graded
    // order only when the ring's order is graded, so scan all terms.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.front().m.degree();
        for (const auto& t : terms_)
            if (t.m.degree() != d) return false;
        return true;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        merge_into(r.terms_, terms_, o.terms_, ring_->order, false);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        check(o);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        merge_into(r.terms_, terms_, o.terms_, ring_->order, true);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return Polynomial(ring_);
        if (o.terms_.size() == 1) return scaled_shifted(o.terms_[0].c, o.terms_[0].m);
        if (terms_.size() == 1) return o.scaled_shifted(terms_[0].c, terms_[0].m);
        std::vector<Term<K>> soup;
        soup.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) soup.push_back({a.m * b.m, a.c * b.c});
        return from_terms(ring_, std::move(soup));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial operator*(const K& c) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.c = t.c * c;
        return r;
    }

    // this * c * m
    Polynomial scaled_shifted(const K& c, const Monomial& m) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
        return r;
    }

    Polynomial pow(int e) const {
        Polynomial r = constant(ring_, ring_->unit);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    bool operator==(const Polynomial& o) const {
        check(o);
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].m != o.terms_[i].m || !(terms_[i].c == o.terms_[i].c)) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Variable i is replaced by images[i]; the result lives in the images'
    // ring.
    Polynomial substituted(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != ring_->arity())
            throw ArityMismatch("one image per variable required");
        RingPtr<K> target = images.empty() ? ring_ : images[0].ring();
        std::vector<std::vector<Polynomial>> powers(images.size());
        auto power_of = [&](int var, int e) -> const Polynomial& {
            auto& cache = powers[static_cast<std::size_t>(var)];
            if (cache.empty()) cache.push_back(constant(target, target->unit));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[static_cast<std::size_t>(var)]);
            return cache[static_cast<std::size_t>(e)];
        };
        Polynomial acc(target);
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, t.c);
            for (int i = 0; i < ring_->arity(); ++i)
                if (t.m.exponent(i)) prod = prod * power_of(i, t.m.exponent(i));
            acc += prod;
        }
        return acc;
    }

    K evaluated(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != ring_->arity())
            throw ArityMismatch("one value per variable required");
        K acc = ring_->unit.zero();
        for (const auto& t : terms_) {
            K v = t.c;
            for (int i = 0; i < ring_->arity(); ++i)
                for (int e = 0; e < t.m.exponent(i); ++e) v = v * point[static_cast<std::size_t>(i)];
            acc = acc + v;
        }
        return acc;
    }

    // Re-sorts the terms into another ring with the same names and field
    // (used to change the monomial order).
    Polynomial with_ring(RingPtr<K> target) const {
        std::vector<Term<K>> ts = terms_;
        return from_terms(std::move(target), std::move(ts));
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            K c = terms_[i].c;
            bool neg = is_negative(c);
            if (neg) c = -c;
            if (i == 0) {
                if (neg) s += "-";
            } else {
                s += neg ? "-" : "+";
            }
            const Monomial& m = terms_[i].m;
            if (m.is_one()) {
                s += c.to_string();
            } else if (c.is_one()) {
                s += m.to_string(ring_->names);
            } else {
                s += c.to_string() + "*" + m.to_string(ring_->names);
            }
        }
        return s;
    }

    // Merges two canonical term lists (b optionally negated); exposed for the
    // division loop in the Gröbner engine.
    static void merge_term_lists(std::vector<Term<K>>& out, const std::vector<Term<K>>& a,
                                 const std::vector<Term<K>>& b, const MonomialOrder& order, bool subtract) {
        merge_into(out, a, b, order, subtract);
    }

  private:
    void check(const Polynomial& o) const {
        if (!ring_same(ring_, o.ring_)) throw RingMismatch();
    }

    static void merge_into(std::vector<Term<K>>& out, const std::vector<Term<K>>& a,
                           const std::vector<Term<K>>& b, const MonomialOrder& order, bool subtract) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = monomial_compare(a[i].m, b[j].m, order);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                out.push_back(b[j]);
                if (subtract) out.back().c = -out.back().c;
                ++j;
            } else {
                K s = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
                if (!s.is_zero()) out.push_back({a[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) {
            out.push_back(b[j]);
            if (subtract) out.back().c = -out.back().c;
        }
    }

    RingPtr<K> ring_;
    std::vector<Term<K>> terms_;
};

// p - c * m * g, the reduction step of polynomial division.
template <Field K>
Polynomial<K> subtract_scaled(const Polynomial<K>& p, const K& c, const Monomial& m, const Polynomial<K>& g) {
    return p - g.scaled_shifted(c, m);
}

// Deterministic total order on polynomials of one ring: by term list, each
// term compared first by monomial then by coefficient.
template <Field K>
int polynomial_compare(const Polynomial<K>& a, const Polynomial<K>& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    const MonomialOrder& order = a.ring()->order;
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        int c = monomial_compare(ta[i].m, tb[i].m, order);
        if (c != 0) return c;
        c = ta[i].c.cmp(tb[i].c);
        if (c != 0) return c;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

// Monic normalization for generator lists over F_p; over Q, integer-cleared
// with positive leading coefficient so that printed generators are stable.
template <Field K>
Polynomial<K> canonicalize_generator(const Polynomial<K>& p) {
    if (p.is_zero()) return p;
    if constexpr (std::is_same_v<K, Rational>) {
        BigInt den_lcm = 1, num_gcd = 0;
        for (const auto& t : p.terms()) {
            const Rational& c = t.c;
            den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
            BigInt n = c.numerator() < 0 ? BigInt(-c.numerator()) : c.numerator();
            num_gcd = boost::multiprecision::gcd(num_gcd, n);
        }
        Rational scale(den_lcm, num_gcd == 0 ? BigInt(1) : num_gcd);
        if (is_negative(p.leading_coefficient())) scale = -scale;
        return p * scale;
    } else {
        return p * p.leading_coefficient().inverse();
    }
}

template <Field K>
Polynomial<K> make_monic(const Polynomial<K>& p) {
    if (p.is_zero() || p.leading_coefficient().is_one()) return p;
    return p * p.leading_coefficient().inverse();
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_POLYNOMIAL_HPP
