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

#ifndef LEFSCHETZ_MONOMIAL_HPP
#define LEFSCHETZ_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lefschetz/errors.hpp"

namespace lefschetz {

// Enough for k[x1..x3], k[a1..a6] and either one extended by an auxiliary
// elimination variable.
inline constexpr int kMaxVars = 8;

enum class OrderKind { grevlex, lex, elimination };

// elimination(block) makes any monomial involving one of the first `block`
// variables larger than every monomial in the remaining variables; both
// blocks are compared by grevlex internally.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int block = 0;

    static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder elimination(int block) { return {OrderKind::elimination, block}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

// Exponent vector with cached total degree.
class Monomial {
  public:
    Monomial() = default;

    explicit Monomial(int arity) : n_(static_cast<std::uint8_t>(arity)) {
        if (arity < 1 || arity > kMaxVars) throw ArityMismatch("arity out of range");
    }

    static Monomial one(int arity) { return Monomial(arity); }

    static Monomial variable(int arity, int index, int power = 1) {
        Monomial m(arity);
        m.set_exponent(index, power);
        return m;
    }

    static Monomial from_exponents(const std::vector<int>& exps) {
        Monomial m(static_cast<int>(exps.size()));
        for (int i = 0; i < static_cast<int>(exps.size()); ++i) m.set_exponent(i, exps[i]);
        return m;
    }

    int arity() const { return n_; }
    int degree() const { return static_cast<int>(deg_); }
    int exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
    bool is_one() const { return deg_ == 0; }

    void set_exponent(int i, int v) {
        deg_ += static_cast<std::uint32_t>(v) - e_[static_cast<std::size_t>(i)];
        e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v);
    }

    Monomial operator*(const Monomial& o) const {
        check(o);
        Monomial r(*this);
        for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] + o.e_[i]);
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        check(o);
        if (deg_ > o.deg_) return false;
        for (int i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        check(o);
        Monomial r(*this);
        for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] - o.e_[i]);
        r.deg_ -= o.deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        check(o);
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    bool coprime(const Monomial& o) const {
        check(o);
        for (int i = 0; i < n_; ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    // Bitmask of variables with positive exponent.
    std::uint32_t support() const {
        std::uint32_t s = 0;
        for (int i = 0; i < n_; ++i)
            if (e_[i]) s |= 1u << i;
        return s;
    }

    // Same exponents placed at offset in a ring with new_arity variables.
    Monomial embedded(int new_arity, int offset) const {
        Monomial r(new_arity);
        for (int i = 0; i < n_; ++i) r.set_exponent(i + offset, e_[i]);
        return r;
    }

    // Drops the first `count` variables; their exponents must be zero.
    Monomial contracted_front(int count) const {
        Monomial r(n_ - count);
        for (int i = count; i < n_; ++i) r.set_exponent(i - count, e_[i]);
        return r;
    }

    bool operator==(const Monomial& o) const {
        if (n_ != o.n_ || deg_ != o.deg_) return false;
        for (int i = 0; i < n_; ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](std::size_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(n_);
        for (int i = 0; i < n_; ++i) mix(e_[i]);
        return h;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (is_one()) return "1";
        std::string s;
        for (int i = 0; i < n_; ++i) {
            if (!e_[i]) continue;
            if (!s.empty()) s += "*";
            s += names[static_cast<std::size_t>(i)];
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s;
    }

  private:
    void check(const Monomial& o) const {
        if (n_ != o.n_) throw ArityMismatch();
    }

    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint32_t deg_ = 0;
    std::uint8_t n_ = 0;
};

namespace detail {

// grevlex on the variable range [lo, hi): total degree first, then the last
// nonzero entry of a - b decides (negative means a is larger).
inline int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace detail

// Returns -1 (m1 < m2), 0, or 1 (m1 > m2).
inline int monomial_compare(const Monomial& m1, const Monomial& m2, const MonomialOrder& order) {
    if (m1.arity() != m2.arity()) throw ArityMismatch();
    const int n = m1.arity();
    switch (order.kind) {
        case OrderKind::grevlex: {
            if (m1.degree() != m2.degree()) return m1.degree() < m2.degree() ? -1 : 1;
            for (int i = n - 1; i >= 0; --i) {
                int d = m1.exponent(i) - m2.exponent(i);
                if (d != 0) return d < 0 ? 1 : -1;
            }
            return 0;
        }
        case OrderKind::lex: {
            for (int i = 0; i < n; ++i) {
                int d = m1.exponent(i) - m2.exponent(i);
                if (d != 0) return d < 0 ? -1 : 1;
            }
            return 0;
        }
        case OrderKind::elimination: {
            int r = detail::grevlex_range(m1, m2, 0, order.block);
            if (r != 0) return r;
            return detail::grevlex_range(m1, m2, order.block, n);
        }
    }
    return 0;
}

// All monomials of total degree d, sorted descending in the given order.
inline std::vector<Monomial> monomials_of_degree(int arity, int d, const MonomialOrder& order) {
    std::vector<Monomial> out;
    Monomial cur(arity);
    // enumerate compositions of d into arity parts
    std::function<void(int, int)> rec = [&](int var, int rest) {
        if (var == arity - 1) {
            cur.set_exponent(var, rest);
            out.push_back(cur);
            cur.set_exponent(var, 0);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur.set_exponent(var, e);
            rec(var + 1, rest - e);
        }
        cur.set_exponent(var, 0);
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), [&order](const Monomial& a, const Monomial& b) {
        return monomial_compare(a, b, order) > 0;
    });
    return out;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_MONOMIAL_HPP
