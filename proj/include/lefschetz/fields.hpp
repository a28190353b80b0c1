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

#ifndef LEFSCHETZ_FIELDS_HPP
#define LEFSCHETZ_FIELDS_HPP

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lefschetz/errors.hpp"

namespace lefschetz {

using BigInt = boost::multiprecision::cpp_int;

// A coefficient field element. Elements carry their field with them (the
// modulus for F_p); zero()/one()/from_int() mint new elements of the same
// field, which is how generic code obtains constants without a separate
// context object.
template <class K>
concept Field = requires(const K a, const K b, std::int64_t n) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inverse() } -> std::same_as<K>;
    { a.zero() } -> std::same_as<K>;
    { a.one() } -> std::same_as<K>;
    { a.from_int(n) } -> std::same_as<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.cmp(b) } -> std::convertible_to<int>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

// Deterministic Miller-Rabin, valid for all n < 3'215'031'751 (covers < 2^31).
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (std::uint32_t a : {2u, 3u, 5u, 7u}) {
        std::uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = x * base % n;
            base = base * base % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Element of F_p, p an odd word-sized prime. Fully reduced value in [0, p).
class PrimeField {
  public:
    PrimeField() = default;

    PrimeField(std::int64_t value, std::uint32_t p) : p_(p) {
        std::int64_t m = value % static_cast<std::int64_t>(p);
        if (m < 0) m += p;
        v_ = static_cast<std::uint32_t>(m);
    }

    static PrimeField make_unit(std::uint32_t p) {
        if (p >= (1u << 31) || !is_prime_u32(p))
            throw Error("modulus " + std::to_string(p) + " is not a prime below 2^31");
        return PrimeField(1, p);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    PrimeField zero() const { return PrimeField(0, p_); }
    PrimeField one() const { return PrimeField(1, p_); }
    PrimeField from_int(std::int64_t n) const { return PrimeField(n, p_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    PrimeField operator+(const PrimeField& o) const {
        check(o);
        std::uint32_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    PrimeField operator-(const PrimeField& o) const {
        check(o);
        std::uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return raw(s, p_);
    }
    PrimeField operator-() const {
        return raw(v_ == 0 ? 0 : p_ - v_, p_);
    }
    PrimeField operator*(const PrimeField& o) const {
        check(o);
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_), p_);
    }
    PrimeField inverse() const {
        if (v_ == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += p_;
        return raw(static_cast<std::uint32_t>(t), p_);
    }
    PrimeField operator/(const PrimeField& o) const {
        check(o);
        return *this * o.inverse();
    }

    PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
    PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
    PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

    bool operator==(const PrimeField& o) const {
        check(o);
        return v_ == o.v_;
    }
    bool operator!=(const PrimeField& o) const { return !(*this == o); }

    // Total order on the canonical representatives; used only to make
    // generator lists deterministic.
    int cmp(const PrimeField& o) const {
        check(o);
        return v_ < o.v_ ? -1 : v_ > o.v_ ? 1 : 0;
    }

    std::string to_string() const { return std::to_string(v_); }

  private:
    static PrimeField raw(std::uint32_t v, std::uint32_t p) {
        PrimeField e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }
    void check(const PrimeField& o) const {
        if (p_ != o.p_) throw MixedFields("mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 2;  // default-constructed elements live in F_2; real use goes through make_unit
};

// Arbitrary-precision rational in canonical form: gcd-reduced, positive
// denominator, zero is 0/1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw DivisionByZero("rational with zero denominator");
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(std::int64_t n) const { return Rational(n); }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational inverse() const {
        if (num_ == 0) throw DivisionByZero("inverse of 0 in Q");
        return Rational(den_, num_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw DivisionByZero("division by 0 in Q");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    int cmp(const Rational& o) const {
        BigInt lhs = num_ * o.den_, rhs = o.num_ * den_;
        return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    }

    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

  private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

static_assert(Field<PrimeField>);
static_assert(Field<Rational>);

}  // namespace lefschetz

#endif  // LEFSCHETZ_FIELDS_HPP
