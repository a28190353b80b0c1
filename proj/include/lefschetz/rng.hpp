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

#ifndef LEFSCHETZ_RNG_HPP
#define LEFSCHETZ_RNG_HPP

#include <cstdint>
#include <random>

#include "lefschetz/polynomial.hpp"

namespace lefschetz {

// Seeded generator with a stream that is identical on every platform.
// mt19937_64 output is pinned by the standard; reduction is by remainder on
// purpose (uniform_int_distribution is implementation defined). The small
// modulo bias is irrelevant for sampling coefficients.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(gen_() % bound);
    }

  private:
    std::mt19937_64 gen_;
};

template <Field K>
K random_element(Rng& rng, const K& unit) {
    if constexpr (std::is_same_v<K, Rational>) {
        // Small integers; plenty for genericity over Q.
        return unit.from_int(static_cast<std::int64_t>(rng.below(2001)) - 1000);
    } else {
        return unit.from_int(static_cast<std::int64_t>(rng.below(unit.modulus())));
    }
}

// Dense homogeneous form with independent random coefficients; never zero.
template <Field K>
Polynomial<K> random_form(const RingPtr<K>& ring, int degree, Rng& rng) {
    const auto monomials = monomials_of_degree(ring->arity(), degree, ring->order);
    while (true) {
        Polynomial<K> f = Polynomial<K>::zero(ring);
        for (const auto& m : monomials)
            f += Polynomial<K>::monomial(ring, m, random_element<K>(rng, ring->unit));
        if (!f.is_zero()) return f;
    }
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_RNG_HPP
