#pragma once

#include "takagi/binexp.hpp"
#include "takagi/rational.hpp"

#include <algorithm>
#include <random>

namespace takagi::testutil {

inline Rat random_rational(std::mt19937_64& g, unsigned long max_den) {
    std::uniform_int_distribution<unsigned long> qd(2, max_den);
    unsigned long q = qd(g);
    std::uniform_int_distribution<unsigned long> pd(0, q);
    return Rat(mpz_class(pd(g)), mpz_class(q));
}

inline BinExp random_binexp(std::mt19937_64& g, std::size_t max_pre, std::size_t max_per) {
    std::uniform_int_distribution<std::size_t> sd(0, max_pre), rd(1, max_per);
    std::bernoulli_distribution bit(0.5);
    Bits pre(sd(g)), per(rd(g));
    for (auto& b : pre) b = bit(g) ? 1 : 0;
    for (auto& b : per) b = bit(g) ? 1 : 0;
    return BinExp(std::move(pre), std::move(per));
}

// Independent tau_n oracle: <<2^j x>> accumulated via modular arithmetic,
// no shared code with the library's evaluation paths.
inline Rat oracle_tau_partial(const Rat& x, unsigned n) {
    Rat acc(0);
    for (unsigned j = 0; j < n; ++j) {
        mpz_class t = (x.num() << j) % x.den();
        mpz_class d = std::min(t, mpz_class(x.den() - t));
        acc += Rat(d, mpz_class(x.den() << j));
    }
    return acc;
}

// tau(x) lies in [tau_n(x), tau_n(x) + (2/3) 2^-n]; brackets candidate values.
inline bool tau_in_bracket(const Rat& candidate, const Rat& x, unsigned n) {
    Rat lo = oracle_tau_partial(x, n);
    Rat hi = lo + Rat(2, 3) * pow2_rat(-static_cast<long>(n));
    return lo <= candidate && candidate <= hi;
}

inline long long oracle_deficient(const BinExp& b, std::uint64_t j) {
    long long ones = 0;
    for (std::uint64_t i = 1; i <= j; ++i) ones += b.bit(i);
    return static_cast<long long>(j) - 2 * ones;
}

} // namespace takagi::testutil
