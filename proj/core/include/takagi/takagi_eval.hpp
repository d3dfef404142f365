#pragma once

#include "takagi/binexp.hpp"
#include "takagi/rational.hpp"

namespace takagi {

/// Partial Takagi function tau_n(x) = sum_{j<n} <<2^j x>> / 2^j, the
/// piecewise linear approximant of level n. For dyadic x = k/2^n the
/// approximation is perfect: tau_m(x) = tau(x) for every m >= n.
Rat takagi_partial(const Rat& x, unsigned n);

/// Exact tau(x) for rational x in [0,1].
///
/// Writes the expansion as preperiod s plus primitive period r. The purely
/// periodic tail value w solves the self-affine fixed point
///   tau(w) (1 - 2^-r) = tau(P) + D_r(P) w 2^-r
/// with P the period word as a dyadic anchor; one more self-affine step
/// unwinds the preperiod. Cost is O(s + r) digit work plus one big-gcd.
Rat takagi_exact(const Rat& x);

/// Same value computed from a specific expansion; the two expansions of a
/// dyadic rational give equal results.
Rat takagi_exact(const BinExp& b);

enum class SeriesKind {
    DeficientDigit,   // tau = 1/2 - (1/4) sum (-1)^{b_{m+1}} D_m / 2^m
    DigitCount,       // tau = sum l_m / 2^m with l_m = #{i<m : b_i != b_m}
};

/// Partial sum of `terms` leading terms of the chosen series. Converges to
/// takagi_exact within the coarse bound 4 (terms+2) / 2^terms. Retained as a
/// cross-check oracle for the fixed-point evaluator.
Rat takagi_series(const BinExp& b, unsigned terms,
                  SeriesKind kind = SeriesKind::DeficientDigit);

/// The affine frame of the self-affinity relation on [k/2^n, (k+1)/2^n]:
/// tau(x0 + w/2^n) = tau(x0) + 2^-n (tau(w) + slope w).
struct SelfAffineFrame {
    Rat x0;               // dyadic anchor k/2^n
    unsigned n = 0;       // depth
    long long slope = 0;  // D_n(x0), from the terminating expansion
    Rat tau_x0;

    static SelfAffineFrame at(const Rat& x0, unsigned n);
};

Rat self_affine_eval(const SelfAffineFrame& frame, const Rat& w);

namespace detail {
/// 2^n tau(K/2^n) for the n-bit anchor word K; an exact integer.
mpz_class takagi_scaled_anchor(const mpz_class& word, std::uint64_t n);
}

} // namespace takagi
