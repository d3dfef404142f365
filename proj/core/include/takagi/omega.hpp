#pragma once

#include "takagi/binexp.hpp"
#include "takagi/errors.hpp"
#include "takagi/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace takagi {

/// Membership in the deficient digit set: D_j >= 0 for every j >= 1.
/// Decided finitely from the digit profile; members have value <= 1/3.
bool in_omega_L(const BinExp& b);

/// Rat-level convention for dyadic rationals: try the terminating expansion,
/// then the all-ones one, and report which variant (if either) belongs.
struct OmegaMembership {
    bool member = false;
    std::optional<TailVariant> variant;
};
OmegaMembership in_omega_L(const Rat& x);

/// P^L: the largest point of Omega^L at or below the input. If the first
/// deficiency D_{n+1} < 0 happens after prefix b_1..b_n, the projection is
/// 0.b_1..b_n(01). Idempotent; identity exactly on Omega^L.
BinExp project_omega_L(const BinExp& b);
BinExp project_omega_L(const Rat& x);

/// Balanced dyadic rational in Omega^L: D_j >= 0 for j < 2m, D_2m = 0.
struct Breakpoint {
    Rat value;
    Bits bits;            // the 2m digits; empty for B_empty = 0
    unsigned half_m = 0;  // m

    /// Member of the small breakpoint set: B_empty, or last two digits 11.
    bool is_small() const {
        return bits.empty() || (bits.size() >= 2 && bits[bits.size() - 1] == 1 &&
                                bits[bits.size() - 2] == 1);
    }
};

struct OmegaLimits {
    unsigned max_breakpoint_m = 12;
    unsigned max_gap_2m = 24;
};

/// All 2m-digit breakpoints in increasing numeric order; there are exactly
/// C_m of them (the m-th Catalan number).
std::vector<Breakpoint> enumerate_breakpoints(unsigned m, const OmegaLimits& lim = {});

/// Open interval removed from [0,1) in the construction of Omega^L, labeled
/// by a small breakpoint B = 0.b_1..b_l 0 1^k (k >= 2):
///   x_minus = 0.b_1..b_l 0 1^k (01),  x_plus = 0.b_1..b_l 1 0^k.
/// B_empty labels the exceptional gap (1/3, 1).
struct GapInterval {
    Breakpoint B;
    Rat x_minus;
    Rat x_plus;

    unsigned two_m() const { return static_cast<unsigned>(B.bits.size()); }
};

/// Every gap with 2m <= max_2m, B_empty first, then by 2m and numerically.
std::vector<GapInterval> enumerate_gap_intervals(unsigned max_2m,
                                                 const OmegaLimits& lim = {});

mpz_class catalan(unsigned m);

/// C_m / 4^m: measure of the level-2m dyadic cover of Omega^L; decreasing,
/// so Omega^L is Lebesgue null.
Rat cover_measure_bound(unsigned m);

enum class Direction { Increasing, Decreasing };

/// Strictly monotone sequences in Omega^L converging to b with strict tau
/// inequalities, verified exactly element by element. Increasing uses
/// truncations 0.b_1..b_j at indices with D_j > 0 (requires a tail other
/// than 0^inf); Decreasing uses 0.b_1..b_j(01) at indices where D_j is the
/// future minimum (requires a tail other than (01)^inf).
std::vector<BinExp> monotone_approximants(const BinExp& b, Direction dir, unsigned count);

} // namespace takagi
