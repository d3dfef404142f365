#pragma once

#include "takagi/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace takagi {

/// One digit per element, each 0 or 1.
using Bits = std::vector<std::uint8_t>;

/// Which of the two expansions of a dyadic rational is meant: the one ending
/// in 0^inf or the one ending in 1^inf. Non-dyadic rationals have a unique
/// expansion and only accept LowTail.
enum class TailVariant { LowTail, HighTail };

/// Eventually periodic binary expansion 0.pre(per).
///
/// Canonical form: the period is primitive (not a power of a shorter word)
/// and the preperiod is the shortest possible, so structural equality
/// coincides with equality of digit streams. Terminating expansions carry
/// period "0"; the all-ones expansion of a dyadic rational carries period
/// "1". The expansion, not its value, is the identity: the two expansions of
/// a dyadic rational are distinct BinExp objects.
class BinExp {
public:
    BinExp(Bits preperiod, Bits period);

    static BinExp of_rational(const Rat& x, TailVariant variant);
    /// Parses "0.0011(01)", "0.(01)", or the terminating shorthand "0.0011".
    static BinExp parse(std::string_view s);

    const Bits& preperiod() const { return pre_; }
    const Bits& period() const { return per_; }
    std::uint64_t preperiod_size() const { return pre_.size(); }
    std::uint64_t period_size() const { return per_.size(); }

    /// Digit b_j, 1-based.
    int bit(std::uint64_t j) const;
    /// Digits b_1..b_n materialized.
    Bits bits_upto(std::uint64_t n) const;
    /// Expansion of the digit stream after position n, i.e. 0.b_{n+1}b_{n+2}...
    BinExp suffix_from(std::uint64_t n) const;
    /// Digitwise flip; the expansion of 1 - value() for non-terminating input.
    BinExp complement() const;

    bool terminates() const { return per_.size() == 1 && per_[0] == 0; }
    bool all_ones_tail() const { return per_.size() == 1 && per_[0] == 1; }

    Rat value() const;
    std::string str() const;

    friend bool operator==(const BinExp&, const BinExp&) = default;

private:
    Bits pre_, per_;
    void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const BinExp& b);

/// D_j = j - 2 N^1_j: excess of 0-digits over 1-digits among the first j.
long long deficient_digit(const BinExp& b, std::uint64_t j);

/// Summary of the deficient digit function over the preperiod plus one
/// period window. Determines D everywhere:
///   D_{s + t*r + i} = D_{s+i} + t*drift   (1 <= i <= r, t >= 0).
struct DigitProfile {
    std::vector<long long> prefix_D;               // D_1 .. D_{s+r}
    long long drift = 0;                           // zeros minus ones per period
    long long window_min = 0;                      // min of D_{s+1}..D_{s+r}
    std::vector<std::uint64_t> window_zero_positions;  // j in (s, s+r] with D_j = 0
    std::uint64_t preperiod_size = 0;              // s
    std::uint64_t period_size = 0;                 // r
    long long prefix_min = 0;                      // min of D_1..D_s; 0 when s = 0
    long long end_of_prefix = 0;                   // D_s (0 when s = 0)

    long long D(std::uint64_t j) const;
};

DigitProfile digit_profile(const BinExp& b);

/// Balance points: positions j with D_j = 0, plus c_0 = 0 by convention.
struct BalanceSet {
    enum class Kind { Finite, EventuallyPeriodic };
    Kind kind = Kind::Finite;

    /// Finite: every balance point. EventuallyPeriodic: the balance points
    /// with j <= window_start. Always begins with 0.
    std::vector<std::uint64_t> finite_points;

    /// Tail structure, meaningful only for EventuallyPeriodic: the balance
    /// points in (window_start, window_start + period], repeating with the
    /// period ever after.
    std::vector<std::uint64_t> window_zeros;
    std::uint64_t window_start = 0;
    std::uint64_t period = 0;

    bool infinite() const { return kind == Kind::EventuallyPeriodic; }
    /// c_k; defined for every k when infinite, throws std::out_of_range past
    /// the end of a finite set.
    std::uint64_t point(std::size_t k) const;
};

BalanceSet balance_set(const BinExp& b);

} // namespace takagi
