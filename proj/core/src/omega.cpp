#include "takagi/omega.hpp"

#include "takagi/takagi_eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace takagi {

namespace {

bool profile_in_omega(const DigitProfile& p) {
    return p.prefix_min >= 0 && p.window_min >= 0 && p.drift >= 0;
}

// Smallest n with D_j >= 0 for j <= n but D_{n+1} < 0. Only called when a
// deficiency exists.
std::uint64_t first_deficiency_prefix(const DigitProfile& p) {
    std::uint64_t s = p.preperiod_size, r = p.period_size;
    for (std::uint64_t j = 1; j <= s; ++j)
        if (p.prefix_D[j - 1] < 0) return j - 1;
    for (std::uint64_t t = 0;; ++t) {
        long long shift = static_cast<long long>(t) * p.drift;
        if (p.window_min + shift >= 0) continue;
        for (std::uint64_t i = 1; i <= r; ++i)
            if (p.prefix_D[s + i - 1] + shift < 0) return s + t * r + i - 1;
    }
}

} // namespace

bool in_omega_L(const BinExp& b) {
    return profile_in_omega(digit_profile(b));
}

OmegaMembership in_omega_L(const Rat& x) {
    require_unit_interval(x, "in_omega_L");
    if (x != Rat(1) && in_omega_L(BinExp::of_rational(x, TailVariant::LowTail)))
        return {true, TailVariant::LowTail};
    // an all-ones tail drives D to -inf, so HighTail never belongs; checked
    // anyway to keep the convention visible
    std::uint64_t s = mpz_scan1(x.den().get_mpz_t(), 0);
    bool dyadic = (x.den() >> s) == 1;
    if (dyadic && x != Rat(0) &&
        in_omega_L(BinExp::of_rational(x, TailVariant::HighTail)))
        return {true, TailVariant::HighTail};
    return {false, std::nullopt};
}

BinExp project_omega_L(const BinExp& b) {
    DigitProfile p = digit_profile(b);
    if (profile_in_omega(p)) return b;
    std::uint64_t n = first_deficiency_prefix(p);
    return BinExp(b.bits_upto(n), {0, 1});
}

BinExp project_omega_L(const Rat& x) {
    require_unit_interval(x, "project_omega_L");
    TailVariant v = x == Rat(1) ? TailVariant::HighTail : TailVariant::LowTail;
    return project_omega_L(BinExp::of_rational(x, v));
}

std::vector<Breakpoint> enumerate_breakpoints(unsigned m, const OmegaLimits& lim) {
    if (m > lim.max_breakpoint_m)
        throw resource_error("enumerate_breakpoints: m = " + std::to_string(m) +
                             " exceeds the cap " + std::to_string(lim.max_breakpoint_m));
    std::vector<Breakpoint> out;
    if (m == 0) {
        out.push_back({Rat(0), {}, 0});
        return out;
    }
    Bits word(2 * m, 0);
    // lexicographic Dyck-word enumeration; 0 sorts before 1, so the emitted
    // order is increasing numeric order of the dyadic values
    auto rec = [&](auto&& self, std::uint64_t pos, long long d) -> void {
        if (pos == word.size()) {
            mpz_class K = 0;
            for (std::uint64_t j = 0; j < word.size(); ++j)
                if (word[j]) mpz_setbit(K.get_mpz_t(), word.size() - 1 - j);
            out.push_back({Rat(K, pow2(2ul * m)), word, m});
            return;
        }
        std::uint64_t remaining = word.size() - pos;
        if (d + 1 <= static_cast<long long>(remaining) - 1) {
            word[pos] = 0;
            self(self, pos + 1, d + 1);
        }
        if (d >= 1) {
            word[pos] = 1;
            self(self, pos + 1, d - 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<GapInterval> enumerate_gap_intervals(unsigned max_2m, const OmegaLimits& lim) {
    if (max_2m % 2 != 0)
        throw std::domain_error("enumerate_gap_intervals: max_2m must be even");
    if (max_2m > lim.max_gap_2m)
        throw resource_error("enumerate_gap_intervals: 2m = " + std::to_string(max_2m) +
                             " exceeds the cap " + std::to_string(lim.max_gap_2m));
    std::vector<GapInterval> out;
    out.push_back({{Rat(0), {}, 0}, Rat(1, 3), Rat(1)});
    OmegaLimits inner = lim;
    inner.max_breakpoint_m = std::max(inner.max_breakpoint_m, max_2m / 2);
    for (unsigned two_m = 4; two_m <= max_2m; two_m += 2) {
        for (Breakpoint& bp : enumerate_breakpoints(two_m / 2, inner)) {
            if (!bp.is_small()) continue;
            // B = 0.b_1..b_l 0 1^k with k >= 2
            std::uint64_t k = 0;
            while (k < bp.bits.size() && bp.bits[bp.bits.size() - 1 - k] == 1) ++k;
            std::uint64_t l = bp.bits.size() - k - 1;
            GapInterval gap{bp, Rat(0), Rat(0)};
            gap.x_minus = BinExp(bp.bits, {0, 1}).value();
            Bits plus(bp.bits.begin(), bp.bits.begin() + static_cast<std::ptrdiff_t>(l));
            plus.push_back(1);
            gap.x_plus = BinExp(std::move(plus), {0}).value();
            gap.B = std::move(bp);
            out.push_back(std::move(gap));
        }
    }
    return out;
}

mpz_class catalan(unsigned m) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2ul * m, m);
    return c / (m + 1);
}

Rat cover_measure_bound(unsigned m) {
    if (m == 0) throw std::domain_error("cover_measure_bound: m must be >= 1");
    return Rat(catalan(m), pow2(2ul * m));
}

std::vector<BinExp> monotone_approximants(const BinExp& b, Direction dir, unsigned count) {
    DigitProfile p = digit_profile(b);
    if (!profile_in_omega(p))
        throw std::domain_error("monotone_approximants: input not in Omega^L");
    std::vector<BinExp> out;
    if (count == 0) return out;
    std::uint64_t s = p.preperiod_size, r = p.period_size;

    if (dir == Direction::Increasing) {
        if (b.terminates())
            throw std::domain_error("monotone_approximants: no such sequence exists, "
                                    "expansion ends 0^inf");
        // truncate at D_j > 0; skip repeats of the same dyadic value
        mpz_class K = 0, prev = 0;
        Bits head;
        std::uint64_t limit = s + (static_cast<std::uint64_t>(count) + 2) * (r + 2) + 8;
        std::uint64_t prev_j = 0;
        for (std::uint64_t j = 1; out.size() < count && j <= limit; ++j) {
            int bit = b.bit(j);
            head.push_back(static_cast<std::uint8_t>(bit));
            K = K * 2 + bit;
            if (p.D(j) <= 0) continue;
            // strictly larger value than the previous truncation?
            if (prev_j != 0 && K <= prev << (j - prev_j)) continue;
            if (prev_j == 0 && K == 0) continue;
            out.push_back(BinExp(head, {0}));
            prev = K;
            prev_j = j;
        }
        if (out.size() < count)
            throw std::logic_error("monotone_approximants: increasing walk stalled");
    } else {
        bool ends_01 = r == 2 && ((b.period()[0] == 0 && b.period()[1] == 1) ||
                                  (b.period()[0] == 1 && b.period()[1] == 0));
        if (ends_01)
            throw std::domain_error("monotone_approximants: no such sequence exists, "
                                    "expansion ends (01)^inf");
        // future minimum of D from each position onward; windows t >= 1 only
        // rise (drift >= 0 here), so one window of suffix minima suffices
        long long beyond = p.window_min + p.drift;
        std::vector<long long> suffix_min(s + r + 1);
        suffix_min[s + r] = beyond;
        for (std::uint64_t j = s + r; j >= 1; --j)
            suffix_min[j - 1] = std::min(p.prefix_D[j - 1], suffix_min[j]);
        std::vector<long long> window_suffix(r);   // min of D_{s+i'} over i' >= i
        for (std::uint64_t i = r; i >= 1; --i)
            window_suffix[i - 1] = i == r ? p.prefix_D[s + r - 1]
                                          : std::min(p.prefix_D[s + i - 1], window_suffix[i]);
        auto future_min = [&](std::uint64_t j) -> long long {
            if (j <= s + r) return suffix_min[j - 1];
            std::uint64_t idx = j - s - 1;
            std::uint64_t i = idx % r + 1;
            long long t = static_cast<long long>(idx / r);
            long long within = window_suffix[i - 1] + t * p.drift;
            long long later = p.window_min + (t + 1) * p.drift;
            return std::min(within, later);
        };
        std::optional<Rat> prev;
        Bits head;
        std::uint64_t limit = s + (static_cast<std::uint64_t>(count) + 2) * (2 * r + 4) + 16;
        for (std::uint64_t j = 1; out.size() < count && j <= limit; ++j) {
            head.push_back(static_cast<std::uint8_t>(b.bit(j)));
            if (p.D(j) != future_min(j)) continue;
            BinExp cand(head, {0, 1});
            Rat v = cand.value();
            if (prev && v >= *prev) continue;
            out.push_back(std::move(cand));
            prev = v;
        }
        if (out.size() < count)
            throw std::logic_error("monotone_approximants: decreasing walk stalled");
    }

    // the construction's guarantees, checked exactly per element
    Rat tau_b = takagi_exact(b);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!in_omega_L(out[i]))
            throw std::logic_error("monotone_approximants: element left Omega^L");
        Rat tau_i = takagi_exact(out[i]);
        bool ok = dir == Direction::Increasing ? tau_i < tau_b : tau_i > tau_b;
        if (!ok) throw std::logic_error("monotone_approximants: tau inequality failed");
    }
    return out;
}

} // namespace takagi
