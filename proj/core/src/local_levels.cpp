#include "takagi/local_levels.hpp"

#include "takagi/takagi_eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace takagi {

namespace {

// Where the periodic block cycle begins: the first balance point c* >= s,
// so that the digits after c* are purely periodic and blocks tile period
// windows. Returns {c*, index of c* in the balance point sequence}.
std::pair<std::uint64_t, std::size_t> cycle_anchor(const BalanceSet& bs) {
    if (bs.finite_points.back() == bs.window_start)
        return {bs.window_start, bs.finite_points.size() - 1};
    return {bs.window_zeros.front(), bs.finite_points.size()};
}

void flip_range(Bits& bits, std::uint64_t from, std::uint64_t to) {
    for (std::uint64_t j = from; j <= to; ++j) bits[j - 1] ^= 1;
}

BinExp assemble(Bits head, const BinExp& rest) {
    head.insert(head.end(), rest.preperiod().begin(), rest.preperiod().end());
    return BinExp(std::move(head), rest.period());
}

} // namespace

BlockSeq blocks(const BinExp& b) {
    BalanceSet bs = balance_set(b);
    BlockSeq out;
    if (!bs.infinite()) {
        std::uint64_t last = bs.finite_points.back();
        Bits head = b.bits_upto(last);
        for (std::size_t k = 0; k + 1 < bs.finite_points.size(); ++k) {
            std::uint64_t c0 = bs.finite_points[k], c1 = bs.finite_points[k + 1];
            out.prefix.push_back({c0, c1, Bits(head.begin() + static_cast<std::ptrdiff_t>(c0),
                                               head.begin() + static_cast<std::ptrdiff_t>(c1))});
        }
        out.tail = b.suffix_from(last);
        out.tail_start = last;
        return out;
    }
    auto [anchor, anchor_idx] = cycle_anchor(bs);
    Bits head = b.bits_upto(anchor + bs.period);
    for (std::size_t k = 0; k + 1 <= anchor_idx; ++k) {
        std::uint64_t c0 = bs.point(k), c1 = bs.point(k + 1);
        out.prefix.push_back({c0, c1, Bits(head.begin() + static_cast<std::ptrdiff_t>(c0),
                                           head.begin() + static_cast<std::ptrdiff_t>(c1))});
    }
    std::size_t per_window = bs.window_zeros.size();
    for (std::size_t k = anchor_idx; k < anchor_idx + per_window; ++k) {
        std::uint64_t c0 = bs.point(k), c1 = bs.point(k + 1);
        out.cycle.push_back({c0, c1, Bits(head.begin() + static_cast<std::ptrdiff_t>(c0),
                                          head.begin() + static_cast<std::ptrdiff_t>(c1))});
    }
    return out;
}

BinExp flip_block(const BinExp& b, std::size_t k) {
    BalanceSet bs = balance_set(b);
    if (!bs.infinite()) {
        std::size_t nblocks = bs.finite_points.size();
        if (k >= nblocks)
            throw std::out_of_range("flip_block: block index " + std::to_string(k) +
                                    " past the tail block");
        if (k == nblocks - 1) {
            std::uint64_t last = bs.finite_points.back();
            return assemble(b.bits_upto(last), b.suffix_from(last).complement());
        }
    }
    std::uint64_t c0 = bs.point(k), c1 = bs.point(k + 1);
    Bits head = b.bits_upto(c1);
    flip_range(head, c0 + 1, c1);
    return assemble(std::move(head), b.suffix_from(c1));
}

BinExp left_endpoint(const BinExp& b) {
    BalanceSet bs = balance_set(b);
    if (!bs.infinite()) {
        std::uint64_t last = bs.finite_points.back();
        Bits head = b.bits_upto(last);
        for (std::size_t k = 0; k + 1 < bs.finite_points.size(); ++k) {
            std::uint64_t c0 = bs.finite_points[k], c1 = bs.finite_points[k + 1];
            if (head[c0]) flip_range(head, c0 + 1, c1);
        }
        BinExp tail = b.suffix_from(last);
        if (tail.bit(1) == 1) tail = tail.complement();
        return assemble(std::move(head), tail);
    }
    auto [anchor, anchor_idx] = cycle_anchor(bs);
    std::size_t per_window = bs.window_zeros.size();
    Bits head = b.bits_upto(anchor + bs.period);
    for (std::size_t k = 0; k < anchor_idx + per_window; ++k) {
        std::uint64_t c0 = bs.point(k), c1 = bs.point(k + 1);
        if (head[c0]) flip_range(head, c0 + 1, c1);
    }
    Bits per(head.begin() + static_cast<std::ptrdiff_t>(anchor), head.end());
    head.resize(anchor);
    return BinExp(std::move(head), std::move(per));
}

bool equivalent(const BinExp& a, const BinExp& b) {
    return left_endpoint(a) == left_endpoint(b);
}

LocalLevelSetDesc local_level_set(const BinExp& b) {
    LocalLevelSetDesc d{left_endpoint(b), balance_set(b), Cardinality::Finite,
                        0, Rat(0), std::nullopt};
    if (d.balance.infinite()) {
        d.cardinality = Cardinality::Uncountable;
        d.hausdorff_dim = Rat(static_cast<long>(d.balance.window_zeros.size()),
                              static_cast<long>(d.balance.period));
    } else {
        d.cardinality = Cardinality::Finite;
        d.log2_size = static_cast<unsigned>(d.balance.finite_points.size());
        d.hausdorff_dim = Rat(0);
    }
    d.level = takagi_exact(b);
    return d;
}

std::vector<BinExp> enumerate_members(const LocalLevelSetDesc& desc, unsigned depth,
                                      const EnumLimits& lim) {
    const BinExp& L = desc.left_endpoint;
    BalanceSet bs = balance_set(L);
    std::size_t nflip;       // how many leading blocks get a free orientation
    bool tail_flips = false; // finite case: last choice complements the tail
    if (!bs.infinite()) {
        nflip = bs.finite_points.size();
        tail_flips = true;
    } else {
        nflip = depth;
    }
    if (nflip >= 63 || (std::size_t{1} << nflip) > lim.max_members)
        throw resource_error("enumerate_members: 2^" + std::to_string(nflip) +
                             " members exceeds the cap");

    std::uint64_t head_end = bs.infinite() ? bs.point(nflip) : bs.finite_points.back();
    BinExp rest = L.suffix_from(head_end);
    Bits base = L.bits_upto(head_end);

    std::vector<BinExp> out;
    out.reserve(std::size_t{1} << nflip);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nflip); ++mask) {
        Bits head = base;
        std::size_t finite_blocks = tail_flips ? nflip - 1 : nflip;
        for (std::size_t k = 0; k < finite_blocks; ++k)
            if ((mask >> k) & 1) flip_range(head, bs.point(k) + 1, bs.point(k + 1));
        BinExp t = (tail_flips && ((mask >> (nflip - 1)) & 1)) ? rest.complement() : rest;
        out.push_back(assemble(std::move(head), t));
    }
    return out;
}

Rat level_half_family(std::optional<unsigned> k) {
    if (!k) return Rat(1, 6);
    // 1/2 - sum_{j<=k} 4^-j = 1/6 + (1/3) 4^-k
    return Rat(1, 6) + Rat(1, mpz_class(3 * pow2(2ul * *k)));
}

FamilyMember infinite_level_family(const Rat& breakpoint, unsigned k) {
    if (k == 0)
        throw std::domain_error("infinite_level_family: k must be positive");
    require_unit_interval(breakpoint, "infinite_level_family");
    if (breakpoint == Rat(1))
        throw std::domain_error("infinite_level_family: 1 is not a breakpoint");
    BinExp e = BinExp::of_rational(breakpoint, TailVariant::LowTail);
    if (!e.terminates())
        throw std::domain_error("infinite_level_family: " + breakpoint.str() +
                                " is not dyadic");
    DigitProfile p = digit_profile(e);
    std::uint64_t two_m = e.preperiod_size();
    if (two_m % 2 != 0 || p.end_of_prefix != 0 || p.prefix_min < 0)
        throw std::domain_error("infinite_level_family: " + breakpoint.str() +
                                " is not a balanced breakpoint in Omega^L");
    unsigned m = static_cast<unsigned>(two_m / 2);
    FamilyMember fm;
    fm.x = breakpoint + level_half_family(k) / Rat(pow2(2ul * m), 1);
    fm.level = takagi_exact(breakpoint) + Rat(1, pow2(2ul * m + 1));
    return fm;
}

} // namespace takagi
