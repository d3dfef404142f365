#include "takagi/takagi_eval.hpp"

#include <stdexcept>
#include <vector>

namespace takagi {

namespace detail {

// A = sum_{m=1..n} l_m 2^{n-m} + N1_n, accumulated into 64-bit lanes so the
// whole pass is O(n) word operations instead of O(n^2) bignum shifts.
mpz_class takagi_scaled_anchor(const mpz_class& word, std::uint64_t n) {
    if (n == 0) return mpz_class(0);
    std::size_t words = static_cast<std::size_t>((n + 63) / 64 + 2);
    std::vector<std::uint64_t> bits(words, 0);
    if (word != 0) {
        std::size_t count = 0;
        mpz_export(bits.data(), &count, -1, sizeof(std::uint64_t), 0, 0, word.get_mpz_t());
    }
    auto get_bit = [&](std::uint64_t pos) -> int {
        return static_cast<int>((bits[pos >> 6] >> (pos & 63)) & 1u);
    };

    std::vector<std::uint64_t> acc(words, 0);
    auto add_at = [&](std::uint64_t value, std::uint64_t pos) {
        if (value == 0) return;
        std::size_t idx = pos >> 6;
        unsigned off = static_cast<unsigned>(pos & 63);
        unsigned __int128 wide = static_cast<unsigned __int128>(value) << off;
        std::uint64_t lo = static_cast<std::uint64_t>(wide);
        std::uint64_t carry = static_cast<std::uint64_t>(wide >> 64);
        std::uint64_t old = acc[idx];
        acc[idx] += lo;
        carry += acc[idx] < old ? 1 : 0;
        for (std::size_t j = idx + 1; carry != 0; ++j) {
            std::uint64_t o = acc[j];
            acc[j] += carry;
            carry = acc[j] < o ? 1 : 0;
        }
    };

    std::uint64_t ones = 0;
    for (std::uint64_t m = 1; m <= n; ++m) {
        int b = get_bit(n - m);
        std::uint64_t ell = b ? (m - 1 - ones) : ones;
        add_at(ell, n - m);
        ones += static_cast<std::uint64_t>(b);
    }
    add_at(ones, 0);

    mpz_class A;
    mpz_import(A.get_mpz_t(), acc.size(), -1, sizeof(std::uint64_t), 0, 0, acc.data());
    return A;
}

// tau of the expansion 0.<K:s bits>(<M:r bits>) where the tail value is
// wnum/wden = M/(2^r - 1), passed separately so callers with a reduced form
// avoid a needless big gcd. Exactly one Rat canonicalization happens here.
Rat tau_from_words(std::uint64_t s, const mpz_class& K,
                   std::uint64_t r, const mpz_class& M,
                   const mpz_class& wnum, const mpz_class& wden) {
    mpz_class AK = takagi_scaled_anchor(K, s);
    mpz_class AM = takagi_scaled_anchor(M, r);
    long long Ds = static_cast<long long>(s) -
                   2 * static_cast<long long>(mpz_popcount(K.get_mpz_t()));
    long long Dr = static_cast<long long>(r) -
                   2 * static_cast<long long>(mpz_popcount(M.get_mpz_t()));
    mpz_class full = pow2(r) - 1;
    mpz_class dw = wden * full;
    mpz_class num = AK * dw + AM * wden + mpz_class(static_cast<long>(Dr)) * wnum +
                    mpz_class(static_cast<long>(Ds)) * wnum * full;
    return Rat(num, mpz_class(pow2(s) * dw));
}

std::uint64_t mult_order_2(unsigned long q) {
    std::uint64_t r = 1;
    unsigned long v = 2 % q;
    while (v != 1) {
        v = (v * 2) % q;
        ++r;
    }
    return r;
}

mpz_class bits_word(const Bits& bits) {
    mpz_class K = 0;
    for (std::uint64_t j = 0; j < bits.size(); ++j)
        if (bits[j]) mpz_setbit(K.get_mpz_t(), bits.size() - 1 - j);
    return K;
}

} // namespace detail

Rat takagi_partial(const Rat& x, unsigned n) {
    require_unit_interval(x, "takagi_partial");
    mpq_class y = x.mpq();
    mpq_class acc = 0;
    mpq_class weight = 1;
    for (unsigned j = 0; j < n; ++j) {
        mpq_class dist = y <= mpq_class(1, 2) ? y : mpq_class(1) - y;
        acc += dist * weight;
        weight /= 2;
        y *= 2;
        if (y >= 1) y -= 1;
    }
    return Rat(acc);
}

Rat takagi_exact(const Rat& x) {
    require_unit_interval(x, "takagi_exact");
    const mpz_class& q = x.den();
    std::uint64_t s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_class q_odd = q >> s;
    mpz_class K, rem;
    mpz_fdiv_qr(K.get_mpz_t(), rem.get_mpz_t(), x.num().get_mpz_t(), q_odd.get_mpz_t());
    if (q_odd == 1)
        return detail::tau_from_words(s, K, 1, 0, 0, 1);
    std::uint64_t r = detail::mult_order_2(q_odd.get_ui());
    mpz_class M = (pow2(r) - 1) * rem;
    mpz_divexact(M.get_mpz_t(), M.get_mpz_t(), q_odd.get_mpz_t());
    // rem/q_odd is already in lowest terms: gcd(p, q) = 1
    return detail::tau_from_words(s, K, r, M, rem, q_odd);
}

Rat takagi_exact(const BinExp& b) {
    std::uint64_t s = b.preperiod_size(), r = b.period_size();
    mpz_class K = detail::bits_word(b.preperiod());
    mpz_class M = detail::bits_word(b.period());
    mpq_class w(M, pow2(r) - 1);
    w.canonicalize();
    return detail::tau_from_words(s, K, r, M, w.get_num(), w.get_den());
}

Rat takagi_series(const BinExp& b, unsigned terms, SeriesKind kind) {
    if (terms == 0) throw std::domain_error("takagi_series: terms must be >= 1");
    mpz_class acc = 0;
    long N1 = 0;
    if (kind == SeriesKind::DeficientDigit) {
        // c_m = (-1)^{b_{m+1}} D_m for m = 0..terms-1; S = 1/2 - acc/2^{terms+1}
        for (unsigned m = 0; m < terms; ++m) {
            long D = static_cast<long>(m) - 2 * N1;
            int bnext = b.bit(m + 1);
            acc = acc * 2 + (bnext ? -D : D);
            N1 += bnext;
        }
        return Rat(mpz_class(pow2(terms) - acc), pow2(terms + 1));
    }
    // l_m series: S = sum_{m<=terms} l_m / 2^m = acc / 2^terms
    for (unsigned m = 1; m <= terms; ++m) {
        int bm = b.bit(m);
        long ell = bm ? (static_cast<long>(m) - 1 - N1) : N1;
        acc = acc * 2 + ell;
        N1 += bm;
    }
    return Rat(acc, pow2(terms));
}

SelfAffineFrame SelfAffineFrame::at(const Rat& x0, unsigned n) {
    require_unit_interval(x0, "SelfAffineFrame");
    mpz_class scaled = x0.num() * pow2(n);
    if (!mpz_divisible_p(scaled.get_mpz_t(), x0.den().get_mpz_t()))
        throw std::domain_error("SelfAffineFrame: " + x0.str() +
                                " is not a dyadic anchor at depth " + std::to_string(n));
    mpz_class K = scaled / x0.den();
    SelfAffineFrame f;
    f.x0 = x0;
    f.n = n;
    f.slope = static_cast<long long>(n) -
              2 * static_cast<long long>(mpz_popcount(K.get_mpz_t()));
    f.tau_x0 = takagi_exact(x0);
    return f;
}

Rat self_affine_eval(const SelfAffineFrame& frame, const Rat& w) {
    require_unit_interval(w, "self_affine_eval");
    Rat tilted = takagi_exact(w) + Rat(static_cast<long>(frame.slope)) * w;
    return frame.tau_x0 + tilted / Rat(pow2(frame.n), 1);
}

} // namespace takagi
