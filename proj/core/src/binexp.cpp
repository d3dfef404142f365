#include "takagi/binexp.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace takagi {

namespace {

// Bits b_1..b_n of the n-bit word K, most significant first.
Bits word_to_bits(const mpz_class& K, std::uint64_t n) {
    Bits out(n);
    for (std::uint64_t j = 0; j < n; ++j)
        out[j] = mpz_tstbit(K.get_mpz_t(), n - 1 - j) ? 1 : 0;
    return out;
}

mpz_class bits_to_word(const Bits& bits) {
    mpz_class K = 0;
    for (std::uint64_t j = 0; j < bits.size(); ++j)
        if (bits[j]) mpz_setbit(K.get_mpz_t(), bits.size() - 1 - j);
    return K;
}

// Multiplicative order of 2 modulo odd q > 1.
std::uint64_t mult_order_2(unsigned long q) {
    std::uint64_t r = 1;
    unsigned long v = 2 % q;
    while (v != 1) {
        v = (v * 2) % q;
        ++r;
    }
    return r;
}

} // namespace

BinExp::BinExp(Bits preperiod, Bits period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
    for (auto b : pre_)
        if (b > 1) throw std::invalid_argument("BinExp: digit not in {0,1}");
    for (auto b : per_)
        if (b > 1) throw std::invalid_argument("BinExp: digit not in {0,1}");
    canonicalize();
}

void BinExp::canonicalize() {
    if (per_.empty()) per_ = {0};
    // primitive period: cut to the shortest word it is a power of
    std::uint64_t r = per_.size();
    for (std::uint64_t d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        bool repeats = true;
        for (std::uint64_t i = d; i < r && repeats; ++i)
            repeats = per_[i] == per_[i % d];
        if (repeats) {
            per_.resize(d);
            break;
        }
    }
    // shortest preperiod: absorb matching trailing digits into the rotation
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    }
}

BinExp BinExp::of_rational(const Rat& x, TailVariant variant) {
    require_unit_interval(x, "binexp_of_rational");
    const mpz_class& q = x.den();
    std::uint64_t s = mpz_scan1(q.get_mpz_t(), 0);   // 2-adic valuation
    mpz_class q_odd = q >> s;

    if (variant == TailVariant::HighTail) {
        if (q_odd != 1)
            throw std::domain_error("binexp_of_rational: no terminating expansion, "
                                    "HighTail undefined for " + x.str());
        if (x.num() == 0)
            throw std::domain_error("binexp_of_rational: 0 admits only the all-zeros expansion");
        // x = K/2^s, expansion 0.<bits of K-1>(1)
        mpz_class K = x.num();   // numerator; den = 2^s
        return BinExp(word_to_bits(K - 1, s), {1});
    }

    if (x == Rat(1))
        throw std::domain_error("binexp_of_rational: 1 admits only the all-ones expansion");
    // x * 2^s = p / q_odd; split into integer part K and periodic tail
    mpz_class K, rem;
    mpz_fdiv_qr(K.get_mpz_t(), rem.get_mpz_t(), x.num().get_mpz_t(), q_odd.get_mpz_t());
    Bits pre = word_to_bits(K, s);
    if (q_odd == 1) return BinExp(std::move(pre), {0});

    std::uint64_t r = mult_order_2(q_odd.get_ui());
    mpz_class M = (pow2(r) - 1) * rem;
    mpz_divexact(M.get_mpz_t(), M.get_mpz_t(), q_odd.get_mpz_t());
    return BinExp(std::move(pre), word_to_bits(M, r));
}

BinExp BinExp::parse(std::string_view s) {
    if (s.size() < 2 || s[0] != '0' || s[1] != '.')
        throw std::invalid_argument("BinExp: expected \"0.<pre>(<per>)\", got \"" +
                                    std::string(s) + "\"");
    Bits pre, per;
    std::size_t i = 2;
    while (i < s.size() && (s[i] == '0' || s[i] == '1'))
        pre.push_back(static_cast<std::uint8_t>(s[i++] - '0'));
    if (i < s.size()) {
        if (s[i] != '(' || s.back() != ')' || i + 1 >= s.size() - 1)
            throw std::invalid_argument("BinExp: malformed expansion \"" + std::string(s) + "\"");
        for (std::size_t j = i + 1; j + 1 < s.size(); ++j) {
            if (s[j] != '0' && s[j] != '1')
                throw std::invalid_argument("BinExp: bad digit in \"" + std::string(s) + "\"");
            per.push_back(static_cast<std::uint8_t>(s[j] - '0'));
        }
    }
    return BinExp(std::move(pre), std::move(per));
}

int BinExp::bit(std::uint64_t j) const {
    if (j == 0) throw std::out_of_range("BinExp::bit: digits are 1-based");
    if (j <= pre_.size()) return pre_[j - 1];
    return per_[(j - pre_.size() - 1) % per_.size()];
}

Bits BinExp::bits_upto(std::uint64_t n) const {
    Bits out(n);
    for (std::uint64_t j = 1; j <= n; ++j) out[j - 1] = static_cast<std::uint8_t>(bit(j));
    return out;
}

BinExp BinExp::suffix_from(std::uint64_t n) const {
    if (n < pre_.size())
        return BinExp(Bits(pre_.begin() + static_cast<std::ptrdiff_t>(n), pre_.end()), per_);
    std::uint64_t k = (n - pre_.size()) % per_.size();
    Bits rotated(per_.begin() + static_cast<std::ptrdiff_t>(k), per_.end());
    rotated.insert(rotated.end(), per_.begin(), per_.begin() + static_cast<std::ptrdiff_t>(k));
    return BinExp({}, std::move(rotated));
}

BinExp BinExp::complement() const {
    Bits pre = pre_, per = per_;
    for (auto& b : pre) b ^= 1;
    for (auto& b : per) b ^= 1;
    return BinExp(std::move(pre), std::move(per));
}

Rat BinExp::value() const {
    std::uint64_t s = pre_.size(), r = per_.size();
    mpz_class K = bits_to_word(pre_);
    mpz_class M = bits_to_word(per_);
    mpz_class full = pow2(r) - 1;
    return Rat(K * full + M, pow2(s) * full);
}

std::string BinExp::str() const {
    std::string out = "0.";
    for (auto b : pre_) out += static_cast<char>('0' + b);
    out += '(';
    for (auto b : per_) out += static_cast<char>('0' + b);
    out += ')';
    return out;
}

std::ostream& operator<<(std::ostream& os, const BinExp& b) {
    return os << b.str();
}

long long deficient_digit(const BinExp& b, std::uint64_t j) {
    if (j == 0) return 0;
    return digit_profile(b).D(j);
}

long long DigitProfile::D(std::uint64_t j) const {
    if (j == 0) return 0;
    std::uint64_t s = preperiod_size, r = period_size;
    if (j <= s + r) return prefix_D[j - 1];
    std::uint64_t idx = j - s - 1;
    std::uint64_t i = idx % r + 1;
    long long t = static_cast<long long>(idx / r);
    return prefix_D[s + i - 1] + t * drift;
}

DigitProfile digit_profile(const BinExp& b) {
    DigitProfile p;
    std::uint64_t s = b.preperiod_size(), r = b.period_size();
    p.preperiod_size = s;
    p.period_size = r;
    p.prefix_D.resize(s + r);
    long long d = 0;
    p.prefix_min = 0;
    for (std::uint64_t j = 1; j <= s + r; ++j) {
        d += b.bit(j) ? -1 : 1;
        p.prefix_D[j - 1] = d;
        if (j <= s) {
            p.prefix_min = std::min(p.prefix_min, d);
            if (j == s) p.end_of_prefix = d;
        } else {
            if (j == s + 1 || d < p.window_min) p.window_min = d;
            if (d == 0) p.window_zero_positions.push_back(j);
        }
    }
    p.drift = p.prefix_D[s + r - 1] - p.end_of_prefix;
    return p;
}

std::uint64_t BalanceSet::point(std::size_t k) const {
    if (k < finite_points.size()) return finite_points[k];
    if (!infinite())
        throw std::out_of_range("BalanceSet::point: index past a finite balance set");
    std::size_t idx = k - finite_points.size();
    std::size_t w = window_zeros.size();
    return window_zeros[idx % w] + static_cast<std::uint64_t>(idx / w) * period;
}

BalanceSet balance_set(const BinExp& b) {
    DigitProfile p = digit_profile(b);
    std::uint64_t s = p.preperiod_size, r = p.period_size;

    BalanceSet out;
    out.finite_points.push_back(0);
    for (std::uint64_t j = 1; j <= s; ++j)
        if (p.prefix_D[j - 1] == 0) out.finite_points.push_back(j);

    if (p.drift == 0 && !p.window_zero_positions.empty()) {
        out.kind = BalanceSet::Kind::EventuallyPeriodic;
        out.window_zeros = p.window_zero_positions;
        out.window_start = s;
        out.period = r;
        return out;
    }

    out.kind = BalanceSet::Kind::Finite;
    // with nonzero drift each window offset yields at most one zero, at
    // window index t = -D_{s+i}/drift
    std::vector<std::uint64_t> tail;
    for (std::uint64_t i = 1; i <= r; ++i) {
        long long base = p.prefix_D[s + i - 1];
        if (p.drift == 0) {
            // no window zeros at all in this branch
            continue;
        }
        if (base % p.drift != 0) continue;
        long long t = -base / p.drift;
        if (t >= 0) tail.push_back(s + static_cast<std::uint64_t>(t) * r + i);
    }
    std::sort(tail.begin(), tail.end());
    out.finite_points.insert(out.finite_points.end(), tail.begin(), tail.end());
    return out;
}

} // namespace takagi
