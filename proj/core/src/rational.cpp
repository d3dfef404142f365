#include "takagi/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace takagi {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    mpq_set_num(v_.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(v_.get_mpq_t(), den.get_mpz_t());
    v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::from_string(std::string_view s) {
    auto r = try_parse(s);
    if (!r) throw std::invalid_argument("Rat: cannot parse \"" + std::string(s) + "\"");
    return *r;
}

std::optional<Rat> Rat::try_parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    // validate by hand: [-]digits[/digits], no whitespace
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t num_start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_start) return std::nullopt;
    std::string_view den;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        den = s.substr(i + 1);
        if (den.empty()) return std::nullopt;
        for (char c : den)
            if (c < '0' || c > '9') return std::nullopt;
    }
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0) return std::nullopt;
    if (v.get_den() == 0) return std::nullopt;
    v.canonicalize();
    return Rat(v);
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class n = v_.get_num() * scale;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), v_.get_den().get_mpz_t());
    if (2 * r >= v_.get_den()) q += 1;   // round half up
    bool neg = q < 0;
    if (neg) q = -q;
    std::string ds = q.get_str();
    if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out = ds.substr(0, ds.size() - digits);
    if (digits > 0) out += "." + ds.substr(ds.size() - digits);
    return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Rat abs(const Rat& r) {
    return r < Rat(0) ? -r : r;
}

mpz_class pow2(unsigned long k) {
    mpz_class z;
    mpz_setbit(z.get_mpz_t(), k);
    return z;
}

Rat pow2_rat(long k) {
    if (k >= 0) return Rat(pow2(static_cast<unsigned long>(k)), 1);
    return Rat(1, pow2(static_cast<unsigned long>(-k)));
}

void require_unit_interval(const Rat& x, const char* where) {
    if (!x.in_unit_interval())
        throw std::domain_error(std::string(where) + ": argument " + x.str() +
                                " outside [0,1]");
}

} // namespace takagi
