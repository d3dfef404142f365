#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace takagi {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class plus the
/// `p/q` text form used by every tool in this project.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                      // NOLINT: implicit by design
    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& q);

    /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument.
    static Rat from_string(std::string_view s);
    static std::optional<Rat> try_parse(std::string_view s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_integer() const { return v_.get_den() == 1; }
    bool in_unit_interval() const { return sgn(v_) >= 0 && v_ <= 1; }

    /// "p/q", with "/1" omitted for integers.
    std::string str() const;
    /// Rounded decimal rendering with the given number of fractional digits.
    std::string decimal(unsigned digits) const;
    double to_double() const { return v_.get_d(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);

/// 2^k as an exact integer.
mpz_class pow2(unsigned long k);
/// 2^k as a Rat; k may be negative.
Rat pow2_rat(long k);

/// Throws std::domain_error unless 0 <= x <= 1.
void require_unit_interval(const Rat& x, const char* where);

} // namespace takagi
