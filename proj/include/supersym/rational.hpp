#ifndef SUPERSYM_RATIONAL_HPP
#define SUPERSYM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supersym {

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(value) {}
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    // Accepts "n" or "p/q" with an optional leading sign.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }
    mpq_class& raw() { return value_; }

    // "p/q", with "/q" omitted when q == 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Multiply-accumulate without temporaries: *this += a * b.
    void add_product(const Rational& a, const Rational& b);

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(unsigned n);

} // namespace supersym

#endif
