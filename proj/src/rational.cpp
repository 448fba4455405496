#include "supersym/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace supersym {

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto valid_integer = [](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            ++i;
        }
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n[0] == '+') {
        n.erase(0, 1);
    }
    mpz_class p(n, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    mpq_class value(p, q);
    return Rational(std::move(value));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other)
{
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator-=(const Rational& other)
{
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator*=(const Rational& other)
{
    mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator/=(const Rational& other)
{
    if (other.is_zero()) {
        throw std::domain_error("division by zero");
    }
    mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
    return *this;
}

Rational Rational::operator-() const
{
    Rational r(*this);
    mpq_neg(r.value_.get_mpq_t(), r.value_.get_mpq_t());
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

void Rational::add_product(const Rational& a, const Rational& b)
{
    // Integer operands are the common case in polynomial products.
    if (a.is_integer() && b.is_integer() && is_integer()) {
        mpz_addmul(value_.get_num_mpz_t(), a.value_.get_num_mpz_t(), b.value_.get_num_mpz_t());
        return;
    }
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

} // namespace supersym
