#include "hurwitz/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational::Rational(const Integer& numerator, const Integer& denominator) : value_(numerator, denominator) {
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw ParseError("not a rational: \"" + std::string(text) + "\"");
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (den == 0)
        throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    if (negative)
        num = -num;
    return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x) {
    Rational r;
    r.value_ = -x.value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational divide(const Rational& x, const Integer& k) {
    if (k == 0)
        throw std::domain_error("division by zero integer");
    return x / Rational(k);
}

} // namespace hurwitz
