#include "vircurv/exact.hpp"

#include <ostream>
#include <utility>

#include "vircurv/errors.hpp"

namespace vircurv {

namespace {

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

} // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw DomainError("zero denominator");
    value_.canonicalize();
}

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
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::str() const { return value_.get_str(10); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

Rational parse_scalar(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == num_begin) throw ParseError(pos, "expected digit");
    mpz_class numerator(std::string(text.substr(num_begin, pos - num_begin)), 10);
    mpz_class denominator(1);
    if (pos < text.size()) {
        if (text[pos] != '/') throw ParseError(pos, "expected '/' or end of input");
        ++pos;
        const std::size_t den_begin = pos;
        while (pos < text.size() && is_digit(text[pos])) ++pos;
        if (pos == den_begin) throw ParseError(pos, "expected digit");
        if (pos != text.size()) throw ParseError(pos, "expected digit or end of input");
        denominator = mpz_class(std::string(text.substr(den_begin, pos - den_begin)), 10);
        if (denominator == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) numerator = -numerator;
    return Rational(numerator, denominator);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Complex& Complex::operator+=(const Complex& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
    Rational r = re * rhs.re - im * rhs.im;
    Rational i = re * rhs.im + im * rhs.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
    const Rational d = rhs.norm2();
    if (d.is_zero()) throw DomainError("division by zero");
    *this *= rhs.conj();
    re /= d;
    im /= d;
    return *this;
}

std::string Complex::str() const {
    if (im.is_zero()) return re.str();
    const std::string imag = im == Rational(1)    ? "i"
                             : im == Rational(-1) ? "-i"
                                                  : im.str() + "*i";
    if (re.is_zero()) return imag;
    const std::string abs_imag = im.sign() < 0 ? imag.substr(1) : imag;
    return "(" + re.str() + (im.sign() < 0 ? " - " : " + ") + abs_imag + ")";
}

std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(); }

} // namespace vircurv
