#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vircurv {

/// Arbitrary-precision rational in lowest terms with a positive denominator.
///
/// Every constructor canonicalizes, so two equal values always have identical
/// numerator and denominator and `==` is structural. Division by zero throws
/// DomainError; there is no NaN or infinity.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;

    // Approximate value for display only; never feeds back into computation.
    double approx() const { return value_.get_d(); }

private:
    mpq_class value_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& base, unsigned exponent);

/// Parses `[+-]?digits("/"digits)?`. Malformed text raises ParseError with the
/// offending position; a zero denominator raises DomainError.
Rational parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Gaussian rational re + im*i.
struct Complex {
    Rational re;
    Rational im;

    Complex() = default;
    Complex(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
    Complex(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    static Complex i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
    Complex conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator/=(const Complex& rhs);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) = default;

    // "3", "-1/2*i", "(1/2 - 1/3*i)".
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Complex& z);

} // namespace vircurv
