#pragma once

#include <map>
#include <string>
#include <vector>

#include "vircurv/exact.hpp"

namespace vircurv {

/// Coefficients of one Fourier mode: cos_coeff * cos(kt) + sin_coeff * sin(kt).
struct ModeCoeffs {
    Rational cos_coeff;
    Rational sin_coeff;

    bool is_zero() const noexcept { return cos_coeff.is_zero() && sin_coeff.is_zero(); }
    friend bool operator==(const ModeCoeffs&, const ModeCoeffs&) = default;
};

enum class BasisKind { cos, sin };

/// One element f_k (cos) or g_k (sin) of the natural basis.
struct Basis {
    BasisKind kind = BasisKind::cos;
    int mode = 0;

    friend bool operator==(const Basis&, const Basis&) = default;
    friend auto operator<=>(const Basis&, const Basis&) = default;

    std::string str() const;  // "f_3" / "g_3"
};

inline Basis f(int k) { return {BasisKind::cos, k}; }
inline Basis g(int k) { return {BasisKind::sin, k}; }

/// A trigonometric-polynomial vector field f(t) d/dt on the circle,
///
///     f(t) = sum_k (a_k cos kt + b_k sin kt),
///
/// stored sparsely by mode. Zero modes are never stored and the mode-0 sine
/// coefficient is structurally zero, so equal fields compare equal.
class TrigField {
public:
    using Table = std::map<int, ModeCoeffs>;

    TrigField() = default;

    static TrigField basis(Basis e);
    static TrigField constant(const Rational& value);

    const Table& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int max_mode() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    Rational cos_coeff(int k) const;
    Rational sin_coeff(int k) const;
    Rational coeff(Basis e) const;

    // Adds `value` to the coefficient of `e`. Throws DomainError for g_0 or a
    // negative mode.
    void add_term(Basis e, const Rational& value);

    bool has_constant_term() const { return terms_.contains(0); }

    TrigField operator-() const;
    TrigField& operator+=(const TrigField& rhs);
    TrigField& operator-=(const TrigField& rhs);
    TrigField& operator*=(const Rational& scale);

    friend TrigField operator+(TrigField a, const TrigField& b) { return a += b; }
    friend TrigField operator-(TrigField a, const TrigField& b) { return a -= b; }
    friend TrigField operator*(const Rational& s, TrigField x) { return x *= s; }
    friend TrigField operator*(TrigField x, const Rational& s) { return x *= s; }
    friend bool operator==(const TrigField&, const TrigField&) = default;

    // Basis elements with nonzero coefficients, in canonical order.
    std::vector<std::pair<Basis, Rational>> expand() const;

private:
    void add_raw(int k, const Rational& cos_part, const Rational& sin_part);

    Table terms_;
};

TrigField basis_f(int k);  // DomainError for k < 0
TrigField basis_g(int k);  // DomainError for k < 1

/// [x, y] = x y' - x' y, expanded by product-to-sum. Bilinear and
/// antisymmetric; the highest output mode is max(x) + max(y).
TrigField bracket(const TrigField& x, const TrigField& y);

/// d^order/dt^order of the coefficient function.
TrigField derivative(const TrigField& x, unsigned order = 1);

/// J: a_k f_k + b_k g_k  ->  b_k f_k - a_k g_k. Only defined on mean-zero
/// fields; a constant term raises DomainError.
TrigField apply_J(const TrigField& x);

TrigField project_m(const TrigField& x);  // drops the constant mode
TrigField project_h(const TrigField& x);  // keeps only the constant mode

/// (1/2pi) * integral over [0, 2pi] of x(t) y(t), by orthogonality.
Rational integral_pair(const TrigField& x, const TrigField& y);

/// Throws DomainError naming `what` if x has a constant term.
void require_mean_zero(const TrigField& x, const char* what);

} // namespace vircurv
