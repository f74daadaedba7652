#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vircurv/complex_geometry.hpp"
#include "vircurv/exact.hpp"

namespace vircurv {

/// A complexified field in the basis L_k = f_k + i g_k, L_{-k} = f_k - i g_k
/// (k >= 1). Index 0 holds the coefficient of L_0 = f_0, the rotation
/// direction; brackets such as [L_{-n}, L_n] = 2in L_0 land there.
class ComplexField {
public:
    using Table = std::map<int, Complex>;

    ComplexField() = default;
    static ComplexField basis(int k, const Complex& coeff = Complex(Rational(1)));

    const Table& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Complex coeff(int k) const;
    bool has_h_component() const { return terms_.contains(0); }
    int max_abs_mode() const;

    void add_term(int k, const Complex& value);

    ComplexField operator-() const;
    ComplexField& operator+=(const ComplexField& rhs);
    ComplexField& operator-=(const ComplexField& rhs);
    ComplexField& operator*=(const Complex& scale);

    friend ComplexField operator+(ComplexField a, const ComplexField& b) { return a += b; }
    friend ComplexField operator-(ComplexField a, const ComplexField& b) { return a -= b; }
    friend ComplexField operator*(const Complex& s, ComplexField x) { return x *= s; }
    friend bool operator==(const ComplexField&, const ComplexField&) = default;

    // "-268/27*L(-1) + (1/2 - i)*L(3)"; "0" when empty.
    std::string str() const;

private:
    Table terms_;
};

inline ComplexField L(int k) { return ComplexField::basis(k); }

ComplexField project_m(const ComplexField& x);  // drops L_0
ComplexField project_h(const ComplexField& x);  // keeps only L_0

/// re + i im written in the L basis. Both parts must be mean-zero.
ComplexField to_complex(const TrigField& re, const TrigField& im);

/// Inverse of to_complex; an L_0 entry becomes the constant terms.
std::pair<TrigField, TrigField> from_complex(const ComplexField& z);

/// Complex-bilinear bracket from [L_a, L_b] = i(b - a) L_{a+b}.
ComplexField complex_bracket(const ComplexField& a, const ComplexField& b);

/// How nabla~ is evaluated on complexified arguments.
enum class TildeRoute {
    lemma,      // closed L-basis table, extended bilinearly
    realified,  // complexification of the real nabla - Q
};

/// nabla~_a b on complexified mean-zero fields (L_0 entries raise DomainError).
ComplexField nabla_tilde_complex(const CentralParams& params, const ComplexField& a, const ComplexField& b,
                                 TildeRoute route = TildeRoute::lemma);

/// R~_{xy} z = nabla~_x nabla~_y z - nabla~_y nabla~_x z - nabla~_{[x,y]_m} z - [[x,y]_h, z].
ComplexField curvature(const CentralParams& params, const ComplexField& x, const ComplexField& y,
                       const ComplexField& z, TildeRoute route = TildeRoute::lemma);

/// Coefficient of L_{-m} in R~_{L_{-m}, L_n} L_{-n}, from the case formulas:
///   m < n:  -2(m+2n) lambda_{m,n} - (2n-m)(m+n)
///   m > n:  -2(m+2n) lambda_{m,n} + 2(m+n) lambda_{m-n,n}
///   m = n:  -6n lambda_{n,n} - 2n^2
Rational ricci_coefficient(const CentralParams& params, long m, long n);

/// The same coefficient read off a full curvature evaluation.
Complex ricci_coefficient_from_curvature(const CentralParams& params, long m, long n,
                                         TildeRoute route = TildeRoute::lemma);

/// Coefficient of L_m in R~_{L_m, L_n} L_{-n}; the trace picks these up too.
Complex ricci_plus_coefficient_from_curvature(const CentralParams& params, long m, long n,
                                              TildeRoute route = TildeRoute::lemma);

struct RicciPartial {
    Rational partial;   // (1/theta_n) sum_{m=1}^{M} ricci_coefficient(m, n)
    Rational boundary;  // (1/theta_n) sum_{m=M-n+1}^{M} 2(m+2n) lambda_{m,n}
};

/// Truncated trace through m = max_m (>= n) and the telescoping boundary term
/// it still carries. partial + boundary is the regularized value for every
/// cutoff.
RicciPartial ricci_partial(const CentralParams& params, long n, long max_m);

/// -(1/theta_n) sum_{m=1}^{n} (m+n)(2n-m): the trace with the boundary term
/// telescoped away.
Rational ricci_regularized(const CentralParams& params, long n);

/// -(13n^3 - n) / (6 theta_n).
Rational ricci_closed_form(const CentralParams& params, long n);

struct RicciCutoff {
    long max_m = 0;
    Rational partial_sum;
    Rational boundary_term;
};

struct RicciReport {
    CentralParams params;
    long n = 0;
    Rational theta_n;
    Rational regularized;
    Rational closed_form;
    std::vector<RicciCutoff> partial;

    bool agrees() const { return regularized == closed_form; }
};

/// Regularized and closed-form Ricci values plus the partial sums at each
/// requested cutoff (cutoffs below n raise DomainError).
RicciReport ricci_report(const CentralParams& params, long n, const std::vector<long>& cutoffs);

} // namespace vircurv
