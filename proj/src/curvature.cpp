#include "vircurv/curvature.hpp"

#include <algorithm>
#include <cstdlib>

#include "vircurv/errors.hpp"

namespace vircurv {

ComplexField ComplexField::basis(int k, const Complex& coeff) {
    ComplexField z;
    z.add_term(k, coeff);
    return z;
}

Complex ComplexField::coeff(int k) const {
    const auto it = terms_.find(k);
    return it == terms_.end() ? Complex() : it->second;
}

int ComplexField::max_abs_mode() const {
    int out = 0;
    for (const auto& [k, v] : terms_) out = std::max(out, std::abs(k));
    return out;
}

void ComplexField::add_term(int k, const Complex& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k);
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
}

ComplexField ComplexField::operator-() const {
    ComplexField out = *this;
    for (auto& [k, v] : out.terms_) v = -v;
    return out;
}

ComplexField& ComplexField::operator+=(const ComplexField& rhs) {
    for (const auto& [k, v] : rhs.terms_) add_term(k, v);
    return *this;
}

ComplexField& ComplexField::operator-=(const ComplexField& rhs) {
    for (const auto& [k, v] : rhs.terms_) add_term(k, -v);
    return *this;
}

ComplexField& ComplexField::operator*=(const Complex& scale) {
    if (scale.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= scale;
    return *this;
}

std::string ComplexField::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : terms_) {
        if (!out.empty()) out += " + ";
        const std::string basis = "L(" + std::to_string(k) + ")";
        if (v == Complex(Rational(1)))
            out += basis;
        else
            out += v.str() + "*" + basis;
    }
    return out;
}

ComplexField project_m(const ComplexField& x) {
    ComplexField out = x;
    if (x.has_h_component()) out.add_term(0, -x.coeff(0));
    return out;
}

ComplexField project_h(const ComplexField& x) { return ComplexField::basis(0, x.coeff(0)); }

namespace {

// to_complex without the mean-zero requirement; f_0 maps to L_0.
ComplexField complexify(const TrigField& re, const TrigField& im) {
    ComplexField out;
    const Complex half(Rational(1, 2));
    const Complex i = Complex::i();
    for (const auto& [k, c] : re.terms()) {
        const Complex a(c.cos_coeff);
        const Complex b(c.sin_coeff);
        if (k == 0) {
            out.add_term(0, a);
            continue;
        }
        // f_k = (L_k + L_{-k})/2, g_k = (L_k - L_{-k})/(2i)
        out.add_term(k, half * (a - i * b));
        out.add_term(-k, half * (a + i * b));
    }
    for (const auto& [k, c] : im.terms()) {
        const Complex a = i * Complex(c.cos_coeff);
        const Complex b = i * Complex(c.sin_coeff);
        if (k == 0) {
            out.add_term(0, a);
            continue;
        }
        out.add_term(k, half * (a - i * b));
        out.add_term(-k, half * (a + i * b));
    }
    return out;
}

void require_no_h(const ComplexField& x, const char* what) {
    if (x.has_h_component())
        throw DomainError(std::string(what) + ": argument has an L_0 (rotation) component; expected a mean-zero field");
}

// nabla~_{L_a} L_b from the L-basis table; a, b nonzero.
ComplexField tilde_on_basis(const CentralParams& params, int a, int b) {
    if (a > 0 && b > 0)
        return ComplexField::basis(a + b, Complex(Rational(0), Rational(-2) * lambda_coeff(params, a, b)));
    if (a < 0 && b < 0)
        return ComplexField::basis(a + b, Complex(Rational(0), Rational(2) * lambda_coeff(params, -a, -b)));
    if (a < 0) {
        const int m = -a;
        const int n = b;
        if (n > m) return ComplexField::basis(n - m, Complex(Rational(0), Rational(m + n)));
        return {};
    }
    const int m = a;
    const int n = -b;
    if (n > m) return ComplexField::basis(m - n, Complex(Rational(0), Rational(-(m + n))));
    return {};
}

ComplexField tilde_lemma(const CentralParams& params, const ComplexField& a, const ComplexField& b) {
    ComplexField out;
    for (const auto& [j, wa] : a.terms())
        for (const auto& [k, wb] : b.terms()) out += (wa * wb) * tilde_on_basis(params, j, k);
    return out;
}

ComplexField tilde_realified(const CentralParams& params, const ComplexField& a, const ComplexField& b) {
    const auto [ar, ai] = from_complex(a);
    const auto [br, bi] = from_complex(b);
    const auto nt = [&](const TrigField& x, const TrigField& y) {
        if (x.is_zero() || y.is_zero()) return TrigField();
        return nabla_tilde(params, x, y);
    };
    return to_complex(nt(ar, br) - nt(ai, bi), nt(ar, bi) + nt(ai, br));
}

} // namespace

ComplexField to_complex(const TrigField& re, const TrigField& im) {
    require_mean_zero(re, "to_complex");
    require_mean_zero(im, "to_complex");
    return complexify(re, im);
}

std::pair<TrigField, TrigField> from_complex(const ComplexField& z) {
    TrigField re;
    TrigField im;
    for (const auto& [k, w] : z.terms()) {
        const Rational& p = w.re;
        const Rational& q = w.im;
        const int mode = std::abs(k);
        if (k == 0) {
            re.add_term(f(0), p);
            im.add_term(f(0), q);
        } else if (k > 0) {
            // (p + iq)(f + ig) = (p f - q g) + i(q f + p g)
            re.add_term(f(mode), p);
            re.add_term(g(mode), -q);
            im.add_term(f(mode), q);
            im.add_term(g(mode), p);
        } else {
            // (p + iq)(f - ig) = (p f + q g) + i(q f - p g)
            re.add_term(f(mode), p);
            re.add_term(g(mode), q);
            im.add_term(f(mode), q);
            im.add_term(g(mode), -p);
        }
    }
    return {std::move(re), std::move(im)};
}

ComplexField complex_bracket(const ComplexField& a, const ComplexField& b) {
    ComplexField out;
    for (const auto& [j, wa] : a.terms())
        for (const auto& [k, wb] : b.terms())
            out.add_term(j + k, wa * wb * Complex(Rational(0), Rational(k - j)));
    return out;
}

ComplexField nabla_tilde_complex(const CentralParams& params, const ComplexField& a, const ComplexField& b,
                                 TildeRoute route) {
    require_no_h(a, "nabla_tilde_complex");
    require_no_h(b, "nabla_tilde_complex");
    params.require_positive_up_to(a.max_abs_mode() + b.max_abs_mode());
    return route == TildeRoute::lemma ? tilde_lemma(params, a, b) : tilde_realified(params, a, b);
}

ComplexField curvature(const CentralParams& params, const ComplexField& x, const ComplexField& y,
                       const ComplexField& z, TildeRoute route) {
    const auto nt = [&](const ComplexField& u, const ComplexField& v) {
        return nabla_tilde_complex(params, u, v, route);
    };
    const ComplexField xy = complex_bracket(x, y);
    ComplexField out = nt(x, nt(y, z));
    out -= nt(y, nt(x, z));
    out -= nt(project_m(xy), z);
    out -= complex_bracket(project_h(xy), z);
    return out;
}

Rational ricci_coefficient(const CentralParams& params, long m, long n) {
    if (m < 1 || n < 1) throw DomainError("ricci_coefficient: m and n must be >= 1");
    params.require_positive_up_to(m + n);
    const Rational base = -Rational(2 * (m + 2 * n)) * lambda_coeff(params, m, n);
    if (m < n) return base - Rational((2 * n - m) * (m + n));
    if (m > n) return base + Rational(2 * (m + n)) * lambda_coeff(params, m - n, n);
    return -Rational(6 * n) * lambda_coeff(params, n, n) - Rational(2 * n * n);
}

Complex ricci_coefficient_from_curvature(const CentralParams& params, long m, long n, TildeRoute route) {
    if (m < 1 || n < 1) throw DomainError("ricci_coefficient_from_curvature: m and n must be >= 1");
    const int mi = static_cast<int>(m);
    const int ni = static_cast<int>(n);
    return curvature(params, L(-mi), L(ni), L(-ni), route).coeff(-mi);
}

Complex ricci_plus_coefficient_from_curvature(const CentralParams& params, long m, long n, TildeRoute route) {
    if (m < 1 || n < 1) throw DomainError("ricci_plus_coefficient_from_curvature: m and n must be >= 1");
    const int mi = static_cast<int>(m);
    const int ni = static_cast<int>(n);
    return curvature(params, L(mi), L(ni), L(-ni), route).coeff(mi);
}

namespace {

void require_ricci_index(const CentralParams& params, long n) {
    if (n < 1) throw DomainError("Ricci index n must be >= 1 (got " + std::to_string(n) + ")");
    params.require_positive_up_to(n);
}

} // namespace

RicciPartial ricci_partial(const CentralParams& params, long n, long max_m) {
    require_ricci_index(params, n);
    if (max_m < n) throw DomainError("ricci_partial: cutoff M must be >= n");
    params.require_positive_up_to(max_m + n);
    const Rational theta_n = params.theta(n);

    Rational partial;
    for (long m = 1; m <= max_m; ++m) partial += ricci_coefficient(params, m, n);
    Rational boundary;
    for (long m = max_m - n + 1; m <= max_m; ++m) boundary += Rational(2 * (m + 2 * n)) * lambda_coeff(params, m, n);
    return {partial / theta_n, boundary / theta_n};
}

Rational ricci_regularized(const CentralParams& params, long n) {
    require_ricci_index(params, n);
    Rational sum;
    for (long m = 1; m <= n; ++m) sum += Rational((m + n) * (2 * n - m));
    return -sum / params.theta(n);
}

Rational ricci_closed_form(const CentralParams& params, long n) {
    require_ricci_index(params, n);
    const Rational nn(n);
    return -(Rational(13) * nn * nn * nn - nn) / (Rational(6) * params.theta(n));
}

RicciReport ricci_report(const CentralParams& params, long n, const std::vector<long>& cutoffs) {
    RicciReport report{params, n, Rational(), ricci_regularized(params, n), ricci_closed_form(params, n), {}};
    report.theta_n = params.theta(n);
    for (const long cutoff : cutoffs) {
        const RicciPartial p = ricci_partial(params, n, cutoff);
        report.partial.push_back({cutoff, p.partial, p.boundary});
    }
    return report;
}

} // namespace vircurv
