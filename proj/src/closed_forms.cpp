#include "vircurv/closed_forms.hpp"

#include <cstdlib>

#include "vircurv/errors.hpp"

namespace vircurv::tables {

namespace {

bool is_cos(Basis e) { return e.kind == BasisKind::cos; }

TrigField term(Basis e, const Rational& value) {
    TrigField x;
    x.add_term(e, value);
    return x;
}

Rational sgn(long v) { return Rational(v > 0 ? 1 : (v < 0 ? -1 : 0)); }

void require_positive_modes(Basis a, Basis b, const char* what) {
    if (a.mode < 1 || b.mode < 1) throw DomainError(std::string(what) + ": modes must be >= 1");
}

} // namespace

TrigField bracket(Basis a, Basis b) {
    if (a == b) return {};
    const long m = a.mode;
    const long n = b.mode;
    const int sum = static_cast<int>(m + n);
    const int diff = static_cast<int>(std::abs(m - n));
    const Rational half(1, 2);
    if (is_cos(a) && is_cos(b))
        return term(g(sum), half * Rational(m - n)) + term(g(diff), half * Rational(m + n) * sgn(m - n));
    if (!is_cos(a) && !is_cos(b))
        return term(g(sum), half * Rational(n - m)) + term(g(diff), half * Rational(m + n) * sgn(m - n));
    if (is_cos(a)) return term(f(sum), half * Rational(n - m)) + term(f(diff), half * Rational(m + n));
    return -bracket(b, a);
}

TrigField nabla(const CentralParams& params, Basis a, Basis b) {
    require_positive_modes(a, b, "tables::nabla");
    const long m = a.mode;
    const long n = b.mode;
    const Rational mid(m + n, 2);
    const int sum = static_cast<int>(m + n);
    const int diff = static_cast<int>(std::abs(m - n));
    const Rational l = lambda_coeff(params, m, n);
    if (is_cos(a) && is_cos(b)) {
        if (n < m) return term(g(sum), l) + term(g(diff), mid);
        return term(g(sum), l);
    }
    if (is_cos(a)) {
        if (n < m) return term(f(sum), -l) + term(f(diff), mid);
        return term(f(sum), -l);
    }
    if (is_cos(b)) {
        // listed as nabla_{g_n} f_m with n = mode(a), m = mode(b)
        if (m > n) return term(f(sum), -l) + term(f(diff), -mid);
        return term(f(sum), -l);
    }
    if (n < m) return term(g(diff), mid) + term(g(sum), -l);
    return term(g(sum), -l);
}

TrigField nabla_J(Basis a, Basis b) {
    require_positive_modes(a, b, "tables::nabla_J");
    const long m = a.mode;
    const long n = b.mode;
    if (n >= m) return {};
    const int diff = static_cast<int>(m - n);
    const Rational s(m + n);
    if (is_cos(a) && is_cos(b)) return term(f(diff), -s);
    if (is_cos(a)) return term(g(diff), s);
    if (is_cos(b)) return term(g(diff), -s);
    return term(f(diff), -s);
}

TrigField q_tensor(Basis a, Basis b) {
    require_positive_modes(a, b, "tables::q_tensor");
    const long m = a.mode;
    const long n = b.mode;
    if (m == n) return {};
    const int diff = static_cast<int>(std::abs(n - m));
    const Rational mid(m + n, 2);
    if (is_cos(a) && is_cos(b)) return term(g(diff), mid);
    if (is_cos(a)) return term(f(diff), n > m ? -mid : mid);
    if (is_cos(b)) return term(f(diff), n > m ? mid : -mid);
    return term(g(diff), mid);
}

TrigField nabla_tilde(const CentralParams& params, Basis a, Basis b) {
    require_positive_modes(a, b, "tables::nabla_tilde");
    const long m = a.mode;
    const long n = b.mode;
    const Rational mid(m + n, 2);
    const int sum = static_cast<int>(m + n);
    const int diff = static_cast<int>(std::abs(m - n));
    const Rational l = lambda_coeff(params, m, n);
    if (is_cos(a) && is_cos(b)) {
        if (n > m) return term(g(sum), l) + term(g(diff), -mid);
        return term(g(sum), l);
    }
    if (is_cos(a)) {
        if (n > m) return term(f(diff), mid) + term(f(sum), -l);
        return term(f(sum), -l);
    }
    if (is_cos(b)) {
        // listed as nabla~_{g_n} f_m with n = mode(a), m = mode(b)
        if (m < n) return term(f(sum), -l) + term(f(diff), -mid);
        return term(f(sum), -l);
    }
    if (n > m) return term(g(sum), -l) + term(g(diff), -mid);
    return term(g(sum), -l);
}

ComplexField l_bracket(int a, int b) {
    if (a == 0 || b == 0) throw DomainError("tables::l_bracket: indices must be nonzero");
    const auto scaled = [](int k, long im) { return ComplexField::basis(k, Complex(Rational(0), Rational(im))); };
    if (a > 0 && b > 0) return scaled(a + b, b - a);
    if (a < 0 && b > 0) return scaled(b + a, -a + b);
    if (a > 0) return scaled(a + b, -(a - b));
    return scaled(a + b, -a + b);
}

} // namespace vircurv::tables
