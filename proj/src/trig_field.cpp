#include "vircurv/trig_field.hpp"

#include <utility>

#include "vircurv/errors.hpp"

namespace vircurv {

std::string Basis::str() const {
    return std::string(kind == BasisKind::cos ? "f_" : "g_") + std::to_string(mode);
}

TrigField TrigField::basis(Basis e) {
    TrigField x;
    x.add_term(e, Rational(1));
    return x;
}

TrigField TrigField::constant(const Rational& value) {
    TrigField x;
    x.add_raw(0, value, Rational(0));
    return x;
}

Rational TrigField::cos_coeff(int k) const {
    const auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second.cos_coeff;
}

Rational TrigField::sin_coeff(int k) const {
    const auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second.sin_coeff;
}

Rational TrigField::coeff(Basis e) const {
    return e.kind == BasisKind::cos ? cos_coeff(e.mode) : sin_coeff(e.mode);
}

void TrigField::add_term(Basis e, const Rational& value) {
    if (e.mode < 0) throw DomainError("negative mode " + std::to_string(e.mode));
    if (e.kind == BasisKind::sin && e.mode == 0) throw DomainError("g_0 = sin(0t) is not a basis element");
    if (e.kind == BasisKind::cos)
        add_raw(e.mode, value, Rational(0));
    else
        add_raw(e.mode, Rational(0), value);
}

void TrigField::add_raw(int k, const Rational& cos_part, const Rational& sin_part) {
    if (cos_part.is_zero() && sin_part.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k);
    it->second.cos_coeff += cos_part;
    if (k != 0) it->second.sin_coeff += sin_part;
    if (it->second.is_zero()) terms_.erase(it);
}

TrigField TrigField::operator-() const {
    TrigField out = *this;
    for (auto& [k, c] : out.terms_) {
        c.cos_coeff = -c.cos_coeff;
        c.sin_coeff = -c.sin_coeff;
    }
    return out;
}

TrigField& TrigField::operator+=(const TrigField& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_raw(k, c.cos_coeff, c.sin_coeff);
    return *this;
}

TrigField& TrigField::operator-=(const TrigField& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_raw(k, -c.cos_coeff, -c.sin_coeff);
    return *this;
}

TrigField& TrigField::operator*=(const Rational& scale) {
    if (scale.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) {
        c.cos_coeff *= scale;
        c.sin_coeff *= scale;
    }
    return *this;
}

std::vector<std::pair<Basis, Rational>> TrigField::expand() const {
    std::vector<std::pair<Basis, Rational>> out;
    for (const auto& [k, c] : terms_) {
        if (!c.cos_coeff.is_zero()) out.emplace_back(f(k), c.cos_coeff);
        if (!c.sin_coeff.is_zero()) out.emplace_back(g(k), c.sin_coeff);
    }
    return out;
}

TrigField basis_f(int k) {
    if (k < 0) throw DomainError("basis_f: mode must be >= 0");
    return TrigField::basis(f(k));
}

TrigField basis_g(int k) {
    if (k < 1) throw DomainError("basis_g: mode must be >= 1 (sin 0t vanishes)");
    return TrigField::basis(g(k));
}

namespace {

// Accumulates c*cos(kt) + s*sin(kt) for a possibly negative k.
void put(TrigField& out, int k, const Rational& cos_part, Rational sin_part) {
    if (k < 0) {
        k = -k;
        sin_part = -sin_part;
    }
    if (k == 0) sin_part = Rational(0);
    if (!cos_part.is_zero()) out.add_term(f(k), cos_part);
    if (!sin_part.is_zero()) out.add_term(g(k), sin_part);
}

} // namespace

TrigField bracket(const TrigField& x, const TrigField& y) {
    TrigField out;
    const Rational half(1, 2);
    for (const auto& [m, p] : x.terms()) {
        const Rational& a = p.cos_coeff;
        const Rational& b = p.sin_coeff;
        for (const auto& [n, q] : y.terms()) {
            const Rational& c = q.cos_coeff;
            const Rational& d = q.sin_coeff;
            // x y' - x' y grouped by the four products of cos/sin at modes m, n.
            const Rational cc = a * d * n - b * c * m;
            const Rational cs = -(a * c * n) - b * d * m;
            const Rational sc = b * d * n + a * c * m;
            const Rational ss = a * d * m - b * c * n;
            // cos m cos n = (cos(m+n) + cos(m-n)) / 2
            // cos m sin n = (sin(m+n) - sin(m-n)) / 2
            // sin m cos n = (sin(m+n) + sin(m-n)) / 2
            // sin m sin n = (cos(m-n) - cos(m+n)) / 2
            put(out, m + n, half * (cc - ss), half * (cs + sc));
            put(out, m - n, half * (cc + ss), half * (sc - cs));
        }
    }
    return out;
}

TrigField derivative(const TrigField& x, unsigned order) {
    TrigField cur = x;
    for (unsigned i = 0; i < order; ++i) {
        TrigField next;
        for (const auto& [k, c] : cur.terms()) {
            if (k == 0) continue;
            // (a cos kt + b sin kt)' = k b cos kt - k a sin kt
            next.add_term(f(k), c.sin_coeff * k);
            next.add_term(g(k), -(c.cos_coeff * k));
        }
        cur = std::move(next);
    }
    return cur;
}

void require_mean_zero(const TrigField& x, const char* what) {
    if (x.has_constant_term())
        throw DomainError(std::string(what) + ": argument has a constant (f_0) component; expected a mean-zero field");
}

TrigField apply_J(const TrigField& x) {
    require_mean_zero(x, "apply_J");
    TrigField out;
    for (const auto& [k, c] : x.terms()) {
        out.add_term(f(k), c.sin_coeff);
        out.add_term(g(k), -c.cos_coeff);
    }
    return out;
}

TrigField project_m(const TrigField& x) {
    TrigField out = x;
    if (x.has_constant_term()) out -= TrigField::constant(x.cos_coeff(0));
    return out;
}

TrigField project_h(const TrigField& x) { return TrigField::constant(x.cos_coeff(0)); }

Rational integral_pair(const TrigField& x, const TrigField& y) {
    Rational sum;
    Rational half_sum;
    const auto& yt = y.terms();
    for (const auto& [k, c] : x.terms()) {
        const auto it = yt.find(k);
        if (it == yt.end()) continue;
        if (k == 0)
            sum += c.cos_coeff * it->second.cos_coeff;
        else
            half_sum += c.cos_coeff * it->second.cos_coeff + c.sin_coeff * it->second.sin_coeff;
    }
    return sum + half_sum * Rational(1, 2);
}

} // namespace vircurv
