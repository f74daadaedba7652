#include "vircurv/virasoro.hpp"

#include <algorithm>

#include "vircurv/errors.hpp"

namespace vircurv {

Rational CentralParams::theta(long k) const {
    const Rational kk(k);
    return Rational(2) * h_ * kk + c_ / Rational(12) * (kk * kk * kk - kk);
}

bool CentralParams::positive_up_to(long max_mode) const {
    if (max_mode < 1) return true;
    // theta_k / k = 2h + (c/12)(k^2 - 1) is monotone in k, so checking both
    // ends of [1, max_mode] covers the whole range.
    return theta(1).sign() > 0 && theta(max_mode).sign() > 0;
}

void CentralParams::require_positive_up_to(long max_mode) const {
    if (positive_up_to(max_mode)) return;
    long first = 1;
    while (theta(first).sign() > 0) ++first;
    throw ParameterError("theta_" + std::to_string(first) + " = " + theta(first).str() +
                         " is not positive for c = " + c_.str() + ", h = " + h_.str() +
                         " (needed up to mode " + std::to_string(max_mode) + ")");
}

Rational theta(const CentralParams& params, long k) { return params.theta(k); }

Rational cocycle(const CentralParams& params, const TrigField& x, const TrigField& y) {
    const Rational c12 = params.c() / Rational(12);
    const TrigField weighted = (Rational(2) * params.h() - c12) * derivative(x, 1) - c12 * derivative(x, 3);
    return integral_pair(weighted, y);
}

Rational cocycle_basis(const CentralParams& params, Basis a, Basis b) {
    if (a.mode != b.mode || a.kind == b.kind || a.mode == 0) return Rational(0);
    const Rational half_theta = params.theta(a.mode) / Rational(2);
    return a.kind == BasisKind::cos ? -half_theta : half_theta;
}

VirasoroElement virasoro_bracket(const CentralParams& params, const VirasoroElement& x, const VirasoroElement& y) {
    return {cocycle(params, x.field, y.field), bracket(x.field, y.field)};
}

VirasoroElement check_jacobi(const CentralParams& params, const VirasoroElement& x, const VirasoroElement& y,
                             const VirasoroElement& z) {
    const auto br = [&](const VirasoroElement& a, const VirasoroElement& b) { return virasoro_bracket(params, a, b); };
    return br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y);
}

Rational inner_B(const CentralParams& params, const TrigField& x, const TrigField& y) {
    require_mean_zero(x, "inner_B");
    require_mean_zero(y, "inner_B");
    params.require_positive_up_to(std::max(x.max_mode(), y.max_mode()));
    return cocycle(params, x, apply_J(y));
}

Rational inner_B_diagonal(const CentralParams& params, const TrigField& x, const TrigField& y) {
    require_mean_zero(x, "inner_B_diagonal");
    require_mean_zero(y, "inner_B_diagonal");
    params.require_positive_up_to(std::max(x.max_mode(), y.max_mode()));
    Rational sum;
    const auto& yt = y.terms();
    for (const auto& [k, c] : x.terms()) {
        const auto it = yt.find(k);
        if (it == yt.end()) continue;
        sum += params.theta(k) * (c.cos_coeff * it->second.cos_coeff + c.sin_coeff * it->second.sin_coeff);
    }
    return sum / Rational(2);
}

} // namespace vircurv
