#pragma once

#include "vircurv/exact.hpp"
#include "vircurv/trig_field.hpp"

namespace vircurv {

/// The central-extension parameters (c, h) and the weights
///
///     theta_k = 2hk + (c/12)(k^3 - k),
///
/// which are odd in k. Positivity of theta is not required at construction:
/// the fundamental cocycle (h = 0) has theta_1 = 0 and is still usable for
/// cocycle-only work. Metric operations call require_positive_up_to() for the
/// modes they touch.
class CentralParams {
public:
    CentralParams(Rational c, Rational h) : c_(std::move(c)), h_(std::move(h)) {}

    static CentralParams cubic() { return {Rational(12), Rational(1, 2)}; }       // theta_k = k^3
    static CentralParams fundamental() { return {Rational(6), Rational(0)}; }    // cocycle only

    const Rational& c() const noexcept { return c_; }
    const Rational& h() const noexcept { return h_; }

    Rational theta(long k) const;

    // True iff theta_k > 0 for every 1 <= k <= max_mode.
    bool positive_up_to(long max_mode) const;

    // Throws ParameterError naming the first k in [1, max_mode] with theta_k <= 0.
    void require_positive_up_to(long max_mode) const;

    friend bool operator==(const CentralParams&, const CentralParams&) = default;

private:
    Rational c_;
    Rational h_;
};

Rational theta(const CentralParams& params, long k);

/// omega_{c,h}(x, y) = (1/2pi) int ((2h - c/12) x' - (c/12) x''') y dt,
/// evaluated through derivative() and integral_pair().
Rational cocycle(const CentralParams& params, const TrigField& x, const TrigField& y);

/// Tabulated basis values of omega: omega(f_m, g_n) = -theta_m/2 delta_mn,
/// omega(g_m, f_n) = theta_m/2 delta_mn, and 0 for ff and gg pairs.
Rational cocycle_basis(const CentralParams& params, Basis a, Basis b);

/// An element a*kappa + f of the central extension.
struct VirasoroElement {
    Rational central;
    TrigField field;

    static VirasoroElement kappa() { return {Rational(1), TrigField()}; }
    static VirasoroElement of(TrigField x) { return {Rational(0), std::move(x)}; }

    bool is_zero() const { return central.is_zero() && field.is_zero(); }

    VirasoroElement& operator+=(const VirasoroElement& rhs) {
        central += rhs.central;
        field += rhs.field;
        return *this;
    }
    friend VirasoroElement operator+(VirasoroElement a, const VirasoroElement& b) { return a += b; }
    friend bool operator==(const VirasoroElement&, const VirasoroElement&) = default;
};

/// [a kappa + f, b kappa + g] = omega(f, g) kappa + [f, g].
VirasoroElement virasoro_bracket(const CentralParams& params, const VirasoroElement& x, const VirasoroElement& y);

/// Cyclic sum [[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y]; zero for a Lie algebra.
VirasoroElement check_jacobi(const CentralParams& params, const VirasoroElement& x, const VirasoroElement& y,
                             const VirasoroElement& z);

/// The metric B(x, y) = omega(x, J y) on mean-zero fields. Requires theta > 0
/// up to the larger of the two max modes.
Rational inner_B(const CentralParams& params, const TrigField& x, const TrigField& y);

/// B through its diagonal form (1/2) sum_k theta_k (a_k a'_k + b_k b'_k).
Rational inner_B_diagonal(const CentralParams& params, const TrigField& x, const TrigField& y);

} // namespace vircurv
