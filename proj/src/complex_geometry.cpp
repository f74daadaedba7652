#include "vircurv/complex_geometry.hpp"

#include <algorithm>

#include "vircurv/errors.hpp"

namespace vircurv {

TrigField nijenhuis(const TrigField& x, const TrigField& y) {
    require_mean_zero(x, "nijenhuis");
    require_mean_zero(y, "nijenhuis");
    const TrigField jx = apply_J(x);
    const TrigField jy = apply_J(y);
    TrigField out = project_m(bracket(jx, jy));
    out -= project_m(bracket(x, y));
    out -= apply_J(project_m(bracket(x, jy)));
    out -= apply_J(project_m(bracket(jx, y)));
    return Rational(2) * out;
}

TrigField nabla_J(const CentralParams& params, const TrigField& x, const TrigField& y, SignConvention convention) {
    return nabla(params, x, apply_J(y), convention) - apply_J(nabla(params, x, y, convention));
}

TrigField q_tensor(const CentralParams& params, const TrigField& x, const TrigField& y, SignConvention convention) {
    TrigField out = nabla_J(params, apply_J(y), x, convention);
    out += apply_J(nabla_J(params, y, x, convention));
    out += Rational(2) * apply_J(nabla_J(params, x, y, convention));
    return Rational(1, 4) * out;
}

TrigField nabla_tilde(const CentralParams& params, const TrigField& x, const TrigField& y,
                      SignConvention convention) {
    return nabla(params, x, y, convention) - q_tensor(params, x, y, convention);
}

TrigField torsion_tilde(const CentralParams& params, const TrigField& x, const TrigField& y,
                        SignConvention convention) {
    return nabla_tilde(params, x, y, convention) - nabla_tilde(params, y, x, convention) - project_m(bracket(x, y));
}

Rational tilde_metric_defect(const CentralParams& params, const TrigField& x, const TrigField& y,
                             const TrigField& z, SignConvention convention) {
    const Connection conn = [&](const TrigField& u, const TrigField& v) {
        return nabla_tilde(params, u, v, convention);
    };
    return metric_defect_of(params, conn, x, y, z);
}

Rational hs_partial_sum(const CentralParams& params, long n, long max_m) {
    if (n < 1) throw DomainError("hs_partial_sum: n must be >= 1");
    if (max_m < 1) throw DomainError("hs_partial_sum: max must be >= 1");
    params.require_positive_up_to(std::max(2 * n, n + max_m));
    const Rational theta_n = params.theta(n);

    Rational sum;
    for (long m = 1; m <= max_m; ++m) {
        const Rational theta_m = params.theta(m);
        if (m < n) {
            const Rational l = lambda_coeff(params, m, n);
            sum += l * l * params.theta(n + m) / (theta_n * theta_m);
            sum += Rational((m + n) * (m + n)) * params.theta(n - m) / (Rational(4) * theta_n * theta_m);
        } else if (m == n) {
            const Rational l = lambda_coeff(params, n, n);
            sum += l * l * params.theta(2 * n) / (theta_n * theta_n);
        } else {
            const Rational l = lambda_coeff(params, m, n);
            sum += l * l * params.theta(n + m) / (theta_n * theta_m);
        }
    }
    return sum;
}

} // namespace vircurv
