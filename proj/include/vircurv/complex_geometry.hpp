#pragma once

#include "vircurv/connection.hpp"

namespace vircurv {

/// N(x,y) = 2([Jx,Jy]_m - [x,y]_m - J[x,Jy]_m - J[Jx,y]_m).
TrigField nijenhuis(const TrigField& x, const TrigField& y);

/// (nabla_x J)(y) = nabla_x(Jy) - J(nabla_x y).
TrigField nabla_J(const CentralParams& params, const TrigField& x, const TrigField& y,
                  SignConvention convention = SignConvention::paper);

/// 4 Q(x,y) = (nabla_{Jy} J)x + J((nabla_y J)x) + 2 J((nabla_x J)y).
TrigField q_tensor(const CentralParams& params, const TrigField& x, const TrigField& y,
                   SignConvention convention = SignConvention::paper);

/// The modified connection nabla_x y - Q(x,y).
TrigField nabla_tilde(const CentralParams& params, const TrigField& x, const TrigField& y,
                      SignConvention convention = SignConvention::paper);

TrigField torsion_tilde(const CentralParams& params, const TrigField& x, const TrigField& y,
                        SignConvention convention = SignConvention::paper);

/// B(nabla~_x y, z) + B(y, nabla~_x z). Reported, not expected to vanish.
Rational tilde_metric_defect(const CentralParams& params, const TrigField& x, const TrigField& y,
                             const TrigField& z, SignConvention convention = SignConvention::paper);

/// Partial sum through m = max_m of the normalized squared norms
/// sum_m (<nabla~_{f_m} f_n, .> + <nabla~_{g_m} f_n, .>) / (theta_m theta_n),
/// in its expanded form:
///
///     sum_{m<n}  lambda_{m,n}^2 theta_{n+m} / (theta_n theta_m)
///                + (m+n)^2 theta_{n-m} / (4 theta_n theta_m)
///   + lambda_{n,n}^2 theta_{2n} / theta_n^2                       (if max_m >= n)
///   + sum_{n<m<=max_m} lambda_{m,n}^2 theta_{n+m} / (theta_n theta_m)
///
/// The series diverges (cubically in max_m), so nabla~ is not Hilbert-Schmidt.
Rational hs_partial_sum(const CentralParams& params, long n, long max_m);

} // namespace vircurv
