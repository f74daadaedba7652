#pragma once

#include <functional>
#include <string_view>

#include "vircurv/trig_field.hpp"
#include "vircurv/virasoro.hpp"

namespace vircurv {

/// Which brackets enter the defining equation of U:
///
///     paper:  B(U(x,y), z) = 1/2 (B([x,z]_m, y) + B(x, [y,z]_m))
///     nomizu: B(U(x,y), z) = 1/2 (B([z,x]_m, y) + B(x, [z,y]_m))
///
/// The two differ by a global sign of U.
enum class SignConvention { paper, nomizu };

std::string_view to_string(SignConvention convention);
SignConvention parse_convention(std::string_view text);  // UsageError on unknown names

/// lambda_{m,n} = (2n + m) theta_m / (2 theta_{m+n}), for any integers with
/// m + n != 0.
Rational lambda_coeff(const CentralParams& params, long m, long n);

/// U on a pair of basis elements, solved from the defining equation. Only
/// modes m + n and |m - n| can appear, so only those are probed.
TrigField u_tensor_basis(const CentralParams& params, Basis a, Basis b,
                         SignConvention convention = SignConvention::paper);

/// U(x, y) by bilinear extension of u_tensor_basis.
TrigField u_tensor(const CentralParams& params, const TrigField& x, const TrigField& y,
                   SignConvention convention = SignConvention::paper);

/// U(x, y) by brute force: probe the defining equation with every f_k, g_k for
/// 1 <= k <= max(x) + max(y) and divide by B(e_k, e_k) = theta_k / 2. The
/// metric is evaluated through the cocycle integral. Slow; used as a check.
TrigField u_tensor_oracle(const CentralParams& params, const TrigField& x, const TrigField& y,
                          SignConvention convention = SignConvention::paper);

/// The tabulated U on basis pairs (ff, fg, gg for m < n, m > n, m = n; the gf
/// cases follow from symmetry). Paper convention.
TrigField u_tensor_closed(const CentralParams& params, Basis a, Basis b);

/// nabla_x y = 1/2 [x,y]_m + U(x,y).
TrigField nabla(const CentralParams& params, const TrigField& x, const TrigField& y,
                SignConvention convention = SignConvention::paper);

/// nabla_x y - nabla_y x - [x,y]_m.
TrigField torsion_nabla(const CentralParams& params, const TrigField& x, const TrigField& y,
                        SignConvention convention = SignConvention::paper);

using Connection = std::function<TrigField(const TrigField&, const TrigField&)>;

/// B(D_x y, z) + B(y, D_x z) for an arbitrary connection D.
Rational metric_defect_of(const CentralParams& params, const Connection& connection, const TrigField& x,
                          const TrigField& y, const TrigField& z);

/// metric_defect_of for nabla under the given convention.
Rational metric_defect(const CentralParams& params, const TrigField& x, const TrigField& y, const TrigField& z,
                       SignConvention convention = SignConvention::paper);

} // namespace vircurv
