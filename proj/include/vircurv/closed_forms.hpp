#pragma once

// Hand-derived closed forms on basis elements. None of the engine's own
// operations use these; they exist so the verification suites can compare
// the computed values against them line by line.

#include "vircurv/curvature.hpp"

namespace vircurv::tables {

/// Structure constants of the diff(S^1) bracket:
///   [f_m, f_n] = 1/2 ((m-n) g_{m+n} + (m+n) sgn(m-n) g_{|m-n|}),   m != n
///   [g_m, g_n] = 1/2 ((n-m) g_{m+n} + (m+n) sgn(m-n) g_{|m-n|}),   m != n
///   [f_m, g_n] = 1/2 ((n-m) f_{m+n} + (m+n) f_{|m-n|})
/// with [e, e] = 0 and [g_m, f_n] = -[f_n, g_m].
TrigField bracket(Basis a, Basis b);

/// nabla on basis pairs (paper convention), including the
/// nabla_{g_n} f_m = -lambda_{n,m} f_{n+m} - ((m+n)/2) f_{n-m} style lines.
TrigField nabla(const CentralParams& params, Basis a, Basis b);

/// (nabla_a J)(b): zero for mode(b) >= mode(a), otherwise a multiple of
/// f_{m-n} or g_{m-n}.
TrigField nabla_J(Basis a, Basis b);

/// Q(a, b) = +-((m+n)/2) e_{|n-m|}, zero on equal modes.
TrigField q_tensor(Basis a, Basis b);

/// The twelve displayed nabla~ lines.
TrigField nabla_tilde(const CentralParams& params, Basis a, Basis b);

/// The four displayed L-basis brackets, for nonzero a, b:
///   [L_m, L_n] = i(n-m) L_{m+n}
///   [L_{-m}, L_n] = i(m+n) L_{n-m}
///   [L_m, L_{-n}] = -i(m+n) L_{m-n}
///   [L_{-m}, L_{-n}] = i(m-n) L_{-m-n}
ComplexField l_bracket(int a, int b);

} // namespace vircurv::tables
