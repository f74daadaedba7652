#include "vircurv/connection.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>

#include "vircurv/errors.hpp"

namespace vircurv {

namespace {

// (1/2) sum_k theta_k (a_k a'_k + b_k b'_k) without validation; callers have
// already checked theta positivity for the modes involved.
Rational diagonal_pairing(const CentralParams& params, const TrigField& x, const TrigField& y) {
    Rational sum;
    const auto& yt = y.terms();
    for (const auto& [k, c] : x.terms()) {
        if (k == 0) continue;
        const auto it = yt.find(k);
        if (it == yt.end()) continue;
        sum += params.theta(k) * (c.cos_coeff * it->second.cos_coeff + c.sin_coeff * it->second.sin_coeff);
    }
    return sum / Rational(2);
}

Rational convention_sign(SignConvention convention) {
    return convention == SignConvention::paper ? Rational(1) : Rational(-1);
}

} // namespace

std::string_view to_string(SignConvention convention) {
    return convention == SignConvention::paper ? "paper" : "nomizu";
}

SignConvention parse_convention(std::string_view text) {
    if (text == "paper") return SignConvention::paper;
    if (text == "nomizu") return SignConvention::nomizu;
    throw UsageError("unknown convention '" + std::string(text) + "' (expected paper or nomizu)");
}

Rational lambda_coeff(const CentralParams& params, long m, long n) {
    if (m + n == 0) throw DomainError("lambda_{m,n} needs m + n != 0 (theta_0 = 0)");
    const Rational denom = Rational(2) * params.theta(m + n);
    if (denom.is_zero())
        throw DomainError("lambda_{" + std::to_string(m) + "," + std::to_string(n) + "}: theta_" +
                          std::to_string(m + n) + " = 0");
    return Rational(2 * n + m) * params.theta(m) / denom;
}

TrigField u_tensor_basis(const CentralParams& params, Basis a, Basis b, SignConvention convention) {
    if (a.mode < 1 || b.mode < 1) throw DomainError("u_tensor: basis elements must be mean-zero (mode >= 1)");
    params.require_positive_up_to(a.mode + b.mode);
    const TrigField ea = TrigField::basis(a);
    const TrigField eb = TrigField::basis(b);
    const Rational half(1, 2);
    const Rational sign = convention_sign(convention);

    TrigField out;
    const std::array<int, 2> candidates{a.mode + b.mode, std::abs(a.mode - b.mode)};
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const int k = candidates[i];
        if (k == 0 || (i == 1 && k == candidates[0])) continue;
        for (const Basis probe : {f(k), g(k)}) {
            const TrigField z = TrigField::basis(probe);
            const Rational rhs = half * (diagonal_pairing(params, project_m(bracket(ea, z)), eb) +
                                         diagonal_pairing(params, ea, project_m(bracket(eb, z))));
            if (rhs.is_zero()) continue;
            out.add_term(probe, sign * rhs / (params.theta(k) * half));
        }
    }
    return out;
}

namespace {

// Per-thread memo of u_tensor_basis for the most recent (c, h).
const TrigField& u_tensor_basis_memo(const CentralParams& params, Basis a, Basis b, SignConvention convention) {
    using Key = std::array<int, 5>;
    thread_local std::optional<CentralParams> owner;
    thread_local std::map<Key, TrigField> memo;
    if (!owner || !(*owner == params)) {
        owner = params;
        memo.clear();
    }
    const Key key{static_cast<int>(a.kind), a.mode, static_cast<int>(b.kind), b.mode, static_cast<int>(convention)};
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, u_tensor_basis(params, a, b, convention)).first;
    return it->second;
}

} // namespace

TrigField u_tensor(const CentralParams& params, const TrigField& x, const TrigField& y, SignConvention convention) {
    require_mean_zero(x, "u_tensor");
    require_mean_zero(y, "u_tensor");
    TrigField out;
    for (const auto& [ea, xa] : x.expand())
        for (const auto& [eb, yb] : y.expand()) out += (xa * yb) * u_tensor_basis_memo(params, ea, eb, convention);
    return out;
}

TrigField u_tensor_oracle(const CentralParams& params, const TrigField& x, const TrigField& y,
                          SignConvention convention) {
    require_mean_zero(x, "u_tensor_oracle");
    require_mean_zero(y, "u_tensor_oracle");
    const int scan = x.max_mode() + y.max_mode();
    params.require_positive_up_to(scan);
    const Rational half(1, 2);
    const Rational sign = convention_sign(convention);

    TrigField out;
    for (int k = 1; k <= scan; ++k) {
        for (const Basis probe : {f(k), g(k)}) {
            const TrigField z = TrigField::basis(probe);
            const Rational rhs =
                half * (inner_B(params, project_m(bracket(x, z)), y) + inner_B(params, x, project_m(bracket(y, z))));
            if (rhs.is_zero()) continue;
            out.add_term(probe, sign * rhs / inner_B(params, z, z));
        }
    }
    return out;
}

TrigField u_tensor_closed(const CentralParams& params, Basis a, Basis b) {
    if (a.mode < 1 || b.mode < 1) throw DomainError("u_tensor_closed: modes must be >= 1");
    // The table lists (f,f), (f,g), (g,g); U is symmetric.
    if (a.kind == BasisKind::sin && b.kind == BasisKind::cos) return u_tensor_closed(params, b, a);

    const long m = a.mode;
    const long n = b.mode;
    const Rational half(1, 2);
    TrigField out;
    if (m == n) {
        const Rational l = lambda_coeff(params, n, n);
        if (a.kind == BasisKind::cos && b.kind == BasisKind::cos) out.add_term(g(2 * n), l);
        else if (a.kind == BasisKind::cos) out.add_term(f(2 * n), -l);
        else out.add_term(g(2 * n), -l);
        return out;
    }

    const Rational lsum = lambda_coeff(params, n, m) + lambda_coeff(params, m, n);
    const Rational mid = Rational(n + m, 2);
    const int sum = static_cast<int>(n + m);
    const int diff = static_cast<int>(std::abs(n - m));
    if (a.kind == BasisKind::cos && b.kind == BasisKind::cos) {
        out.add_term(g(sum), half * lsum);
        out.add_term(g(diff), half * mid);
    } else if (a.kind == BasisKind::cos) {
        out.add_term(f(sum), -half * lsum);
        out.add_term(f(diff), n > m ? -half * mid : half * mid);
    } else {
        out.add_term(g(sum), -half * lsum);
        out.add_term(g(diff), half * mid);
    }
    return out;
}

TrigField nabla(const CentralParams& params, const TrigField& x, const TrigField& y, SignConvention convention) {
    TrigField out = u_tensor(params, x, y, convention);
    out += Rational(1, 2) * project_m(bracket(x, y));
    return out;
}

TrigField torsion_nabla(const CentralParams& params, const TrigField& x, const TrigField& y,
                        SignConvention convention) {
    return nabla(params, x, y, convention) - nabla(params, y, x, convention) - project_m(bracket(x, y));
}

Rational metric_defect_of(const CentralParams& params, const Connection& connection, const TrigField& x,
                          const TrigField& y, const TrigField& z) {
    return inner_B(params, connection(x, y), z) + inner_B(params, y, connection(x, z));
}

Rational metric_defect(const CentralParams& params, const TrigField& x, const TrigField& y, const TrigField& z,
                       SignConvention convention) {
    const Connection conn = [&](const TrigField& u, const TrigField& v) { return nabla(params, u, v, convention); };
    return metric_defect_of(params, conn, x, y, z);
}

} // namespace vircurv
