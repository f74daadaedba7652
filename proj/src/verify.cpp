#include "vircurv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "vircurv/closed_forms.hpp"
#include "vircurv/errors.hpp"
#include "vircurv/field_parser.hpp"

namespace vircurv {

std::string_view to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::info: return "info";
    }
    return "fail";
}

bool VerificationReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

int exit_code(const VerificationReport& report) { return report.all_passed() ? 0 : 1; }

namespace {

constexpr std::size_t kBlock = 32;

std::optional<Counterexample> guarded(const CaseFn& fn, std::size_t index) {
    try {
        return fn(index);
    } catch (const std::exception& e) {
        return Counterexample{"case " + std::to_string(index), std::string("exception: ") + e.what(), "no exception"};
    }
}

template <class Body>
void parallel_blocks(std::size_t cases, unsigned threads, Body body) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>((cases + kBlock - 1) / kBlock)));
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(kBlock);
            if (begin >= cases) return;
            if (!body(begin, std::min(cases, begin + kBlock))) return;
        }
    };
    if (workers == 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

} // namespace

CheckResult run_check(std::string suite, std::string name, std::string range, std::size_t cases, const CaseFn& fn,
                      unsigned threads) {
    CheckResult result{std::move(suite), std::move(name), std::move(range), CheckStatus::pass, cases, {}, {}};
    std::mutex mu;
    std::size_t first_fail = cases;
    std::optional<Counterexample> witness;
    parallel_blocks(cases, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            {
                std::lock_guard lock(mu);
                if (i > first_fail) return false;
            }
            if (auto cx = guarded(fn, i)) {
                std::lock_guard lock(mu);
                if (i < first_fail) {
                    first_fail = i;
                    witness = std::move(cx);
                }
                return false;
            }
        }
        return true;
    });
    if (witness) {
        result.status = CheckStatus::fail;
        result.counterexample = std::move(witness);
    }
    return result;
}

std::size_t count_cases(std::size_t cases, const std::function<bool(std::size_t)>& pred, unsigned threads) {
    std::atomic<std::size_t> hits{0};
    parallel_blocks(cases, threads, [&](std::size_t begin, std::size_t end) {
        std::size_t local = 0;
        for (std::size_t i = begin; i < end; ++i) local += pred(i) ? 1 : 0;
        hits += local;
        return true;
    });
    return hits.load();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"brackets", "cocycle", "connection", "complex", "curvature", "ricci",
                                                "all"};
    return names;
}

namespace {

std::optional<Counterexample> compare(const std::string& inputs, const TrigField& lhs, const TrigField& rhs) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{inputs, format_field(lhs), format_field(rhs)};
}

std::optional<Counterexample> compare(const std::string& inputs, const Rational& lhs, const Rational& rhs) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{inputs, lhs.str(), rhs.str()};
}

std::optional<Counterexample> compare(const std::string& inputs, const ComplexField& lhs, const ComplexField& rhs) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{inputs, lhs.str(), rhs.str()};
}

std::optional<Counterexample> compare(const std::string& inputs, const Complex& lhs, const Complex& rhs) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{inputs, lhs.str(), rhs.str()};
}

std::string vstr(const VirasoroElement& x) { return x.central.str() + "*kappa + (" + format_field(x.field) + ")"; }

std::string args(std::initializer_list<std::string> parts) {
    std::string out = "(";
    for (const auto& p : parts) {
        if (out.size() > 1) out += ", ";
        out += p;
    }
    return out + ")";
}

std::string lname(int k) { return "L(" + std::to_string(k) + ")"; }

TrigField F(Basis e) { return TrigField::basis(e); }

// f_1, g_1, f_2, g_2, ..., f_k, g_k, optionally preceded by f_0.
std::vector<Basis> basis_list(long max_mode, bool with_constant) {
    std::vector<Basis> out;
    if (with_constant) out.push_back(f(0));
    for (int k = 1; k <= max_mode; ++k) {
        out.push_back(f(k));
        out.push_back(g(k));
    }
    return out;
}

// Nonzero indices -k..-1, 1..k.
std::vector<int> signed_list(long k) {
    std::vector<int> out;
    for (int i = static_cast<int>(-k); i <= k; ++i)
        if (i != 0) out.push_back(i);
    return out;
}

std::string mode_range(const char* vars, long lo, long hi) {
    return std::to_string(lo) + "<=" + vars + "<=" + std::to_string(hi);
}

std::string signed_range(const char* vars, long k) {
    return "0<|" + std::string(vars) + "|<=" + std::to_string(k);
}

class RandomFields {
public:
    RandomFields(std::uint64_t seed, long max_mode, bool with_constant)
        : seed_(seed), max_mode_(max_mode), with_constant_(with_constant) {}

    // The field for case `index`; depends only on (seed, index).
    TrigField operator()(std::size_t index, unsigned slot = 0) const {
        std::mt19937_64 rng(seed_ ^ (0x9E3779B97F4A7C15ull * (index * 4 + slot + 1)));
        std::uniform_int_distribution<int> terms(1, 4);
        std::uniform_int_distribution<int> mode(with_constant_ ? 0 : 1, static_cast<int>(max_mode_));
        std::uniform_int_distribution<int> kind(0, 1);
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 9);
        TrigField x;
        const int count = terms(rng);
        for (int t = 0; t < count; ++t) {
            const int k = mode(rng);
            const bool sine = k > 0 && kind(rng) == 1;
            long p = num(rng);
            if (p == 0) p = 1;
            x.add_term(sine ? g(k) : f(k), Rational(p, den(rng)));
        }
        return x;
    }

private:
    std::uint64_t seed_;
    long max_mode_;
    bool with_constant_;
};

constexpr std::size_t kRandomCases = 200;

struct Context {
    const CentralParams& params;
    long max_mode;
    unsigned threads;
    std::vector<CheckResult>& out;

    void check(const char* suite, std::string name, std::string range, std::size_t cases, const CaseFn& fn) {
        out.push_back(run_check(suite, std::move(name), std::move(range), cases, fn, threads));
    }

    void info(const char* suite, std::string name, std::string range, std::size_t cases, std::string note) {
        CheckResult r{suite, std::move(name), std::move(range), CheckStatus::info, cases, {}, std::move(note)};
        out.push_back(std::move(r));
    }
};

// ---------------------------------------------------------------- brackets

void suite_brackets(Context& ctx) {
    const char* S = "brackets";
    const long K = ctx.max_mode;
    const auto all = basis_list(K, true);
    const std::size_t n0 = all.size();

    ctx.check(S, "bracket = structure-constant table", mode_range("m,n", 0, K), n0 * n0, [&](std::size_t i) {
        const Basis a = all[i / n0];
        const Basis b = all[i % n0];
        return compare(args({a.str(), b.str()}), bracket(F(a), F(b)), tables::bracket(a, b));
    });

    const RandomFields rnd(0xB1, K, true);
    ctx.check(S, "[x,y] = -[y,x]", "random, modes<=" + std::to_string(K), kRandomCases, [&](std::size_t i) {
        const TrigField x = rnd(i, 0);
        const TrigField y = rnd(i, 1);
        return compare(args({format_field(x), format_field(y)}), bracket(x, y), -bracket(y, x));
    });

    const long kj = std::min<long>(K, 12);
    const auto jb = basis_list(kj, true);
    const std::size_t nj = jb.size();
    ctx.check(S, "Jacobi [x,[y,z]] + cyclic = 0", mode_range("modes", 0, kj), nj * nj * nj, [&](std::size_t i) {
        const TrigField x = F(jb[i / (nj * nj)]);
        const TrigField y = F(jb[(i / nj) % nj]);
        const TrigField z = F(jb[i % nj]);
        const TrigField sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        return compare(args({jb[i / (nj * nj)].str(), jb[(i / nj) % nj].str(), jb[i % nj].str()}), sum, TrigField());
    });

    ctx.check(S, "[f_0, f_n] = -n g_n", mode_range("n", 1, K), static_cast<std::size_t>(K), [&](std::size_t i) {
        const int n = static_cast<int>(i) + 1;
        return compare(args({"f_0", f(n).str()}), bracket(F(f(0)), F(f(n))), Rational(-n) * F(g(n)));
    });

    const auto m_basis = basis_list(K, false);
    ctx.check(S, "project_h([f_0, e]) = 0", mode_range("mode(e)", 1, K), m_basis.size(), [&](std::size_t i) {
        return compare(args({"f_0", m_basis[i].str()}), project_h(bracket(F(f(0)), F(m_basis[i]))), TrigField());
    });

    ctx.check(S, "J^2 = -I", mode_range("mode(e)", 1, K), m_basis.size(), [&](std::size_t i) {
        const TrigField e = F(m_basis[i]);
        return compare(args({m_basis[i].str()}), apply_J(apply_J(e)), -e);
    });

    const RandomFields rnd_m(0xB2, K, false);
    ctx.check(S, "pairing(Jx, Jy) = pairing(x, y)", "random mean-zero, modes<=" + std::to_string(K), kRandomCases,
              [&](std::size_t i) {
                  const TrigField x = rnd_m(i, 0);
                  const TrigField y = rnd_m(i, 1);
                  return compare(args({format_field(x), format_field(y)}), integral_pair(apply_J(x), apply_J(y)),
                                 integral_pair(x, y));
              });

    ctx.check(S, "x = project_m(x) + project_h(x), project_m idempotent", "random, modes<=" + std::to_string(K),
              kRandomCases, [&](std::size_t i) {
                  const TrigField x = rnd(i, 2);
                  if (auto cx = compare(args({format_field(x)}), project_m(x) + project_h(x), x)) return cx;
                  return compare(args({format_field(x)}), project_m(project_m(x)), project_m(x));
              });

    ctx.check(S, "parse(format(x)) = x", "random, modes<=" + std::to_string(K), kRandomCases, [&](std::size_t i) {
        const TrigField x = rnd(i, 3);
        const std::string text = format_field(x);
        return compare(args({text}), parse_field(text), x);
    });
}

// ---------------------------------------------------------------- cocycle

void suite_cocycle(Context& ctx) {
    const char* S = "cocycle";
    const long K = ctx.max_mode;
    const CentralParams& P = ctx.params;
    const auto b = basis_list(K, false);
    const std::size_t nb = b.size();

    ctx.check(S, "omega integral = basis table", mode_range("m,n", 1, K), nb * nb, [&](std::size_t i) {
        const Basis x = b[i / nb];
        const Basis y = b[i % nb];
        return compare(args({x.str(), y.str()}), cocycle(P, F(x), F(y)), cocycle_basis(P, x, y));
    });

    const RandomFields rnd(0xC1, K, true);
    ctx.check(S, "omega(x,y) = -omega(y,x)", "random, modes<=" + std::to_string(K), kRandomCases, [&](std::size_t i) {
        const TrigField x = rnd(i, 0);
        const TrigField y = rnd(i, 1);
        return compare(args({format_field(x), format_field(y)}), cocycle(P, x, y), -cocycle(P, y, x));
    });

    const std::size_t nk = 2 * static_cast<std::size_t>(K) + 1;
    ctx.check(S, "theta_{-k} = -theta_k, theta_0 = 0", mode_range("|k|", 0, K), nk, [&](std::size_t i) {
        const long k = static_cast<long>(i) - K;
        return compare(args({"k=" + std::to_string(k)}), P.theta(-k), -P.theta(k));
    });

    // kappa first, then the basis
    const long kv = std::min<long>(K, 10);
    const auto vb = basis_list(kv, false);
    std::vector<VirasoroElement> elems{VirasoroElement::kappa()};
    std::vector<std::string> names{"kappa"};
    for (const Basis& e : vb) {
        elems.push_back(VirasoroElement::of(F(e)));
        names.push_back(e.str());
    }
    const std::size_t ne = elems.size();
    ctx.check(S, "Virasoro Jacobi = 0 (central and field)", "kappa and " + mode_range("modes", 1, kv), ne * ne * ne,
              [&](std::size_t i) -> std::optional<Counterexample> {
                  const std::size_t a = i / (ne * ne), c = (i / ne) % ne, d = i % ne;
                  const VirasoroElement j = check_jacobi(P, elems[a], elems[c], elems[d]);
                  if (j.is_zero()) return std::nullopt;
                  return Counterexample{args({names[a], names[c], names[d]}), vstr(j), "0"};
              });

    const auto b0 = basis_list(K, true);
    ctx.check(S, "kappa is central", mode_range("mode(e)", 0, K), b0.size(), [&](std::size_t i) -> std::optional<Counterexample> {
        VirasoroElement x = VirasoroElement::of(F(b0[i]));
        x.central = Rational(1);
        const VirasoroElement left = virasoro_bracket(P, VirasoroElement::kappa(), x);
        const VirasoroElement right = virasoro_bracket(P, x, VirasoroElement::kappa());
        if (left.is_zero() && right.is_zero()) return std::nullopt;
        return Counterexample{args({"kappa", "kappa + " + b0[i].str()}), vstr(left) + " / " + vstr(right), "0 / 0"};
    });

    ctx.check(S, "Virasoro bracket = (omega, [.,.])", "random, modes<=" + std::to_string(K), kRandomCases,
              [&](std::size_t i) -> std::optional<Counterexample> {
                  const TrigField x = rnd(i, 2);
                  const TrigField y = rnd(i, 3);
                  const VirasoroElement v = virasoro_bracket(P, VirasoroElement::of(x), VirasoroElement{Rational(3), y});
                  const VirasoroElement expect{cocycle(P, x, y), bracket(x, y)};
                  if (v == expect) return std::nullopt;
                  return Counterexample{args({format_field(x), "3*kappa + " + format_field(y)}), vstr(v), vstr(expect)};
              });

    // The fundamental cocycle (c=6, h=0) is -(1/4pi) int (f' + f''') g dt,
    // i.e. -(1/2) pairing(f' + f''', g). Checked independently of the session
    // parameters.
    const auto fb = basis_list(std::min<long>(K, 10), true);
    const std::size_t nf = fb.size();
    const CentralParams fundamental = CentralParams::fundamental();
    ctx.check(S, "fundamental cocycle = -(1/4pi) int (f' + f''') g", "c=6, h=0, " + mode_range("m,n", 0, std::min<long>(K, 10)),
              nf * nf, [&](std::size_t i) {
                  const TrigField x = F(fb[i / nf]);
                  const TrigField y = F(fb[i % nf]);
                  const Rational rhs = Rational(-1, 2) * integral_pair(derivative(x) + derivative(x, 3), y);
                  return compare(args({fb[i / nf].str(), fb[i % nf].str()}), cocycle(fundamental, x, y), rhs);
              });
}

// ---------------------------------------------------------------- connection

Rational diagonal_norm(const CentralParams& P, const TrigField& x) {
    Rational sum;
    for (const auto& [k, c] : x.terms()) sum += P.theta(k) * (c.cos_coeff * c.cos_coeff + c.sin_coeff * c.sin_coeff);
    return sum / Rational(2);
}

void suite_connection(Context& ctx) {
    const char* S = "connection";
    const long K = ctx.max_mode;
    const CentralParams& P = ctx.params;
    const auto b = basis_list(K, false);
    const std::size_t nb = b.size();
    const std::string pairs = mode_range("m,n", 1, K);

    const std::size_t span = 2 * static_cast<std::size_t>(K) + 1;
    ctx.check(S, "lambda_{m,n} = lambda_{n,m} + (m-n)/2", mode_range("|m|,|n|", 0, K) + ", m+n!=0", span * span,
              [&](std::size_t i) -> std::optional<Counterexample> {
                  const long m = static_cast<long>(i / span) - K;
                  const long n = static_cast<long>(i % span) - K;
                  if (m + n == 0) return std::nullopt;
                  return compare(args({"m=" + std::to_string(m), "n=" + std::to_string(n)}), lambda_coeff(P, m, n),
                                 lambda_coeff(P, n, m) + Rational(m - n, 2));
              });

    const RandomFields rnd(0xD1, K, false);
    const std::string random = "random mean-zero, modes<=" + std::to_string(K);
    ctx.check(S, "B(x,y) = B(y,x)", random, kRandomCases, [&](std::size_t i) {
        const TrigField x = rnd(i, 0);
        const TrigField y = rnd(i, 1);
        return compare(args({format_field(x), format_field(y)}), inner_B(P, x, y), inner_B(P, y, x));
    });
    ctx.check(S, "B(x,x) = 1/2 sum theta_k (a_k^2 + b_k^2)", random, kRandomCases, [&](std::size_t i) {
        const TrigField x = rnd(i, 2);
        return compare(args({format_field(x)}), inner_B(P, x, x), diagonal_norm(P, x));
    });
    ctx.check(S, "B(x,x) > 0", random, kRandomCases, [&](std::size_t i) -> std::optional<Counterexample> {
        const TrigField x = rnd(i, 3);
        const Rational v = inner_B(P, x, x);
        if (v.sign() > 0) return std::nullopt;
        return Counterexample{args({format_field(x)}), v.str(), "> 0"};
    });
    ctx.check(S, "B(Jx,Jy) = B(x,y)", random, kRandomCases, [&](std::size_t i) {
        const TrigField x = rnd(i, 0);
        const TrigField y = rnd(i, 1);
        return compare(args({format_field(x), format_field(y)}), inner_B(P, apply_J(x), apply_J(y)), inner_B(P, x, y));
    });
    ctx.check(S, "B cocycle route = diagonal route", random, kRandomCases, [&](std::size_t i) {
        const TrigField x = rnd(i, 2);
        const TrigField y = rnd(i, 3);
        return compare(args({format_field(x), format_field(y)}), inner_B(P, x, y), inner_B_diagonal(P, x, y));
    });

    ctx.check(S, "U closed form = linear-system oracle", pairs, nb * nb, [&](std::size_t i) {
        const Basis x = b[i / nb];
        const Basis y = b[i % nb];
        return compare(args({x.str(), y.str()}), u_tensor_closed(P, x, y), u_tensor_oracle(P, F(x), F(y)));
    });
    ctx.check(S, "U = linear-system oracle (fields)", random, kRandomCases / 4, [&](std::size_t i) {
        const TrigField x = rnd(i, 0);
        const TrigField y = rnd(i, 1);
        return compare(args({format_field(x), format_field(y)}), u_tensor(P, x, y), u_tensor_oracle(P, x, y));
    });
    for (const SignConvention conv : {SignConvention::paper, SignConvention::nomizu}) {
        ctx.check(S, "U(x,y) = U(y,x) (" + std::string(to_string(conv)) + ")", random, kRandomCases, [&, conv](std::size_t i) {
            const TrigField x = rnd(i, 2);
            const TrigField y = rnd(i, 3);
            return compare(args({format_field(x), format_field(y)}), u_tensor(P, x, y, conv), u_tensor(P, y, x, conv));
        });
    }
    ctx.check(S, "U nomizu = -U paper", pairs, nb * nb, [&](std::size_t i) {
        const TrigField x = F(b[i / nb]);
        const TrigField y = F(b[i % nb]);
        return compare(args({b[i / nb].str(), b[i % nb].str()}), u_tensor(P, x, y, SignConvention::nomizu),
                       -u_tensor(P, x, y));
    });

    ctx.check(S, "nabla = closed-form table", pairs, nb * nb, [&](std::size_t i) {
        const Basis x = b[i / nb];
        const Basis y = b[i % nb];
        return compare(args({x.str(), y.str()}), nabla(P, F(x), F(y)), tables::nabla(P, x, y));
    });
    for (const SignConvention conv : {SignConvention::paper, SignConvention::nomizu}) {
        ctx.check(S, "torsion of nabla = 0 (" + std::string(to_string(conv)) + ")", pairs, nb * nb,
                  [&, conv](std::size_t i) {
                      const Basis x = b[i / nb];
                      const Basis y = b[i % nb];
                      return compare(args({x.str(), y.str()}), torsion_nabla(P, F(x), F(y), conv), TrigField());
                  });
    }

    const long kt = std::min<long>(K, 20);
    const auto tb = basis_list(kt, false);
    const std::size_t nt = tb.size();
    const std::string triples = mode_range("modes", 1, kt);
    ctx.check(S, "metric defect of nabla = 0 (nomizu)", triples, nt * nt * nt, [&](std::size_t i) {
        const Basis x = tb[i / (nt * nt)], y = tb[(i / nt) % nt], z = tb[i % nt];
        return compare(args({x.str(), y.str(), z.str()}), metric_defect(P, F(x), F(y), F(z), SignConvention::nomizu),
                       Rational(0));
    });

    const std::size_t nonzero = count_cases(
        nt * nt * nt,
        [&](std::size_t i) {
            const Basis x = tb[i / (nt * nt)], y = tb[(i / nt) % nt], z = tb[i % nt];
            return !metric_defect(P, F(x), F(y), F(z)).is_zero();
        },
        ctx.threads);
    std::string note = "nonzero on " + std::to_string(nonzero) + " of " + std::to_string(nt * nt * nt) + " triples";
    if (kt >= 3) note += "; metric_defect(f_1, f_2, g_3) = " + metric_defect(P, F(f(1)), F(f(2)), F(g(3))).str();
    ctx.info(S, "metric defect of nabla (paper)", triples, nt * nt * nt, note);
}

// ---------------------------------------------------------------- complex

void suite_complex(Context& ctx) {
    const char* S = "complex";
    const long K = ctx.max_mode;
    const CentralParams& P = ctx.params;
    const auto b = basis_list(K, false);
    const std::size_t nb = b.size();
    const std::string pairs = mode_range("m,n", 1, K);
    const auto pair_check = [&](const char* name, auto lhs, auto rhs) {
        ctx.check(S, name, pairs, nb * nb, [&, lhs, rhs](std::size_t i) {
            const Basis x = b[i / nb];
            const Basis y = b[i % nb];
            return compare(args({x.str(), y.str()}), lhs(x, y), rhs(x, y));
        });
    };
    const auto zero = [](Basis, Basis) { return TrigField(); };

    pair_check("Nijenhuis N = 0", [](Basis x, Basis y) { return nijenhuis(F(x), F(y)); }, zero);
    pair_check(
        "N(Jx,y) = -J N(x,y)", [](Basis x, Basis y) { return nijenhuis(apply_J(F(x)), F(y)); },
        [](Basis x, Basis y) { return -apply_J(nijenhuis(F(x), F(y))); });
    pair_check(
        "nabla J = closed-form table", [&](Basis x, Basis y) { return nabla_J(P, F(x), F(y)); },
        [](Basis x, Basis y) { return tables::nabla_J(x, y); });
    pair_check(
        "Q = closed-form table", [&](Basis x, Basis y) { return q_tensor(P, F(x), F(y)); },
        [](Basis x, Basis y) { return tables::q_tensor(x, y); });
    pair_check(
        "nabla~ = closed-form table", [&](Basis x, Basis y) { return nabla_tilde(P, F(x), F(y)); },
        [&](Basis x, Basis y) { return tables::nabla_tilde(P, x, y); });
    pair_check("torsion of nabla~ = 0", [&](Basis x, Basis y) { return torsion_tilde(P, F(x), F(y)); }, zero);

    const RandomFields rnd(0xE1, K, false);
    ctx.check(S, "nabla - Q = bilinear extension of nabla~ table", "random mean-zero, modes<=" + std::to_string(K),
              kRandomCases, [&](std::size_t i) {
                  const TrigField x = rnd(i, 0);
                  const TrigField y = rnd(i, 1);
                  TrigField table;
                  for (const auto& [ex, cx] : x.expand())
                      for (const auto& [ey, cy] : y.expand()) table += (cx * cy) * tables::nabla_tilde(P, ex, ey);
                  return compare(args({format_field(x), format_field(y)}), nabla(P, x, y) - q_tensor(P, x, y), table);
              });

    const long kt = std::min<long>(K, 6);
    const auto tb = basis_list(kt, false);
    const std::size_t nt = tb.size();
    const std::size_t nonzero = count_cases(
        nt * nt * nt,
        [&](std::size_t i) {
            const Basis x = tb[i / (nt * nt)], y = tb[(i / nt) % nt], z = tb[i % nt];
            return !tilde_metric_defect(P, F(x), F(y), F(z)).is_zero();
        },
        ctx.threads);
    ctx.info(S, "metric defect of nabla~", mode_range("modes", 1, kt), nt * nt * nt,
             "nonzero on " + std::to_string(nonzero) + " of " + std::to_string(nt * nt * nt) + " triples");

    // HS series: closed expansion against B(nabla~_{e_m} f_n, same) / (theta_m theta_n).
    const long kn = std::min<long>(K, 5);
    const long km = 2 * K;
    ctx.check(S, "HS partial sum = sum of B(nabla~_e f_n, nabla~_e f_n)", mode_range("n", 1, kn) + ", M<=" + std::to_string(km),
              static_cast<std::size_t>(kn), [&](std::size_t i) -> std::optional<Counterexample> {
                  const long n = static_cast<long>(i) + 1;
                  const TrigField fn = F(f(static_cast<int>(n)));
                  Rational direct;
                  for (long m = 1; m <= km; ++m) {
                      const int mi = static_cast<int>(m);
                      const TrigField a = nabla_tilde(P, F(f(mi)), fn);
                      const TrigField c = nabla_tilde(P, F(g(mi)), fn);
                      direct += (inner_B(P, a, a) + inner_B(P, c, c)) / (P.theta(m) * P.theta(n));
                      if (auto cx = compare(args({"n=" + std::to_string(n), "M=" + std::to_string(m)}),
                                            hs_partial_sum(P, n, m), direct))
                          return cx;
                  }
                  return std::nullopt;
              });

    const long kh = 4 * K;
    ctx.check(S, "HS partial sums strictly increasing", "n=1, " + mode_range("M", 1, kh), static_cast<std::size_t>(kh - 1),
              [&](std::size_t i) -> std::optional<Counterexample> {
        const long m = static_cast<long>(i) + 1;
        const Rational lo = hs_partial_sum(P, 1, m);
        const Rational hi = hs_partial_sum(P, 1, m + 1);
        if (hi > lo) return std::nullopt;
        return Counterexample{args({"n=1", "M=" + std::to_string(m)}), hi.str(), "> " + lo.str()};
    });

    // log2(S_2M / S_M) in [2.5, 3.5]  <=>  (S_2M / S_M)^2 in [32, 128]
    ctx.check(S, "HS growth log2(S_2M/S_M) in [2.5, 3.5]", "n=1, M in {64, 128}", 2,
              [&](std::size_t i) -> std::optional<Counterexample> {
                  const long m = i == 0 ? 64 : 128;
                  const Rational ratio = hs_partial_sum(P, 1, 2 * m) / hs_partial_sum(P, 1, m);
                  const Rational sq = ratio * ratio;
                  if (sq >= Rational(32) && sq <= Rational(128)) return std::nullopt;
                  return Counterexample{args({"n=1", "M=" + std::to_string(m)}), "ratio^2 = " + sq.str(),
                                        "in [32, 128]"};
              });
}

// ---------------------------------------------------------------- curvature

void suite_curvature(Context& ctx) {
    const char* S = "curvature";
    const long K = ctx.max_mode;
    const CentralParams& P = ctx.params;

    const long k25 = std::min<long>(K, 25);
    const auto s25 = signed_list(k25);
    const std::size_t n25 = s25.size();
    ctx.check(S, "[L_a, L_b] = L-basis table", signed_range("a|,|b", k25), n25 * n25, [&](std::size_t i) {
        const int a = s25[i / n25], c = s25[i % n25];
        return compare(args({lname(a), lname(c)}), complex_bracket(L(a), L(c)), tables::l_bracket(a, c));
    });
    ctx.check(S, "complex bracket commutes with realification", signed_range("a|,|b", k25), n25 * n25,
              [&](std::size_t i) -> std::optional<Counterexample> {
                  const int a = s25[i / n25], c = s25[i % n25];
                  const auto [xr, xi] = from_complex(L(a));
                  const auto [yr, yi] = from_complex(L(c));
                  const auto got = from_complex(complex_bracket(L(a), L(c)));
                  const TrigField re = bracket(xr, yr) - bracket(xi, yi);
                  const TrigField im = bracket(xr, yi) + bracket(xi, yr);
                  if (got.first == re && got.second == im) return std::nullopt;
                  return Counterexample{args({lname(a), lname(c)}),
                                        format_field(got.first) + " + i(" + format_field(got.second) + ")",
                                        format_field(re) + " + i(" + format_field(im) + ")"};
              });
    ctx.check(S, "nabla~ L-basis table = complexified real nabla~", signed_range("a|,|b", k25), n25 * n25,
              [&](std::size_t i) {
                  const int a = s25[i / n25], c = s25[i % n25];
                  return compare(args({lname(a), lname(c)}), nabla_tilde_complex(P, L(a), L(c)),
                                 nabla_tilde_complex(P, L(a), L(c), TildeRoute::realified));
              });

    const long k12 = std::min<long>(K, 12);
    const auto s12 = signed_list(k12);
    const std::size_t n12 = s12.size();
    ctx.check(S, "R~_{L_c,L_a} L_b supported on L_{a+b+c}", signed_range("a|,|b|,|c", k12), n12 * n12 * n12,
              [&](std::size_t i) -> std::optional<Counterexample> {
                  const int c = s12[i / (n12 * n12)], a = s12[(i / n12) % n12], bb = s12[i % n12];
                  const ComplexField r = curvature(P, L(c), L(a), L(bb));
                  const ComplexField on = ComplexField::basis(a + bb + c, r.coeff(a + bb + c));
                  return compare(args({lname(c), lname(a), lname(bb)}), r, on);
              });

    const long k6 = std::min<long>(K, 6);
    const auto s6 = signed_list(k6);
    const std::size_t n6 = s6.size();
    ctx.check(S, "R~_{x,y} z = -R~_{y,x} z", signed_range("a|,|b|,|c", k6), n6 * n6 * n6, [&](std::size_t i) {
        const int c = s6[i / (n6 * n6)], a = s6[(i / n6) % n6], bb = s6[i % n6];
        return compare(args({lname(c), lname(a), lname(bb)}), curvature(P, L(c), L(a), L(bb)),
                       -curvature(P, L(a), L(c), L(bb)));
    });

    const long k3 = std::min<long>(K, 3);
    const auto s3 = signed_list(k3);
    const std::size_t n3 = s3.size();
    ctx.check(S, "R~ lemma route = realified route", signed_range("a|,|b|,|c", k3), n3 * n3 * n3, [&](std::size_t i) {
        const int c = s3[i / (n3 * n3)], a = s3[(i / n3) % n3], bb = s3[i % n3];
        return compare(args({lname(c), lname(a), lname(bb)}), curvature(P, L(c), L(a), L(bb)),
                       curvature(P, L(c), L(a), L(bb), TildeRoute::realified));
    });

    const std::size_t nk = static_cast<std::size_t>(K);
    ctx.check(S, "Ricci coefficient: curvature extraction = case formula", mode_range("m,n", 1, K), nk * nk,
              [&](std::size_t i) {
                  const long m = static_cast<long>(i / nk) + 1;
                  const long n = static_cast<long>(i % nk) + 1;
                  return compare(args({"m=" + std::to_string(m), "n=" + std::to_string(n)}),
                                 ricci_coefficient_from_curvature(P, m, n), Complex(ricci_coefficient(P, m, n)));
              });
    ctx.check(S, "coefficient of L_m in R~_{L_m,L_n} L_{-n} = 0", mode_range("m,n", 1, K) + ", m!=n", nk * nk,
              [&](std::size_t i) -> std::optional<Counterexample> {
                  const long m = static_cast<long>(i / nk) + 1;
                  const long n = static_cast<long>(i % nk) + 1;
                  if (m == n) return std::nullopt;
                  return compare(args({"m=" + std::to_string(m), "n=" + std::to_string(n)}),
                                 ricci_plus_coefficient_from_curvature(P, m, n), Complex());
              });
}

// ---------------------------------------------------------------- ricci

void suite_ricci(Context& ctx) {
    const char* S = "ricci";
    const long K = ctx.max_mode;
    const CentralParams& P = ctx.params;
    const std::size_t nk = static_cast<std::size_t>(K);

    ctx.check(S, "regularized = closed_form", mode_range("n", 1, K), nk, [&](std::size_t i) {
        const long n = static_cast<long>(i) + 1;
        return compare(args({"n=" + std::to_string(n)}), ricci_regularized(P, n), ricci_closed_form(P, n));
    });

    const long kp = 10 * K;
    ctx.check(S, "sum_{m=1}^{n} (m+n)(2n-m) = (13n^3 - n)/6", mode_range("n", 1, kp), static_cast<std::size_t>(kp),
              [&](std::size_t i) {
                  const long n = static_cast<long>(i) + 1;
                  Rational sum;
                  for (long m = 1; m <= n; ++m) sum += Rational((m + n) * (2 * n - m));
                  return compare(args({"n=" + std::to_string(n)}), sum, Rational(13 * n * n * n - n, 6));
              });

    const long kn = std::min<long>(K, 10);
    const long km = 3 * K;
    std::vector<std::pair<long, long>> grid;
    for (long n = 1; n <= kn; ++n)
        for (long m = n; m <= km; ++m) grid.emplace_back(n, m);
    const std::string range = mode_range("n", 1, kn) + ", n<=M<=" + std::to_string(km);
    ctx.check(S, "partial + boundary = regularized", range, grid.size(), [&](std::size_t i) {
        const auto [n, m] = grid[i];
        const RicciPartial p = ricci_partial(P, n, m);
        return compare(args({"n=" + std::to_string(n), "M=" + std::to_string(m)}), p.partial + p.boundary,
                       ricci_regularized(P, n));
    });
    ctx.check(S, "boundary term > 0", range, grid.size(), [&](std::size_t i) -> std::optional<Counterexample> {
        const auto [n, m] = grid[i];
        const Rational bd = ricci_partial(P, n, m).boundary;
        if (bd.sign() > 0) return std::nullopt;
        return Counterexample{args({"n=" + std::to_string(n), "M=" + std::to_string(m)}), bd.str(), "> 0"};
    });

    const long kc = std::min<long>(K, 5);
    const long kcm = 2 * K;
    ctx.check(S, "partial sum = curvature-extracted trace", mode_range("n", 1, kc) + ", M=" + std::to_string(kcm),
              static_cast<std::size_t>(kc), [&](std::size_t i) {
                  const long n = static_cast<long>(i) + 1;
                  Complex sum;
                  for (long m = 1; m <= kcm; ++m) sum += ricci_coefficient_from_curvature(P, m, n);
                  return compare(args({"n=" + std::to_string(n), "M=" + std::to_string(kcm)}),
                                 sum / Complex(P.theta(n)), Complex(ricci_partial(P, n, kcm).partial));
              });
}

// Largest mode at which each suite needs theta > 0; 0 when it needs none.
long required_positivity(std::string_view suite, long K) {
    if (suite == "connection") return 2 * K;
    if (suite == "complex") return std::max<long>(2 * K, 257);
    if (suite == "curvature") return std::max({2 * K, 3 * std::min<long>(K, 12), 2 * std::min<long>(K, 25)});
    if (suite == "ricci") return 3 * K + std::min<long>(K, 10);
    return 0;
}

using SuiteFn = void (*)(Context&);

SuiteFn suite_fn(std::string_view name) {
    if (name == "brackets") return suite_brackets;
    if (name == "cocycle") return suite_cocycle;
    if (name == "connection") return suite_connection;
    if (name == "complex") return suite_complex;
    if (name == "curvature") return suite_curvature;
    if (name == "ricci") return suite_ricci;
    return nullptr;
}

} // namespace

VerificationReport run_verify(std::string_view suite, const CentralParams& params, long max_mode, unsigned threads) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + std::string(suite) +
                         "' (expected brackets, cocycle, connection, complex, curvature, ricci, or all)");
    if (max_mode < 1) throw UsageError("max-mode must be >= 1 (got " + std::to_string(max_mode) + ")");

    std::vector<std::string> selected;
    if (suite == "all")
        selected.assign(names.begin(), names.end() - 1);
    else
        selected.emplace_back(suite);

    long needed = 0;
    for (const auto& name : selected) needed = std::max(needed, required_positivity(name, max_mode));
    if (needed > 0) params.require_positive_up_to(needed);

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{std::string(suite), params, max_mode, {}, 0};
    Context ctx{params, max_mode, std::max(1u, threads), report.checks};
    for (const auto& name : selected) suite_fn(name)(ctx);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace vircurv
