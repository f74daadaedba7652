// vircurv command-line front end. Talks to the engine only through the C API.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vircurv/vircurv.h"

namespace {

struct SessionDeleter {
    void operator()(vircurv_session* s) const { vircurv_session_destroy(s); }
};
struct FieldDeleter {
    void operator()(vircurv_field* f) const { vircurv_field_destroy(f); }
};
using Session = std::unique_ptr<vircurv_session, SessionDeleter>;
using Field = std::unique_ptr<vircurv_field, FieldDeleter>;

// Raised after the message has been printed; carries the exit code.
struct Exit {
    int code;
};

struct Globals {
    std::optional<std::string> c;
    std::optional<std::string> h;
    std::optional<std::string> preset;
    std::string convention = "paper";
    std::string format = "text";
    std::optional<long> max_mode;
    unsigned threads = 1;
    bool timing = false;
};

[[noreturn]] void die(vircurv_session* s, vircurv_status status, const std::string& context = {}) {
    std::fprintf(stderr, "vircurv: error: %s%s\n", context.c_str(), vircurv_last_error(s));
    throw Exit{vircurv_exit_code(status, 0)};
}

[[noreturn]] void usage(const std::string& message) {
    std::fprintf(stderr, "vircurv: error: %s\n", message.c_str());
    throw Exit{2};
}

void check(vircurv_session* s, vircurv_status status) {
    if (status != VIRCURV_OK) die(s, status);
}

std::optional<std::string> env(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    return std::string(v);
}

Session open_session(const Globals& g) {
    vircurv_session* raw = nullptr;
    if (vircurv_session_create(&raw) != VIRCURV_OK) usage("cannot create session");
    Session s(raw);

    // defaults < environment < --preset < --c/--h
    std::string c = env("VIRCURV_C").value_or("12");
    std::string h = env("VIRCURV_H").value_or("1/2");
    if (g.preset) {
        if (*g.preset == "cubic") {
            c = "12";
            h = "1/2";
        } else if (*g.preset == "fundamental") {
            c = "6";
            h = "0";
        } else {
            usage("unknown preset '" + *g.preset + "' (expected cubic or fundamental)");
        }
    }
    if (g.c) c = *g.c;
    if (g.h) h = *g.h;
    check(s.get(), vircurv_session_set_params(s.get(), c.c_str(), h.c_str()));

    if (g.convention == "paper")
        check(s.get(), vircurv_session_set_convention(s.get(), VIRCURV_CONVENTION_PAPER));
    else if (g.convention == "nomizu")
        check(s.get(), vircurv_session_set_convention(s.get(), VIRCURV_CONVENTION_NOMIZU));
    else
        usage("unknown convention '" + g.convention + "' (expected paper or nomizu)");

    if (g.format == "text")
        check(s.get(), vircurv_session_set_format(s.get(), VIRCURV_FORMAT_TEXT));
    else if (g.format == "json")
        check(s.get(), vircurv_session_set_format(s.get(), VIRCURV_FORMAT_JSON));
    else if (g.format == "csv")
        check(s.get(), vircurv_session_set_format(s.get(), VIRCURV_FORMAT_CSV));
    else
        usage("unknown format '" + g.format + "' (expected text, json, or csv)");

    check(s.get(), vircurv_session_set_threads(s.get(), g.threads));
    check(s.get(), vircurv_session_set_timing(s.get(), g.timing ? 1 : 0));
    return s;
}

long max_mode(const Globals& g) {
    if (g.max_mode) return *g.max_mode;
    if (const auto v = env("VIRCURV_MAXMODE")) {
        char* end = nullptr;
        const long parsed = std::strtol(v->c_str(), &end, 10);
        if (end == v->c_str() || *end != '\0') usage("VIRCURV_MAXMODE is not an integer: '" + *v + "'");
        return parsed;
    }
    return 10;
}

Field parse(vircurv_session* s, const std::string& text, const char* label) {
    vircurv_field* raw = nullptr;
    const vircurv_status status = vircurv_field_parse(s, text.c_str(), &raw);
    if (status != VIRCURV_OK) {
        std::fprintf(stderr, "vircurv: error: %s: %s\n", label, vircurv_last_error(s));
        const long offset = vircurv_last_error_offset(s);
        if (offset >= 0) {
            std::fprintf(stderr, "  %s\n  %s^\n", text.c_str(), std::string(static_cast<std::size_t>(offset), ' ').c_str());
        }
        throw Exit{vircurv_exit_code(status, 0)};
    }
    return Field(raw);
}

int print(vircurv_session* s, vircurv_status status, char* out, int all_passed = 1) {
    if (status != VIRCURV_OK) die(s, status);
    if (out) std::fputs(out, stdout);
    vircurv_string_free(out);
    return vircurv_exit_code(status, all_passed);
}

struct BinarySpec {
    const char* name;
    const char* help;
    vircurv_binary_op op;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact connection and curvature calculus on Diff(S^1)/S^1"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--c", g.c, "central charge c as p/q (env VIRCURV_C)");
    app.add_option("--h", g.h, "h as p/q (env VIRCURV_H)");
    app.add_option("--preset", g.preset, "cubic (c=12, h=1/2) or fundamental (c=6, h=0)");
    app.add_option("--convention", g.convention, "sign convention for U: paper or nomizu")->capture_default_str();
    app.add_option("--format", g.format, "output format: text, json, or csv")->capture_default_str();
    app.add_option("--max-mode", g.max_mode, "sweep bound for verify (env VIRCURV_MAXMODE, default 10)");
    app.add_option("--threads", g.threads, "worker threads for verify")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_flag("--timing", g.timing, "include elapsed time in verify reports");

    std::string x_text, y_text, z_text;
    std::function<int()> run;

    const auto two_fields = [&](CLI::App* sub) {
        sub->add_option("x", x_text, "first field, e.g. \"cos(t) - 1/2*sin(3t)\"")->required();
        sub->add_option("y", y_text, "second field")->required();
    };

    bool virasoro = false;
    auto* bracket_cmd = app.add_subcommand("bracket", "[x, y] = x y' - x' y (or the central extension with --virasoro)");
    two_fields(bracket_cmd);
    bracket_cmd->add_flag("--virasoro", virasoro, "include the cocycle coefficient of kappa");
    bracket_cmd->callback([&] {
        run = [&] {
            Session s = open_session(g);
            const Field x = parse(s.get(), x_text, "x");
            const Field y = parse(s.get(), y_text, "y");
            char* out = nullptr;
            const vircurv_status st = virasoro ? vircurv_virasoro_bracket(s.get(), x.get(), y.get(), &out)
                                               : vircurv_binary(s.get(), VIRCURV_OP_BRACKET, x.get(), y.get(), &out);
            return print(s.get(), st, out);
        };
    });

    auto* cocycle_cmd = app.add_subcommand("cocycle", "omega_{c,h}(x, y)");
    two_fields(cocycle_cmd);
    cocycle_cmd->callback([&] {
        run = [&] {
            Session s = open_session(g);
            const Field x = parse(s.get(), x_text, "x");
            const Field y = parse(s.get(), y_text, "y");
            char* out = nullptr;
            const vircurv_status st = vircurv_cocycle(s.get(), x.get(), y.get(), &out);
            return print(s.get(), st, out);
        };
    });

    auto* inner_cmd = app.add_subcommand("inner", "B(x, y) = omega(x, J y) on mean-zero fields");
    two_fields(inner_cmd);
    inner_cmd->callback([&] {
        run = [&] {
            Session s = open_session(g);
            const Field x = parse(s.get(), x_text, "x");
            const Field y = parse(s.get(), y_text, "y");
            char* out = nullptr;
            const vircurv_status st = vircurv_inner(s.get(), x.get(), y.get(), &out);
            return print(s.get(), st, out);
        };
    });

    static const std::vector<BinarySpec> binaries{
        {"u-tensor", "U(x, y)", VIRCURV_OP_U_TENSOR},
        {"nabla", "nabla_x y = 1/2 [x,y]_m + U(x,y)", VIRCURV_OP_NABLA},
        {"nabla-tilde", "nabla~_x y = nabla_x y - Q(x,y)", VIRCURV_OP_NABLA_TILDE},
        {"nijenhuis", "Nijenhuis tensor N(x, y) of J", VIRCURV_OP_NIJENHUIS},
        {"q-tensor", "Q(x, y)", VIRCURV_OP_Q_TENSOR},
        {"nabla-j", "(nabla_x J)(y)", VIRCURV_OP_NABLA_J},
    };
    for (const BinarySpec& spec : binaries) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        two_fields(sub);
        sub->callback([&, op = spec.op] {
            run = [&, op] {
                Session s = open_session(g);
                const Field x = parse(s.get(), x_text, "x");
                const Field y = parse(s.get(), y_text, "y");
                char* out = nullptr;
                const vircurv_status st = vircurv_binary(s.get(), op, x.get(), y.get(), &out);
                return print(s.get(), st, out);
            };
        });
    }

    bool tilde = false;
    auto* torsion_cmd = app.add_subcommand("torsion", "torsion nabla_x y - nabla_y x - [x,y]_m");
    two_fields(torsion_cmd);
    torsion_cmd->add_flag("--tilde", tilde, "use nabla~ instead of nabla");
    torsion_cmd->callback([&] {
        run = [&] {
            Session s = open_session(g);
            const Field x = parse(s.get(), x_text, "x");
            const Field y = parse(s.get(), y_text, "y");
            char* out = nullptr;
            const auto op = tilde ? VIRCURV_OP_TORSION_TILDE : VIRCURV_OP_TORSION;
            const vircurv_status st = vircurv_binary(s.get(), op, x.get(), y.get(), &out);
            return print(s.get(), st, out);
        };
    });

    auto* defect_cmd = app.add_subcommand("metric-defect", "B(D_x y, z) + B(y, D_x z)");
    two_fields(defect_cmd);
    defect_cmd->add_option("z", z_text, "third field")->required();
    defect_cmd->add_flag("--tilde", tilde, "use nabla~ instead of nabla");
    defect_cmd->callback([&] {
        run = [&] {
            Session s = open_session(g);
            const Field x = parse(s.get(), x_text, "x");
            const Field y = parse(s.get(), y_text, "y");
            const Field z = parse(s.get(), z_text, "z");
            char* out = nullptr;
            const vircurv_status st = vircurv_metric_defect(s.get(), x.get(), y.get(), z.get(), tilde ? 1 : 0, &out);
            return print(s.get(), st, out);
        };
    });

    long hs_n = 0, hs_max = 0;
    auto* hs_cmd = app.add_subcommand("hs-sum", "partial sum of the Hilbert-Schmidt series of nabla~ along f_n");
    hs_cmd->add_option("--n", hs_n, "direction index n >= 1")->required();
    hs_cmd->add_option("--max", hs_max, "last summed mode M >= 1")->required();
    hs_cmd->callback([&] {
        run = [&] {
            Session s = open_session(g);
            char* out = nullptr;
            const vircurv_status st = vircurv_hs_sum(s.get(), hs_n, hs_max, &out);
            return print(s.get(), st, out);
        };
    });

    long cx = 0, cy = 0, cz = 0;
    auto* curv_cmd = app.add_subcommand("curvature", "R~_{L_x, L_y} L_z for nonzero signed indices");
    curv_cmd->add_option("--x", cx, "index of L_x")->required();
    curv_cmd->add_option("--y", cy, "index of L_y")->required();
    curv_cmd->add_option("--z", cz, "index of L_z")->required();
    curv_cmd->callback([&] {
        run = [&] {
            Session s = open_session(g);
            char* out = nullptr;
            const vircurv_status st = vircurv_curvature(s.get(), cx, cy, cz, &out);
            return print(s.get(), st, out);
        };
    });

    long ricci_n = 0;
    std::vector<long> cutoffs;
    auto* ricci_cmd = app.add_subcommand("ricci", "regularized Ricci value, closed form, and partial sums");
    ricci_cmd->add_option("--n", ricci_n, "index n >= 1")->required();
    ricci_cmd->add_option("--cutoffs", cutoffs, "comma-separated cutoffs M >= n")->delimiter(',');
    ricci_cmd->callback([&] {
        run = [&] {
            Session s = open_session(g);
            char* out = nullptr;
            const vircurv_status st = vircurv_ricci(s.get(), ricci_n, cutoffs.data(), cutoffs.size(), &out);
            return print(s.get(), st, out);
        };
    });

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run an identity suite: brackets, cocycle, connection, complex, "
                                                    "curvature, ricci, or all");
    verify_cmd->add_option("suite", suite, "suite name")->required();
    verify_cmd->callback([&] {
        run = [&] {
            Session s = open_session(g);
            const long k = max_mode(g);
            int passed = 0;
            char* out = nullptr;
            const vircurv_status st = vircurv_verify(s.get(), suite.c_str(), k, &passed, &out);
            return print(s.get(), st, out, passed);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run ? run() : 2;
    } catch (const Exit& e) {
        return e.code;
    }
}
