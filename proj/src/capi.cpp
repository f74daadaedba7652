#include "vircurv/vircurv.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "vircurv/errors.hpp"
#include "vircurv/field_parser.hpp"
#include "vircurv/report.hpp"

struct vircurv_session {
    vircurv::CentralParams params = vircurv::CentralParams::cubic();
    vircurv::SignConvention convention = vircurv::SignConvention::paper;
    vircurv::Format format = vircurv::Format::text;
    unsigned threads = 1;
    bool timing = false;
    std::string error;
    long error_offset = -1;
};

struct vircurv_field {
    vircurv::TrigField value;
};

namespace {

using namespace vircurv;

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

vircurv_status fail(vircurv_session* s, vircurv_status status, const std::string& message, long offset = -1) {
    if (s) {
        s->error = message;
        s->error_offset = offset;
    }
    return status;
}

// Runs `body`, translating engine exceptions into status codes.
template <class Body>
vircurv_status guarded(vircurv_session* s, Body body) {
    if (!s) return VIRCURV_ERR_USAGE;
    s->error.clear();
    s->error_offset = -1;
    try {
        body();
        return VIRCURV_OK;
    } catch (const ParseError& e) {
        return fail(s, VIRCURV_ERR_PARSE, e.what(), static_cast<long>(e.offset()));
    } catch (const DomainError& e) {
        return fail(s, VIRCURV_ERR_DOMAIN, e.what());
    } catch (const ParameterError& e) {
        return fail(s, VIRCURV_ERR_PARAMETER, e.what());
    } catch (const UsageError& e) {
        return fail(s, VIRCURV_ERR_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(s, VIRCURV_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(s, VIRCURV_ERR_INTERNAL, "unknown error");
    }
}

void need(bool ok, const char* what) {
    if (!ok) throw UsageError(std::string("null argument: ") + what);
}

template <class Body>
vircurv_status emit(vircurv_session* s, char** out, Body body) {
    return guarded(s, [&] {
        need(out != nullptr, "out");
        const std::string text = body();
        *out = copy_out(text);
        if (!*out) throw std::bad_alloc();
    });
}

const char* op_name(vircurv_binary_op op) {
    switch (op) {
    case VIRCURV_OP_BRACKET: return "bracket";
    case VIRCURV_OP_U_TENSOR: return "u-tensor";
    case VIRCURV_OP_NABLA: return "nabla";
    case VIRCURV_OP_NABLA_TILDE: return "nabla-tilde";
    case VIRCURV_OP_NIJENHUIS: return "nijenhuis";
    case VIRCURV_OP_Q_TENSOR: return "q-tensor";
    case VIRCURV_OP_NABLA_J: return "nabla-j";
    case VIRCURV_OP_TORSION: return "torsion";
    case VIRCURV_OP_TORSION_TILDE: return "torsion-tilde";
    }
    return nullptr;
}

TrigField apply_op(const vircurv_session& s, vircurv_binary_op op, const TrigField& x, const TrigField& y) {
    const CentralParams& p = s.params;
    const SignConvention c = s.convention;
    switch (op) {
    case VIRCURV_OP_BRACKET: return bracket(x, y);
    case VIRCURV_OP_U_TENSOR: return u_tensor(p, x, y, c);
    case VIRCURV_OP_NABLA: return nabla(p, x, y, c);
    case VIRCURV_OP_NABLA_TILDE: return nabla_tilde(p, x, y, c);
    case VIRCURV_OP_NIJENHUIS: return nijenhuis(x, y);
    case VIRCURV_OP_Q_TENSOR: return q_tensor(p, x, y, c);
    case VIRCURV_OP_NABLA_J: return nabla_J(p, x, y, c);
    case VIRCURV_OP_TORSION: return torsion_nabla(p, x, y, c);
    case VIRCURV_OP_TORSION_TILDE: return torsion_tilde(p, x, y, c);
    }
    throw UsageError("unknown operation");
}

int signed_index(long k, const char* what) {
    if (k == 0) throw DomainError(std::string(what) + ": index must be nonzero (L_0 is the rotation direction)");
    if (k > 1'000'000 || k < -1'000'000) throw DomainError(std::string(what) + ": index out of range");
    return static_cast<int>(k);
}

} // namespace

extern "C" {

const char* vircurv_version(void) { return "1.0.0"; }

vircurv_status vircurv_session_create(vircurv_session** out) {
    if (!out) return VIRCURV_ERR_USAGE;
    *out = new (std::nothrow) vircurv_session();
    return *out ? VIRCURV_OK : VIRCURV_ERR_INTERNAL;
}

void vircurv_session_destroy(vircurv_session* session) { delete session; }

vircurv_status vircurv_session_set_params(vircurv_session* session, const char* c, const char* h) {
    return guarded(session, [&] {
        need(c && h, "c/h");
        Rational cv;
        try {
            cv = parse_scalar(c);
        } catch (const ParseError& e) {
            throw ParseError(e.offset(), e.expected() + " in c");
        }
        Rational hv;
        try {
            hv = parse_scalar(h);
        } catch (const ParseError& e) {
            throw ParseError(e.offset(), e.expected() + " in h");
        }
        session->params = CentralParams(cv, hv);
    });
}

vircurv_status vircurv_session_set_convention(vircurv_session* session, vircurv_convention convention) {
    return guarded(session, [&] {
        if (convention == VIRCURV_CONVENTION_PAPER)
            session->convention = SignConvention::paper;
        else if (convention == VIRCURV_CONVENTION_NOMIZU)
            session->convention = SignConvention::nomizu;
        else
            throw UsageError("unknown convention");
    });
}

vircurv_status vircurv_session_set_format(vircurv_session* session, vircurv_format format) {
    return guarded(session, [&] {
        switch (format) {
        case VIRCURV_FORMAT_TEXT: session->format = Format::text; return;
        case VIRCURV_FORMAT_JSON: session->format = Format::json; return;
        case VIRCURV_FORMAT_CSV: session->format = Format::csv; return;
        }
        throw UsageError("unknown format");
    });
}

vircurv_status vircurv_session_set_threads(vircurv_session* session, unsigned threads) {
    return guarded(session, [&] {
        if (threads < 1) throw UsageError("threads must be >= 1");
        session->threads = threads;
    });
}

vircurv_status vircurv_session_set_timing(vircurv_session* session, int enabled) {
    return guarded(session, [&] { session->timing = enabled != 0; });
}

const char* vircurv_last_error(const vircurv_session* session) { return session ? session->error.c_str() : ""; }

long vircurv_last_error_offset(const vircurv_session* session) { return session ? session->error_offset : -1; }

vircurv_status vircurv_field_parse(vircurv_session* session, const char* text, vircurv_field** out) {
    return guarded(session, [&] {
        need(text && out, "text/out");
        *out = new vircurv_field{parse_field(text)};
    });
}

void vircurv_field_destroy(vircurv_field* field) { delete field; }

vircurv_status vircurv_field_render(vircurv_session* session, const vircurv_field* field, char** out) {
    return emit(session, out, [&] {
        need(field, "field");
        return format_field(field->value);
    });
}

vircurv_status vircurv_binary(vircurv_session* session, vircurv_binary_op op, const vircurv_field* x,
                              const vircurv_field* y, char** out) {
    return emit(session, out, [&] {
        need(x && y, "x/y");
        const char* name = op_name(op);
        if (!name) throw UsageError("unknown operation");
        return emit_field(name, session->params, apply_op(*session, op, x->value, y->value), session->format);
    });
}

vircurv_status vircurv_virasoro_bracket(vircurv_session* session, const vircurv_field* x, const vircurv_field* y,
                                        char** out) {
    return emit(session, out, [&] {
        need(x && y, "x/y");
        const VirasoroElement v =
            virasoro_bracket(session->params, VirasoroElement::of(x->value), VirasoroElement::of(y->value));
        return emit_virasoro("bracket", session->params, v, session->format);
    });
}

vircurv_status vircurv_cocycle(vircurv_session* session, const vircurv_field* x, const vircurv_field* y, char** out) {
    return emit(session, out, [&] {
        need(x && y, "x/y");
        return emit_scalar("cocycle", session->params, cocycle(session->params, x->value, y->value), session->format);
    });
}

vircurv_status vircurv_inner(vircurv_session* session, const vircurv_field* x, const vircurv_field* y, char** out) {
    return emit(session, out, [&] {
        need(x && y, "x/y");
        return emit_scalar("inner", session->params, inner_B(session->params, x->value, y->value), session->format);
    });
}

vircurv_status vircurv_metric_defect(vircurv_session* session, const vircurv_field* x, const vircurv_field* y,
                                     const vircurv_field* z, int tilde, char** out) {
    return emit(session, out, [&] {
        need(x && y && z, "x/y/z");
        const Rational v = tilde ? tilde_metric_defect(session->params, x->value, y->value, z->value, session->convention)
                                 : metric_defect(session->params, x->value, y->value, z->value, session->convention);
        return emit_scalar("metric-defect", session->params, v, session->format);
    });
}

vircurv_status vircurv_hs_sum(vircurv_session* session, long n, long max_m, char** out) {
    return emit(session, out, [&] {
        return emit_scalar("hs-sum", session->params, hs_partial_sum(session->params, n, max_m), session->format);
    });
}

vircurv_status vircurv_curvature(vircurv_session* session, long x, long y, long z, char** out) {
    return emit(session, out, [&] {
        const ComplexField r = curvature(session->params, L(signed_index(x, "x")), L(signed_index(y, "y")),
                                         L(signed_index(z, "z")));
        return emit_complex("curvature", session->params, r, session->format);
    });
}

vircurv_status vircurv_ricci(vircurv_session* session, long n, const long* cutoffs, size_t count, char** out) {
    return emit(session, out, [&] {
        need(count == 0 || cutoffs, "cutoffs");
        const std::vector<long> cuts(cutoffs, cutoffs + count);
        return emit_ricci(ricci_report(session->params, n, cuts), session->format);
    });
}

vircurv_status vircurv_verify(vircurv_session* session, const char* suite, long max_mode, int* all_passed,
                              char** out) {
    return emit(session, out, [&] {
        need(suite && all_passed, "suite/all_passed");
        const VerificationReport report = run_verify(suite, session->params, max_mode, session->threads);
        *all_passed = report.all_passed() ? 1 : 0;
        return emit_verification(report, session->format, session->timing);
    });
}

void vircurv_string_free(char* text) { std::free(text); }

int vircurv_exit_code(vircurv_status status, int all_passed) {
    switch (status) {
    case VIRCURV_OK: return all_passed ? 0 : 1;
    case VIRCURV_ERR_PARSE:
    case VIRCURV_ERR_DOMAIN:
    case VIRCURV_ERR_PARAMETER:
    case VIRCURV_ERR_USAGE: return 2;
    case VIRCURV_ERR_INTERNAL: return 3;
    }
    return 3;
}

} // extern "C"
