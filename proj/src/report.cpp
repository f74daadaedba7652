#include "vircurv/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "vircurv/errors.hpp"
#include "vircurv/field_parser.hpp"

namespace vircurv {

using Json = nlohmann::ordered_json;

std::string_view to_string(Format format) {
    switch (format) {
    case Format::text: return "text";
    case Format::json: return "json";
    case Format::csv: return "csv";
    }
    return "text";
}

Format parse_format(std::string_view text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw UsageError("unknown format '" + std::string(text) + "' (expected text, json, or csv)");
}

namespace {

Json header(std::string_view command, const CentralParams& params) {
    Json j;
    j["schema_version"] = 1;
    j["command"] = std::string(command);
    j["params"] = {{"c", params.c().str()}, {"h", params.h().str()}};
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json field_terms(const TrigField& x) {
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms())
        terms.push_back({{"k", k}, {"a", c.cos_coeff.str()}, {"b", c.sin_coeff.str()}});
    return terms;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string out;
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out += ",";
        first = false;
        out += csv_cell(c);
    }
    return out + "\n";
}

std::string field_csv(const TrigField& x) {
    std::string out = csv_row({"k", "a_k", "b_k"});
    for (const auto& [k, c] : x.terms()) out += csv_row({std::to_string(k), c.cos_coeff.str(), c.sin_coeff.str()});
    return out;
}

// Left-aligned columns separated by two spaces, no trailing blanks.
class Table {
public:
    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string str() const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_) {
            width.resize(std::max(width.size(), r.size()));
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        }
        std::string out;
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
            }
            out += line + "\n";
        }
        return out;
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

} // namespace

std::string emit_field(std::string_view command, const CentralParams& params, const TrigField& x, Format format) {
    switch (format) {
    case Format::text: return format_field(x) + "\n";
    case Format::csv: return field_csv(x);
    case Format::json: {
        Json j = header(command, params);
        j["field"] = format_field(x);
        j["terms"] = field_terms(x);
        return dump(j);
    }
    }
    return {};
}

std::string emit_scalar(std::string_view command, const CentralParams& params, const Rational& value, Format format) {
    switch (format) {
    case Format::text: return value.str() + "\n";
    case Format::csv: return csv_row({"quantity", "value"}) + csv_row({std::string(command), value.str()});
    case Format::json: {
        Json j = header(command, params);
        j["value"] = value.str();
        return dump(j);
    }
    }
    return {};
}

std::string emit_virasoro(std::string_view command, const CentralParams& params, const VirasoroElement& x,
                          Format format) {
    switch (format) {
    case Format::text: return "central  " + x.central.str() + "\nfield    " + format_field(x.field) + "\n";
    case Format::csv: {
        std::string out = csv_row({"k", "a_k", "b_k"});
        out += csv_row({"kappa", x.central.str(), "0"});
        for (const auto& [k, c] : x.field.terms())
            out += csv_row({std::to_string(k), c.cos_coeff.str(), c.sin_coeff.str()});
        return out;
    }
    case Format::json: {
        Json j = header(command, params);
        j["central"] = x.central.str();
        j["field"] = format_field(x.field);
        j["terms"] = field_terms(x.field);
        return dump(j);
    }
    }
    return {};
}

std::string emit_complex(std::string_view command, const CentralParams& params, const ComplexField& z,
                         Format format) {
    switch (format) {
    case Format::text: return z.str() + "\n";
    case Format::csv: {
        std::string out = csv_row({"k", "re", "im"});
        for (const auto& [k, w] : z.terms()) out += csv_row({std::to_string(k), w.re.str(), w.im.str()});
        return out;
    }
    case Format::json: {
        Json j = header(command, params);
        j["value"] = z.str();
        Json terms = Json::array();
        for (const auto& [k, w] : z.terms()) terms.push_back({{"k", k}, {"re", w.re.str()}, {"im", w.im.str()}});
        j["terms"] = std::move(terms);
        return dump(j);
    }
    }
    return {};
}

std::string emit_ricci(const RicciReport& r, Format format) {
    switch (format) {
    case Format::text: {
        Table head;
        head.row({"n", std::to_string(r.n)});
        head.row({"theta_n", r.theta_n.str()});
        head.row({"regularized", r.regularized.str()});
        head.row({"closed_form", r.closed_form.str()});
        head.row({"agrees", r.agrees() ? "yes" : "no"});
        std::string out = head.str();
        if (!r.partial.empty()) {
            Table cut;
            cut.row({"M", "partial_sum", "boundary_term", "partial_sum + boundary_term"});
            for (const auto& p : r.partial)
                cut.row({std::to_string(p.max_m), p.partial_sum.str(), p.boundary_term.str(),
                         (p.partial_sum + p.boundary_term).str()});
            out += "\n" + cut.str();
        }
        return out;
    }
    case Format::csv: {
        std::string out = csv_row({"n", "M", "partial_sum", "boundary_term", "regularized", "closed_form"});
        const std::string n = std::to_string(r.n);
        if (r.partial.empty()) out += csv_row({n, "", "", "", r.regularized.str(), r.closed_form.str()});
        for (const auto& p : r.partial)
            out += csv_row({n, std::to_string(p.max_m), p.partial_sum.str(), p.boundary_term.str(), r.regularized.str(),
                            r.closed_form.str()});
        return out;
    }
    case Format::json: {
        Json j = header("ricci", r.params);
        j["n"] = r.n;
        j["theta_n"] = r.theta_n.str();
        j["regularized"] = r.regularized.str();
        j["closed_form"] = r.closed_form.str();
        j["agrees"] = r.agrees();
        Json partial = Json::array();
        for (const auto& p : r.partial)
            partial.push_back({{"M", p.max_m},
                               {"partial_sum", p.partial_sum.str()},
                               {"boundary_term", p.boundary_term.str()}});
        j["partial"] = std::move(partial);
        return dump(j);
    }
    }
    return {};
}

std::string emit_verification(const VerificationReport& report, Format format, bool timing) {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& c : report.checks) ++counts[static_cast<int>(c.status)];

    switch (format) {
    case Format::text: {
        std::ostringstream out;
        out << "suite " << report.suite << "  c=" << report.params.c().str() << "  h=" << report.params.h().str()
            << "  max-mode=" << report.max_mode << "\n\n";
        Table t;
        t.row({"status", "suite", "cases", "check", "range"});
        for (const auto& c : report.checks)
            t.row({std::string(to_string(c.status)), c.suite, std::to_string(c.cases), c.name, c.range});
        out << t.str();
        bool first = true;
        for (const auto& c : report.checks) {
            if (!c.counterexample && c.note.empty()) continue;
            if (first) out << "\n";
            first = false;
            out << c.suite << ": " << c.name << "\n";
            if (!c.note.empty()) out << "  " << c.note << "\n";
            if (c.counterexample) {
                out << "  inputs " << c.counterexample->inputs << "\n";
                out << "  lhs    " << c.counterexample->lhs << "\n";
                out << "  rhs    " << c.counterexample->rhs << "\n";
            }
        }
        out << "\n" << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " info";
        if (timing) out << "  (" << static_cast<long long>(report.elapsed_ms) << " ms)";
        out << "\n";
        return out.str();
    }
    case Format::csv: {
        std::string out = csv_row({"suite", "check", "range", "status", "cases", "inputs", "lhs", "rhs", "note"});
        for (const auto& c : report.checks) {
            const Counterexample cx = c.counterexample.value_or(Counterexample{});
            out += csv_row({c.suite, c.name, c.range, std::string(to_string(c.status)), std::to_string(c.cases),
                            cx.inputs, cx.lhs, cx.rhs, c.note});
        }
        return out;
    }
    case Format::json: {
        Json j = header("verify", report.params);
        j["suite"] = report.suite;
        j["max_mode"] = report.max_mode;
        j["passed"] = report.all_passed();
        j["counts"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"info", counts[2]}};
        Json checks = Json::array();
        for (const auto& c : report.checks) {
            Json e;
            e["suite"] = c.suite;
            e["name"] = c.name;
            e["range"] = c.range;
            e["status"] = std::string(to_string(c.status));
            e["cases"] = c.cases;
            if (c.counterexample)
                e["counterexample"] = {{"inputs", c.counterexample->inputs},
                                       {"lhs", c.counterexample->lhs},
                                       {"rhs", c.counterexample->rhs}};
            if (!c.note.empty()) e["note"] = c.note;
            checks.push_back(std::move(e));
        }
        j["checks"] = std::move(checks);
        if (timing) j["elapsed_ms"] = static_cast<long long>(report.elapsed_ms);
        return dump(j);
    }
    }
    return {};
}

} // namespace vircurv
