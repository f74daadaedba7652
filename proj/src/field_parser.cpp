#include "vircurv/field_parser.hpp"

#include "vircurv/errors.hpp"

namespace vircurv {

namespace {

constexpr int kMaxMode = 1'000'000;

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }
bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; }

class FieldParser {
public:
    explicit FieldParser(std::string_view text) : text_(text) {}

    TrigField parse() {
        TrigField out;
        skip_ws();
        Rational sign(1);
        if (peek('+') || peek('-')) {
            sign = text_[pos_] == '-' ? Rational(-1) : Rational(1);
            ++pos_;
            skip_ws();
        }
        parse_term(out, sign);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (!peek('+') && !peek('-')) fail("expected '+', '-', or end of input");
            sign = text_[pos_] == '-' ? Rational(-1) : Rational(1);
            ++pos_;
            skip_ws();
            parse_term(out, sign);
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    bool peek(char ch) const { return !at_end() && text_[pos_] == ch; }
    bool peek_word(std::string_view word) const { return text_.substr(pos_, word.size()) == word; }

    void skip_ws() {
        while (!at_end() && is_space(text_[pos_])) ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

    void expect(char ch) {
        skip_ws();
        if (!peek(ch)) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    mpz_class parse_digits() {
        const std::size_t begin = pos_;
        while (!at_end() && is_digit(text_[pos_])) ++pos_;
        if (pos_ == begin) fail("expected digit");
        return mpz_class(std::string(text_.substr(begin, pos_ - begin)), 10);
    }

    Rational parse_scalar_literal() {
        mpz_class num = parse_digits();
        skip_ws();
        if (!peek('/')) return Rational(num);
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        mpz_class den = parse_digits();
        if (den == 0) throw ParseError(den_pos, "expected nonzero denominator");
        return Rational(num, den);
    }

    void parse_term(TrigField& out, const Rational& sign) {
        if (at_end()) fail("expected cos, sin, or number");
        if (is_digit(text_[pos_])) {
            Rational scale = parse_scalar_literal();
            skip_ws();
            if (peek('*')) {
                ++pos_;
                skip_ws();
                parse_primitive(out, sign * scale);
            } else {
                out.add_term(f(0), sign * scale);
            }
            return;
        }
        parse_primitive(out, sign);
    }

    void parse_primitive(TrigField& out, const Rational& scale) {
        BasisKind kind;
        if (peek_word("cos"))
            kind = BasisKind::cos;
        else if (peek_word("sin"))
            kind = BasisKind::sin;
        else
            fail("expected cos, sin, or number");
        pos_ += 3;
        expect('(');
        skip_ws();
        if (peek('-')) fail("expected nonnegative mode");
        int mode = 1;
        if (!at_end() && is_digit(text_[pos_])) {
            const std::size_t mode_pos = pos_;
            const mpz_class digits = parse_digits();
            if (digits > kMaxMode) throw ParseError(mode_pos, "expected mode <= " + std::to_string(kMaxMode));
            mode = static_cast<int>(digits.get_si());
            if (kind == BasisKind::sin && mode == 0) throw ParseError(mode_pos, "expected positive mode for sin");
        }
        skip_ws();
        if (!peek('t')) fail("expected 't'");
        ++pos_;
        expect(')');
        out.add_term({kind, mode}, scale);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void append_term(std::string& out, const Rational& value, const std::string& primitive) {
    const bool negative = value.sign() < 0;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    const Rational magnitude = abs(value);
    if (primitive.empty())
        out += magnitude.str();
    else if (magnitude == Rational(1))
        out += primitive;
    else
        out += magnitude.str() + "*" + primitive;
}

} // namespace

TrigField parse_field(std::string_view text) { return FieldParser(text).parse(); }

std::string format_field(const TrigField& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : x.terms()) {
        if (!c.cos_coeff.is_zero())
            append_term(out, c.cos_coeff, k == 0 ? std::string() : "cos(" + std::to_string(k) + "t)");
        if (!c.sin_coeff.is_zero()) append_term(out, c.sin_coeff, "sin(" + std::to_string(k) + "t)");
    }
    return out;
}

} // namespace vircurv
