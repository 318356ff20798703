// Element and polynomial text syntax shared by the library and the CLI.

#include <cctype>
#include <charconv>

#include "lcpqc/error.hpp"
#include "lcpqc/field.hpp"
#include "lcpqc/poly.hpp"

namespace lcpqc {

namespace {

// Recursive-descent parser for sums of products of integers, the field
// generator and (optionally) x, with implicit multiplication ("2w^3x^4").
class ExprParser {
public:
    ExprParser(std::string_view text, const Field& field, bool allow_x)
        : text_(text), field_(field), allow_x_(allow_x) {}

    Poly parse() {
        skip_ws();
        if (pos_ == text_.size()) syntax("empty input");
        Poly value = expr();
        skip_ws();
        if (pos_ != text_.size()) syntax("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void syntax(const std::string& msg) const {
        fail(ErrorKind::SyntaxError, msg + " in \"" + std::string(text_) + "\" at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool at_symbol() {
        skip_ws();
        const auto& sym = field_.symbol();
        return !sym.empty() && text_.substr(pos_, sym.size()) == sym;
    }

    bool at_factor_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || at_symbol();
    }

    std::uint64_t number() {
        skip_ws();
        std::uint64_t v = 0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr == begin) syntax("expected integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return v;
    }

    std::uint64_t exponent() {
        if (!peek('^')) return 1;
        ++pos_;
        return number();
    }

    Poly constant(Elem c) const { return Poly::constant(field_, c); }

    Poly expr() {
        Poly acc(field_);
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        Poly t = term();
        acc = negate ? acc - t : acc + t;
        while (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
            t = term();
            acc = negate ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (at_factor_start()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        skip_ws();
        if (pos_ >= text_.size()) syntax("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!peek(')')) syntax("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = number();
            if (v >= field_.characteristic()) {
                fail(ErrorKind::ValueOutOfField,
                     "integer " + std::to_string(v) + " not below characteristic " + std::to_string(field_.characteristic()));
            }
            return constant(v);
        }
        if (at_symbol()) {
            pos_ += field_.symbol().size();
            if (field_.degree() == 1) {
                fail(ErrorKind::ValueOutOfField, "prime field has no generator '" + field_.symbol() + "'");
            }
            const std::uint64_t j = exponent();
            if (j >= static_cast<std::uint64_t>(field_.degree()) && !field_.generator_is_primitive()) {
                fail(ErrorKind::NonPrimitiveGeneratorForPowerForm,
                     field_.symbol() + " is not primitive in " + field_.describe());
            }
            return constant(field_.pow(field_.generator(), j));
        }
        if (c == 'x') {
            if (!allow_x_) syntax("polynomial variable in element");
            ++pos_;
            const std::uint64_t j = exponent();
            return Poly::monomial(field_, 1, static_cast<int>(j));
        }
        syntax("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const Field& field_;
    bool allow_x_;
    std::size_t pos_ = 0;
};

}  // namespace

FieldElement elem_parse(std::string_view text, const Field& field) {
    Poly p = ExprParser(text, field, false).parse();
    return {field, p.coeff(0)};
}

Poly poly_parse(std::string_view text, const Field& field) {
    if (text.find(',') == std::string_view::npos) return ExprParser(text, field, true).parse();
    std::vector<Elem> coeffs;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        coeffs.push_back(elem_parse(token, field).value());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(field, std::move(coeffs));
}

std::string poly_format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ",";
        out += elem_format(p.field(), p.coeffs()[i]);
    }
    return out;
}

std::string poly_format_expr(const Poly& p) {
    if (p.is_zero()) return "0";
    const Field& f = p.field();
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Elem c = p.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = elem_format(f, c);
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c != 1) out += cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace lcpqc
