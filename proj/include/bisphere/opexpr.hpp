// A small operator language over s_i, d_i (partial), D_i (Dunkl) and R_i.
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | primitive | '(' expr ')'
//   primitive:= 'R'i | 'd'i | 'D'i | 's'i ('^' int)?
//   rational := int ('/' posint)?
//
// '*' is operator composition (rightmost factor acts first). Scalars commute
// with everything, so every scalar factor of a term is folded into a single
// coefficient.
#pragma once

#include "bisphere/laurent_poly.hpp"
#include "bisphere/model_params.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace bisphere {

inline constexpr const char* opexpr_grammar =
    "expr := term (('+'|'-') term)*\n"
    "term := factor ('*' factor)*\n"
    "factor := rational | primitive | '(' expr ')'\n"
    "primitive := 'R'i | 'd'i | 'D'i | 's'i ('^' int)?\n"
    "rational := int ('/' posint)?\n";

enum class OpKind { Mono, Partial, Dunkl, Refl, Scalar, Sum, Compose, ScalarMul };

/// Degree shift range [lo, hi] of an operator on monomials.
struct DegreeWindow {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

struct OpExpr {
    OpKind kind = OpKind::Scalar;
    int axis = 0;                       // Partial, Dunkl, Refl
    Exponents mono{0, 0, 0};            // Mono
    Rational scalar = 0;                // Scalar, ScalarMul
    std::vector<OpExpr> children;       // Sum, Compose, ScalarMul (one child)

    static OpExpr make_mono(const Exponents& e) {
        OpExpr x;
        x.kind = OpKind::Mono;
        x.mono = e;
        return x;
    }
    static OpExpr make_axis(OpKind k, int axis) {
        check_axis(axis);
        OpExpr x;
        x.kind = k;
        x.axis = axis;
        return x;
    }
    static OpExpr make_scalar(const Rational& r) {
        OpExpr x;
        x.kind = OpKind::Scalar;
        x.scalar = r;
        return x;
    }
    static OpExpr make_scaled(const Rational& r, OpExpr child) {
        OpExpr x;
        x.kind = OpKind::ScalarMul;
        x.scalar = r;
        x.children.push_back(std::move(child));
        return x;
    }
    static OpExpr make_nary(OpKind k, std::vector<OpExpr> children) {
        OpExpr x;
        x.kind = k;
        x.children = std::move(children);
        return x;
    }

    bool is_primitive() const {
        return kind == OpKind::Mono || kind == OpKind::Partial || kind == OpKind::Dunkl ||
               kind == OpKind::Refl;
    }

    friend bool operator==(const OpExpr&, const OpExpr&) = default;
};

inline DegreeWindow degree_window(const OpExpr& x) {
    switch (x.kind) {
        case OpKind::Mono: {
            const int s = total_degree(x.mono);
            return {s, s};
        }
        case OpKind::Partial:
        case OpKind::Dunkl: return {-1, -1};
        case OpKind::Refl:
        case OpKind::Scalar: return {0, 0};
        case OpKind::ScalarMul: return degree_window(x.children.front());
        case OpKind::Compose: {
            DegreeWindow w{0, 0};
            for (const auto& c : x.children) {
                const auto cw = degree_window(c);
                w.lo += cw.lo;
                w.hi += cw.hi;
            }
            return w;
        }
        case OpKind::Sum: {
            DegreeWindow w = degree_window(x.children.front());
            for (const auto& c : x.children) {
                const auto cw = degree_window(c);
                w.lo = std::min(w.lo, cw.lo);
                w.hi = std::max(w.hi, cw.hi);
            }
            return w;
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Parser

namespace detail {

class OpParser {
public:
    explicit OpParser(std::string_view text) : text_(text) {}

    OpExpr parse() {
        OpExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek_digit(std::size_t at) const {
        return at < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at]));
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static OpExpr negate(OpExpr t) {
        if (t.kind == OpKind::Scalar || t.kind == OpKind::ScalarMul) {
            t.scalar = -t.scalar;
            return t;
        }
        return OpExpr::make_scaled(-1, std::move(t));
    }

    OpExpr expr() {
        std::vector<OpExpr> terms;
        terms.push_back(term());
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            OpExpr t = term();
            terms.push_back(c == '-' ? negate(std::move(t)) : std::move(t));
        }
        if (terms.size() == 1) return std::move(terms.front());
        return OpExpr::make_nary(OpKind::Sum, std::move(terms));
    }

    OpExpr term() {
        Rational coef = 1;
        bool saw_scalar = false;
        std::vector<OpExpr> ops;
        // A leading '-' not followed by a digit negates the whole term.
        if (peek() == '-' && !peek_digit(pos_ + 1)) {
            ++pos_;
            coef = -1;
            saw_scalar = true;
        }
        auto absorb = [&](OpExpr f) {
            if (f.kind == OpKind::Scalar) {
                coef *= f.scalar;
                saw_scalar = true;
            } else {
                ops.push_back(std::move(f));
            }
        };
        absorb(factor());
        while (peek() == '*') {
            ++pos_;
            absorb(factor());
        }
        if (ops.empty()) return OpExpr::make_scalar(coef);
        // A lone parenthesized ScalarMul merges its coefficient into this term.
        if (ops.size() == 1 && ops.front().kind == OpKind::ScalarMul) {
            coef *= ops.front().scalar;
            OpExpr inner = std::move(ops.front().children.front());
            ops.clear();
            ops.push_back(std::move(inner));
            saw_scalar = true;
        }
        OpExpr body = ops.size() == 1 ? std::move(ops.front()) : OpExpr::make_nary(OpKind::Compose, std::move(ops));
        if (!saw_scalar || coef == 1) return body;
        if (sgn(coef) == 0) return OpExpr::make_scalar(0);
        return OpExpr::make_scaled(coef, std::move(body));
    }

    long integer(bool allow_sign) {
        skip_ws();
        const std::size_t start = pos_;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        if (!peek_digit(pos_)) fail("expected integer");
        while (peek_digit(pos_)) ++pos_;
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    OpExpr factor() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            OpExpr inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+') && peek_digit(pos_ + 1))) {
            const std::size_t start = pos_;
            std::string digits;
            if (c == '-' || c == '+') ++pos_;
            const std::size_t dstart = pos_;
            while (peek_digit(pos_)) ++pos_;
            Integer num(std::string(text_.substr(dstart, pos_ - dstart)));
            if (c == '-') num = -num;
            Integer den = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                if (!peek_digit(pos_)) fail("expected denominator");
                const std::size_t ds = pos_;
                while (peek_digit(pos_)) ++pos_;
                den = Integer(std::string(text_.substr(ds, pos_ - ds)));
                if (den == 0) throw ParseError("zero denominator", ds);
            }
            (void)start;
            Rational r(num, den);
            r.canonicalize();
            return OpExpr::make_scalar(r);
        }
        if (c == 'R' || c == 'd' || c == 'D' || c == 's') {
            const std::size_t start = pos_;
            ++pos_;
            if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '3')
                throw ParseError("unknown primitive '" + std::string(1, c) +
                                     (pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string()) + "'",
                                 start);
            const int axis = text_[pos_] - '0';
            ++pos_;
            if (peek_digit(pos_)) throw ParseError("unknown primitive", start);
            switch (c) {
                case 'R': return OpExpr::make_axis(OpKind::Refl, axis);
                case 'd': return OpExpr::make_axis(OpKind::Partial, axis);
                case 'D': return OpExpr::make_axis(OpKind::Dunkl, axis);
                default: break;
            }
            int power = 1;
            if (peek() == '^') {
                ++pos_;
                power = static_cast<int>(integer(true));
            }
            Exponents e{0, 0, 0};
            e[axis - 1] = power;
            return OpExpr::make_mono(e);
        }
        if (c == '\0') fail("unexpected end of input");
        if (std::isalpha(static_cast<unsigned char>(c))) throw ParseError("unknown primitive '" + std::string(1, c) + "'", pos_);
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace detail

inline OpExpr parse_opexpr(std::string_view text) { return detail::OpParser(text).parse(); }

// ---------------------------------------------------------------------------
// Printer

namespace detail {

inline std::string print_mono(const Exponents& e) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "s" + std::to_string(i + 1);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string print_op(const OpExpr& x);

// Operand of a composition: sums, compositions and scaled terms need parentheses.
inline std::string print_factor(const OpExpr& x) {
    if (x.kind == OpKind::Sum || x.kind == OpKind::Compose || x.kind == OpKind::ScalarMul)
        return "(" + print_op(x) + ")";
    return print_op(x);
}

inline std::string print_body(const OpExpr& x) {
    if (x.kind == OpKind::Compose) {
        std::string out;
        for (std::size_t i = 0; i < x.children.size(); ++i) {
            if (i) out += "*";
            out += print_factor(x.children[i]);
        }
        return out;
    }
    return print_factor(x);
}

inline std::string print_op(const OpExpr& x) {
    switch (x.kind) {
        case OpKind::Mono: return print_mono(x.mono);
        case OpKind::Partial: return "d" + std::to_string(x.axis);
        case OpKind::Dunkl: return "D" + std::to_string(x.axis);
        case OpKind::Refl: return "R" + std::to_string(x.axis);
        case OpKind::Scalar: return to_short(x.scalar);
        case OpKind::ScalarMul: return to_short(x.scalar) + "*" + print_body(x.children.front());
        case OpKind::Compose: return print_body(x);
        case OpKind::Sum: {
            std::string out;
            for (std::size_t i = 0; i < x.children.size(); ++i) {
                const OpExpr& c = x.children[i];
                const bool negative = (c.kind == OpKind::Scalar || c.kind == OpKind::ScalarMul) && sgn(c.scalar) < 0;
                if (i == 0) {
                    out += c.kind == OpKind::Sum ? "(" + print_op(c) + ")" : print_op(c);
                    continue;
                }
                if (!negative) {
                    out += " + ";
                    out += c.kind == OpKind::Sum ? "(" + print_op(c) + ")" : print_op(c);
                    continue;
                }
                out += " - ";
                const Rational mag = -c.scalar;
                if (c.kind == OpKind::Scalar) {
                    out += to_short(mag);
                } else if (mag == 1) {
                    out += print_body(c.children.front());
                } else {
                    out += to_short(mag) + "*" + print_body(c.children.front());
                }
            }
            return out;
        }
    }
    return {};
}

}  // namespace detail

/// Text form that parses back to an equal tree.
inline std::string to_string(const OpExpr& x) { return detail::print_op(x); }

// ---------------------------------------------------------------------------
// Symbolic action on Laurent polynomials.

inline LaurentPoly3 apply(const OpExpr& x, const LaurentPoly3& p, const ModelParams& params) {
    switch (x.kind) {
        case OpKind::Mono: return p.shifted(x.mono);
        case OpKind::Partial: return partial(p, x.axis);
        case OpKind::Dunkl: return detail::dunkl_laurent(p, x.axis, params.mu(x.axis));
        case OpKind::Refl: return reflect(p, x.axis);
        case OpKind::Scalar: return p * x.scalar;
        case OpKind::ScalarMul: return apply(x.children.front(), p, params) * x.scalar;
        case OpKind::Compose: {
            LaurentPoly3 acc = p;
            for (auto it = x.children.rbegin(); it != x.children.rend(); ++it) acc = apply(*it, acc, params);
            return acc;
        }
        case OpKind::Sum: {
            LaurentPoly3 acc;
            for (const auto& c : x.children) acc += apply(c, p, params);
            return acc;
        }
    }
    return {};
}

}  // namespace bisphere
