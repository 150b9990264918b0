#include "asw/expr.hpp"

#include <cctype>
#include <sstream>

#include "asw/witt.hpp"

namespace asw {

namespace {

struct Token {
    enum Kind { Int, Ident, Op, String, End } kind = End;
    std::string text;
    long long value = 0;
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;

    int cur() const { return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1; }
    void bump() {
        if (cur() == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance() {
        while (cur() == ' ' || cur() == '\t' || cur() == '\r' || cur() == '\n' || cur() == '#') {
            if (cur() == '#') {
                while (cur() != -1 && cur() != '\n') bump();
            } else {
                bump();
            }
        }
        tok_.line = line_;
        tok_.column = col_;
        int c = cur();
        if (c == -1) {
            tok_.kind = Token::End;
            tok_.text.clear();
            return;
        }
        if (std::isdigit(c)) {
            tok_.kind = Token::Int;
            tok_.text.clear();
            while (std::isdigit(cur())) {
                tok_.text.push_back(static_cast<char>(cur()));
                bump();
            }
            tok_.value = std::stoll(tok_.text);
            return;
        }
        if (std::isalpha(c) || c == '_') {
            tok_.kind = Token::Ident;
            tok_.text.clear();
            while (std::isalnum(cur()) || cur() == '_') {
                tok_.text.push_back(static_cast<char>(cur()));
                bump();
            }
            return;
        }
        if (c == '"') {
            bump();
            tok_.kind = Token::String;
            tok_.text.clear();
            while (cur() != '"') {
                if (cur() == -1) throw parse_error("unterminated string", tok_.line, tok_.column);
                tok_.text.push_back(static_cast<char>(cur()));
                bump();
            }
            bump();
            return;
        }
        tok_.kind = Token::Op;
        tok_.text = std::string(1, static_cast<char>(c));
        bump();
    }
};

class ExprParser {
public:
    ExprParser(Lexer& lex, int p, const std::map<std::string, Var>& vars)
        : lex_(lex), p_(p), vars_(vars) {}

    RatFunc parse() {
        RatFunc r = expression();
        const Token& t = lex_.peek();
        if (t.kind != Token::End)
            throw parse_error("unexpected token '" + t.text + "'", t.line, t.column);
        return r;
    }

private:
    Lexer& lex_;
    int p_;
    const std::map<std::string, Var>& vars_;

    bool is_op(const char* s) const {
        return lex_.peek().kind == Token::Op && lex_.peek().text == s;
    }

    RatFunc expression() {
        bool neg = false;
        while (is_op("+") || is_op("-")) {
            if (lex_.take().text == "-") neg = !neg;
        }
        RatFunc acc = term();
        if (neg) acc = -acc;
        while (is_op("+") || is_op("-")) {
            std::string op = lex_.take().text;
            RatFunc rhs = term();
            acc = (op == "+") ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (is_op("*") || is_op("/")) {
            std::string op = lex_.take().text;
            Token at = lex_.peek();
            RatFunc rhs = factor();
            if (op == "/") {
                if (rhs.is_zero()) throw parse_error("division by zero", at.line, at.column);
                acc = acc / rhs;
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    RatFunc factor() {
        RatFunc base = atom();
        if (is_op("^")) {
            Token caret = lex_.take();
            bool neg = false;
            while (is_op("+") || is_op("-"))
                if (lex_.take().text == "-") neg = !neg;
            Token t = lex_.take();
            if (t.kind != Token::Int)
                throw parse_error("exponent must be an integer literal", t.line, t.column);
            long long e = neg ? -t.value : t.value;
            if (e < 0 && base.is_zero())
                throw parse_error("division by zero", caret.line, caret.column);
            return base.pow(e);
        }
        return base;
    }

    RatFunc atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Int:
                return RatFunc::constant(p_, t.value);
            case Token::Ident: {
                auto it = vars_.find(t.text);
                if (it == vars_.end())
                    throw parse_error("unknown variable '" + t.text + "'", t.line, t.column);
                return RatFunc::variable(p_, it->second);
            }
            case Token::Op:
                if (t.text == "(") {
                    RatFunc r = expression();
                    Token close = lex_.take();
                    if (!(close.kind == Token::Op && close.text == ")"))
                        throw parse_error("expected ')'", close.line, close.column);
                    return r;
                }
                if (t.text == "-") return -atom();
                throw parse_error("unexpected '" + t.text + "'", t.line, t.column);
            default:
                throw parse_error("unexpected end of expression", t.line, t.column);
        }
    }
};

std::string name_of(Var v, const std::map<Var, std::string>& names) {
    auto it = names.find(v);
    return it != names.end() ? it->second : var_name(v);
}

}  // namespace

RatFunc parse_expression(const std::string& text, int p,
                         const std::map<std::string, Var>& vars) {
    require_supported_prime(p);
    Lexer lex(text);
    ExprParser parser(lex, p, vars);
    return parser.parse();
}

std::string expr_str(const MultiPoly& f, const std::map<Var, std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const Mono& m = it->first;
        bool printed = false;
        if (it->second != 1 || m == mono_one()) {
            os << it->second;
            printed = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            os << name_of(static_cast<Var>(i), names);
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

std::string expr_str(const RatFunc& f, const std::map<Var, std::string>& names) {
    std::string n = expr_str(f.num(), names);
    if (f.is_polynomial()) return n;
    std::string d = expr_str(f.den(), names);
    bool pn = f.num().terms().size() > 1;
    bool pd = f.den().terms().size() > 1;
    std::string out;
    out += pn ? "(" + n + ")" : n;
    out += "/";
    out += pd ? "(" + d + ")" : d;
    return out;
}

CharacterSpec parse_spec(const std::string& text) {
    Lexer lex(text);
    CharacterSpec spec;
    bool saw_p = false, saw_s = false, saw_mode = false, saw_components = false;
    while (lex.peek().kind != Token::End) {
        Token key = lex.take();
        if (key.kind != Token::Ident)
            throw parse_error("expected a key (p, s, mode, components)", key.line, key.column);
        Token eq = lex.take();
        if (!(eq.kind == Token::Op && eq.text == "="))
            throw parse_error("expected '=' after '" + key.text + "'", eq.line, eq.column);
        if (key.text == "p") {
            Token v = lex.take();
            if (v.kind != Token::Int) throw parse_error("p must be an integer", v.line, v.column);
            if (!is_supported_prime(static_cast<int>(v.value)))
                throw parse_error("p must be prime in {2,3,5,7}", v.line, v.column);
            spec.p = static_cast<int>(v.value);
            saw_p = true;
        } else if (key.text == "s") {
            Token v = lex.take();
            if (v.kind != Token::Int || v.value < 1)
                throw parse_error("s must be a positive integer", v.line, v.column);
            spec.s = static_cast<int>(v.value);
            saw_s = true;
        } else if (key.text == "mode") {
            Token v = lex.take();
            if (v.kind != Token::Ident || (v.text != "local" && v.text != "global"))
                throw parse_error("mode must be local or global", v.line, v.column);
            spec.mode = v.text;
            saw_mode = true;
        } else if (key.text == "components") {
            Token open = lex.take();
            if (!(open.kind == Token::Op && open.text == "["))
                throw parse_error("components must be a bracketed list", open.line, open.column);
            while (true) {
                Token t = lex.take();
                if (t.kind == Token::Op && t.text == "]") break;
                if (t.kind != Token::String)
                    throw parse_error("expected a quoted expression", t.line, t.column);
                spec.components.push_back(t.text);
                if (lex.peek().kind == Token::Op && lex.peek().text == ",") lex.take();
            }
            saw_components = true;
        } else {
            throw parse_error("unknown key '" + key.text + "'", key.line, key.column);
        }
    }
    if (!saw_p) throw parse_error("missing key: p", 1, 1);
    if (!saw_s) throw parse_error("missing key: s", 1, 1);
    if (!saw_mode) throw parse_error("missing key: mode", 1, 1);
    if (!saw_components) throw parse_error("missing key: components", 1, 1);
    if (!witt_size_supported(spec.p, spec.s))
        throw parse_error("s over cap for p=" + std::to_string(spec.p) +
                              " (max " + std::to_string(spec.p <= 3 ? 3 : 2) + ")",
                          1, 1);
    if (static_cast<int>(spec.components.size()) != spec.s)
        throw parse_error("component count != s", 1, 1);
    return spec;
}

std::vector<RatFunc> spec_components(const CharacterSpec& spec) {
    std::map<std::string, Var> vars;
    if (spec.mode == "local") {
        vars = {{"t", Var::pi}, {"x", Var::x}};
    } else {
        vars = {{"x1", Var::x1}, {"x2", Var::x2}};
    }
    std::vector<RatFunc> out;
    out.reserve(spec.components.size());
    for (const auto& e : spec.components) out.push_back(parse_expression(e, spec.p, vars));
    return out;
}

}  // namespace asw
