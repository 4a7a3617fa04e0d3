#include "bcwb/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace bcwb {

namespace {

enum class Tok { Ident, Int, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const Token& at, const std::string& expected) const {
        throw ParseError(ErrorKind::SyntaxError,
                         "syntax error at line " + std::to_string(at.line) + ", column " +
                             std::to_string(at.col) + ": expected " + expected + ", found " +
                             (at.kind == Tok::End ? "end of input" : "'" + at.text + "'"),
                         at.line, at.col);
    }

  private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        current_ = Token{Tok::End, "", line_, col_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                take();
            current_.kind = Tok::Ident;
            current_.text = text_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) take();
            current_.kind = Tok::Int;
            current_.text = text_.substr(start, pos_ - start);
        } else {
            current_.kind = Tok::Symbol;
            current_.text = std::string(1, c);
            take();
        }
    }

    void take() {
        ++pos_;
        ++col_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;
};

bool is_symbol(const Token& t, const char* s) { return t.kind == Tok::Symbol && t.text == s; }

struct FormParser {
    Lexer& lex;
    int n;

    std::optional<Generator> try_generator() {
        const Token& t = lex.peek();
        if (t.kind != Tok::Ident) return std::nullopt;
        bool barred;
        std::string digits;
        if (t.text.size() > 1 && t.text[0] == 'w' && all_digits(t.text.substr(1))) {
            barred = false;
            digits = t.text.substr(1);
        } else if (t.text.size() > 2 && t.text.compare(0, 2, "cw") == 0 && all_digits(t.text.substr(2))) {
            barred = true;
            digits = t.text.substr(2);
        } else {
            return std::nullopt;
        }
        Token tok = lex.next();
        int idx = std::stoi(digits);
        if (idx < 1 || idx > n)
            throw ParseError(ErrorKind::IndexOutOfRange,
                             "generator index " + digits + " outside 1.." + std::to_string(n) + " at line " +
                                 std::to_string(tok.line),
                             tok.line, tok.col);
        return Generator{idx, barred};
    }

    static bool all_digits(const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    }

    Rational rational() {
        const Token& t = lex.peek();
        if (t.kind != Tok::Int) lex.fail(t, "a number");
        Rational num(boost::multiprecision::cpp_int(lex.next().text));
        if (is_symbol(lex.peek(), "/")) {
            lex.next();
            const Token& d = lex.peek();
            if (d.kind != Tok::Int) lex.fail(d, "a denominator");
            Rational den(boost::multiprecision::cpp_int(lex.next().text));
            if (den == 0) lex.fail(d, "a nonzero denominator");
            num /= den;
        }
        return num;
    }

    // RAT [("+"|"-") RAT ["*"] "i"] | RAT ["*"] "i" | "i", optionally signed.
    GaussianRational scalar() {
        int sign = 1;
        while (is_symbol(lex.peek(), "+") || is_symbol(lex.peek(), "-")) {
            if (lex.next().text == "-") sign = -sign;
        }
        if (lex.peek().kind == Tok::Ident && lex.peek().text == "i") {
            lex.next();
            return {Rational(0), Rational(sign)};
        }
        Rational first = rational() * sign;
        if (lex.peek().kind == Tok::Ident && lex.peek().text == "i") {
            lex.next();
            return {Rational(0), first};
        }
        if (is_symbol(lex.peek(), "*")) {
            // could be "RAT * i" inside parentheses; the caller handles the
            // "coeff * monomial" case before entering here
            Token star = lex.next();
            if (lex.peek().kind == Tok::Ident && lex.peek().text == "i") {
                lex.next();
                return {Rational(0), first};
            }
            lex.fail(star, "'i' after '*'");
        }
        if (is_symbol(lex.peek(), "+") || is_symbol(lex.peek(), "-")) {
            int s2 = lex.next().text == "-" ? -1 : 1;
            Rational second = rational() * s2;
            if (is_symbol(lex.peek(), "*")) lex.next();
            const Token& t = lex.peek();
            if (!(t.kind == Tok::Ident && t.text == "i")) lex.fail(t, "'i'");
            lex.next();
            return {first, second};
        }
        return {first, Rational(0)};
    }

    // [coeff "*"] gen ("^" gen)* | coeff
    Form term() {
        GaussianRational coeff(1);
        bool saw_coeff = false;
        const Token& t = lex.peek();
        if (t.kind == Tok::Int) {
            coeff = GaussianRational(rational());
            saw_coeff = true;
        } else if (is_symbol(t, "(")) {
            lex.next();
            coeff = scalar();
            const Token& close = lex.peek();
            if (!is_symbol(close, ")")) lex.fail(close, "')'");
            lex.next();
            saw_coeff = true;
        } else if (t.kind == Tok::Ident && t.text == "i") {
            lex.next();
            coeff = GaussianRational::i();
            saw_coeff = true;
        }

        if (saw_coeff) {
            if (is_symbol(lex.peek(), "*"))
                lex.next();
            else
                return Form(n, Monomial{}, coeff);  // bare scalar term
        }

        std::vector<Generator> factors;
        std::optional<Generator> g = try_generator();
        if (!g) lex.fail(lex.peek(), "a generator");
        factors.push_back(*g);
        while (is_symbol(lex.peek(), "^")) {
            lex.next();
            std::optional<Generator> h = try_generator();
            if (!h) lex.fail(lex.peek(), "a generator after '^'");
            factors.push_back(*h);
        }
        auto [sgn, mono] = canonicalize_monomial(factors, n);
        Form f(n);
        if (sgn != 0) f.add_term(mono, GaussianRational(sgn) * coeff);
        return f;
    }

    Form expression() {
        Form out(n);
        int sign = 1;
        if (is_symbol(lex.peek(), "-")) {
            lex.next();
            sign = -1;
        } else if (is_symbol(lex.peek(), "+")) {
            lex.next();
        }
        // allow a literal "0"
        if (lex.peek().kind == Tok::Int && lex.peek().text == "0") {
            Token zero = lex.next();
            if (!is_symbol(lex.peek(), "/") && !is_symbol(lex.peek(), "*")) return out;
            lex.fail(zero, "a plain 0");
        }
        out += GaussianRational(sign) * term();
        while (is_symbol(lex.peek(), "+") || is_symbol(lex.peek(), "-")) {
            int s = lex.next().text == "-" ? -1 : 1;
            out += GaussianRational(s) * term();
        }
        return out;
    }
};

void expect_keyword(Lexer& lex, const char* word) {
    const Token& t = lex.peek();
    if (t.kind != Tok::Ident || t.text != word) lex.fail(t, std::string("'") + word + "'");
    lex.next();
}

void expect_symbol(Lexer& lex, const char* s) {
    const Token& t = lex.peek();
    if (!is_symbol(t, s)) lex.fail(t, std::string("'") + s + "'");
    lex.next();
}

}  // namespace

LieModel parse_model(const std::string& text) {
    Lexer lex(text);
    expect_keyword(lex, "model");
    const Token& name_tok = lex.peek();
    if (name_tok.kind != Tok::Ident) lex.fail(name_tok, "a model name");
    std::string name = lex.next().text;
    expect_symbol(lex, "{");
    expect_keyword(lex, "dim");
    const Token& dim_tok = lex.peek();
    if (dim_tok.kind != Tok::Int) lex.fail(dim_tok, "the complex dimension");
    int n = std::stoi(lex.next().text);
    if (n < 1 || n > 16)
        throw ParseError(ErrorKind::IndexOutOfRange, "dim must be between 1 and 16", dim_tok.line,
                         dim_tok.col);

    LieModel model;
    model.name = name;
    model.n = n;
    model.structure.assign(static_cast<std::size_t>(n), Form(n));
    std::map<int, bool> declared;

    FormParser fp{lex, n};
    while (lex.peek().kind == Tok::Ident && lex.peek().text == "d") {
        lex.next();
        Token gen_tok = lex.peek();
        std::optional<Generator> g = fp.try_generator();
        if (!g) lex.fail(gen_tok, "a generator after 'd'");
        if (g->barred)
            throw ParseError(ErrorKind::SyntaxError,
                             "conjugate generator cw" + std::to_string(g->index) +
                                 " cannot appear on a left-hand side (line " +
                                 std::to_string(gen_tok.line) + ")",
                             gen_tok.line, gen_tok.col);
        if (declared.count(g->index))
            throw ParseError(ErrorKind::DuplicateDeclaration,
                             "d w" + std::to_string(g->index) + " declared twice (line " +
                                 std::to_string(gen_tok.line) + ")",
                             gen_tok.line, gen_tok.col);
        expect_symbol(lex, "=");
        Form rhs = fp.expression();
        for (const auto& [mono, c] : rhs.terms()) {
            if (mono.degree() != 2)
                throw ParseError(ErrorKind::SyntaxError,
                                 "structure equation right-hand side must be a 2-form (line " +
                                     std::to_string(gen_tok.line) + ")",
                                 gen_tok.line, gen_tok.col);
            if (mono.t() == 2)
                throw ParseError(ErrorKind::IntegrabilityError,
                                 "(0,2)-monomial " + to_dsl_string(mono) + " in d w" +
                                     std::to_string(g->index) + " violates integrability (line " +
                                     std::to_string(gen_tok.line) + ")",
                                 gen_tok.line, gen_tok.col);
        }
        model.structure[static_cast<std::size_t>(g->index - 1)] = rhs;
        declared[g->index] = true;
    }
    expect_symbol(lex, "}");
    if (lex.peek().kind != Tok::End) lex.fail(lex.peek(), "end of input");

    for (int k = 1; k <= n; ++k) {
        if (!declared.count(k))
            throw ParseError(ErrorKind::MissingDeclaration, "no declaration for d w" + std::to_string(k), 1,
                             1);
    }
    return model;
}

Form parse_form(const std::string& text, int n) {
    Lexer lex(text);
    FormParser fp{lex, n};
    Form f = fp.expression();
    if (lex.peek().kind != Tok::End) lex.fail(lex.peek(), "end of expression");
    return f;
}

std::string print_model(const LieModel& m) {
    std::string out = "model " + m.name + " {\n";
    out += "  dim " + std::to_string(m.n) + "\n";
    for (int k = 1; k <= m.n; ++k) out += "  d w" + std::to_string(k) + " = " + to_dsl_string(m.d_holo(k)) + "\n";
    out += "}\n";
    return out;
}

}  // namespace bcwb
