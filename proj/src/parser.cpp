#include "sullivan/parser.hpp"

#include <cctype>
#include <vector>

namespace sullivan {

namespace {

struct Token {
    enum class Kind { Ident, Int, Plus, Minus, Star, Caret, Slash, Equals, Newline, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            if (c == '\n') {
                out.push_back({Token::Kind::Newline, "\n", line_, col_});
                advance();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Token t{Token::Kind::Int, "", line_, col_};
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    t.text += text_[pos_];
                    advance();
                }
                out.push_back(std::move(t));
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                Token t{Token::Kind::Ident, "", line_, col_};
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                        text_[pos_] == '\'')) {
                    t.text += text_[pos_];
                    advance();
                }
                out.push_back(std::move(t));
                continue;
            }
            Token t{Token::Kind::End, std::string(1, c), line_, col_};
            switch (c) {
                case '+': t.kind = Token::Kind::Plus; break;
                case '-': t.kind = Token::Kind::Minus; break;
                case '*': t.kind = Token::Kind::Star; break;
                case '^': t.kind = Token::Kind::Caret; break;
                case '/': t.kind = Token::Kind::Slash; break;
                case '=': t.kind = Token::Kind::Equals; break;
                default:
                    throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, col_);
            }
            out.push_back(std::move(t));
            advance();
        }
        out.push_back({Token::Kind::End, "", line_, col_});
        return out;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    SullivanAlgebra run() {
        skip_newlines();
        expect_keyword("algebra");
        std::string name = expect(Token::Kind::Ident, "algebra name").text;
        expect_newline();

        struct DiffDecl {
            std::string gen;
            size_t start;  // token index of the polynomial
            int line, col;
        };
        std::vector<Generator> gens;
        std::vector<DiffDecl> diffs;
        while (!at(Token::Kind::End)) {
            skip_newlines();
            if (at(Token::Kind::End)) break;
            Token head = expect(Token::Kind::Ident, "'gen' or 'd'");
            if (head.text == "gen") {
                Token id = expect(Token::Kind::Ident, "generator name");
                if (id.text == "gen" || id.text == "d" || id.text == "algebra")
                    throw ParseError("reserved identifier '" + id.text + "'", id.line, id.col);
                Token deg = expect(Token::Kind::Int, "codegree");
                gens.push_back({id.text, std::stoi(deg.text)});
                expect_newline();
            } else if (head.text == "d") {
                Token id = expect(Token::Kind::Ident, "generator name");
                expect(Token::Kind::Equals, "'='");
                diffs.push_back({id.text, pos_, id.line, id.col});
                while (!at(Token::Kind::Newline) && !at(Token::Kind::End)) ++pos_;
                expect_newline();
            } else {
                throw ParseError("expected 'gen' or 'd', found '" + head.text + "'", head.line, head.col);
            }
        }

        GeneratorSetPtr universe;
        try {
            universe = make_generators(gens);
        } catch (const StructuralError& e) {
            throw PreconditionError(std::string("invalid generator list: ") + e.what());
        }
        std::vector<Poly> d(static_cast<size_t>(universe->size()), Poly::zero(universe));
        for (const DiffDecl& decl : diffs) {
            int idx = universe->index_of(decl.gen);
            if (idx < 0)
                throw ParseError("differential assigned to unknown generator '" + decl.gen + "'",
                                 decl.line, decl.col);
            pos_ = decl.start;
            d[static_cast<size_t>(idx)] = parse_polynomial(universe);
        }
        SullivanAlgebra algebra(name, universe, std::move(d));
        ValidationReport rep = algebra.validate();
        if (!rep.ok()) {
            std::string msg = "model rejected:";
            for (const std::string& p : rep.problems) msg += " " + p + ";";
            throw PreconditionError(msg);
        }
        return algebra;
    }

    Poly parse_polynomial(const GeneratorSetPtr& gens) {
        Poly out = Poly::zero(gens);
        bool negative = false;
        if (at(Token::Kind::Minus)) {
            negative = true;
            ++pos_;
        } else if (at(Token::Kind::Plus)) {
            ++pos_;
        }
        out = out + parse_term(gens, negative);
        while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
            bool neg = at(Token::Kind::Minus);
            ++pos_;
            out = out + parse_term(gens, neg);
        }
        return out;
    }

private:
    Poly parse_term(const GeneratorSetPtr& gens, bool negative) {
        Rat coeff = negative ? Rat(-1) : Rat(1);
        if (at(Token::Kind::Int)) {
            Token num = tokens_[pos_++];
            Rat value(num.text);
            if (at(Token::Kind::Slash)) {
                ++pos_;
                Token den = expect(Token::Kind::Int, "denominator");
                if (den.text == "0") throw ParseError("zero denominator", den.line, den.col);
                value /= Rat(den.text);
            }
            coeff *= value;
            if (value == 0) {
                // A bare zero term is accepted as the zero polynomial.
                if (!at(Token::Kind::Star)) return Poly::zero(gens);
            }
            expect(Token::Kind::Star, "'*' after coefficient");
        }
        Poly out = Poly::unit(gens).scaled(coeff);
        bool first = true;
        while (true) {
            if (!first) {
                if (!at(Token::Kind::Star)) break;
                ++pos_;
            }
            Token id = expect(Token::Kind::Ident, "generator");
            int idx = gens->index_of(id.text);
            if (idx < 0) throw ParseError("unknown generator '" + id.text + "'", id.line, id.col);
            int exp = 1;
            if (at(Token::Kind::Caret)) {
                ++pos_;
                Token e = expect(Token::Kind::Int, "exponent");
                exp = std::stoi(e.text);
                if (exp < 0) throw ParseError("negative exponent", e.line, e.col);
            }
            out = out * Poly::generator(gens, idx).pow(exp);
            first = false;
        }
        return out;
    }

    bool at(Token::Kind k) const { return tokens_[pos_].kind == k; }

    void skip_newlines() {
        while (at(Token::Kind::Newline)) ++pos_;
    }

    Token expect(Token::Kind k, const std::string& what) {
        if (!at(k)) {
            const Token& t = tokens_[pos_];
            throw ParseError("expected " + what + ", found '" + t.text + "'", t.line, t.col);
        }
        return tokens_[pos_++];
    }

    void expect_keyword(const std::string& kw) {
        Token t = expect(Token::Kind::Ident, "'" + kw + "'");
        if (t.text != kw) throw ParseError("expected '" + kw + "', found '" + t.text + "'", t.line, t.col);
    }

    void expect_newline() {
        if (at(Token::Kind::End)) return;
        expect(Token::Kind::Newline, "end of line");
        skip_newlines();
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

}  // namespace

SullivanAlgebra parse_model(const std::string& text) {
    Lexer lexer(text);
    Parser parser(lexer.run());
    return parser.run();
}

Poly parse_poly(const std::string& text, const GeneratorSetPtr& gens) {
    Lexer lexer(text);
    Parser parser(lexer.run());
    return parser.parse_polynomial(gens);
}

std::string emit_model(const SullivanAlgebra& a) {
    std::string out = "algebra " + a.name() + "\n";
    for (const Generator& g : a.generators().all())
        out += "gen " + g.name + " " + std::to_string(g.codegree) + "\n";
    for (const Generator& g : a.generators().all()) {
        const Poly& d = a.differential(g.name);
        if (!d.is_zero()) out += "d " + g.name + " = " + d.to_string() + "\n";
    }
    return out;
}

}  // namespace sullivan
