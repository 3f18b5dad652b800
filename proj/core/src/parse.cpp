#include "chered/parse.hpp"

#include <cctype>

namespace chered {

namespace {

struct Lexer {
    const std::string& src;
    size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    char get() {
        skip_ws();
        return src[pos++];
    }
    bool accept(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    unsigned long read_uint() {
        skip_ws();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            throw ParseError("expected integer", pos + 1);
        unsigned long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + static_cast<unsigned long>(src[pos] - '0');
            ++pos;
        }
        return v;
    }
    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        return src.substr(start, pos - start);
    }
};

} // namespace

Word parse_word(const std::string& expr, const Context& ctx) {
    Lexer lex(expr);
    Word word;
    bool expect_atom = true;
    while (!lex.eof()) {
        if (!expect_atom && lex.accept('*')) {
            expect_atom = true;
            continue;
        }
        size_t col = lex.pos + 1;
        std::string id = lex.read_ident();
        if (id.empty()) throw ParseError("expected generator", lex.pos + 1);

        Word atom;
        if (id == "sig") {
            atom.push_back(Generator::sigma());
        } else if (id == "tau") {
            atom.push_back(Generator::tau());
        } else if (id == "t" || id == "u" || id == "s" || id == "x" || id == "y") {
            unsigned long i = lex.read_uint();
            if (i < 1) throw ParseError("index must be positive", col);
            if (id == "s") {
                if (i > ctx.n - 1 || ctx.n < 2)
                    throw ParseError("swap index out of range", col);
                atom.push_back(Generator::swap(static_cast<unsigned>(i)));
            } else if (i > ctx.n) {
                throw ParseError("index out of range", col);
            } else if (id == "t") {
                atom.push_back(Generator::t(static_cast<unsigned>(i)));
            } else if (id == "u") {
                atom.push_back(Generator::u(static_cast<unsigned>(i)));
            } else if (id == "x") {
                atom = standard_gen_word(StandardKind::X, static_cast<unsigned>(i), ctx);
            } else {
                atom = standard_gen_word(StandardKind::Y, static_cast<unsigned>(i), ctx);
            }
        } else {
            throw ParseError("unknown atom '" + id + "'", col);
        }

        if (lex.accept('^')) {
            size_t pcol = lex.pos + 1;
            if (lex.peek() == '-') throw ParseError("negative power", pcol);
            unsigned long e = lex.read_uint();
            Word repeated;
            for (unsigned long r = 0; r < e; ++r)
                repeated.insert(repeated.end(), atom.begin(), atom.end());
            atom = std::move(repeated);
        }
        word.insert(word.end(), atom.begin(), atom.end());
        expect_atom = false;
    }
    if (expect_atom && !word.empty()) throw ParseError("trailing operator", lex.pos + 1);
    return word;
}

namespace {

// Recursive-descent parser for polynomial expressions in the representation.
struct PolyParser {
    Lexer lex;
    const Context& ctx;

    PolyParser(const std::string& s, const Context& c) : lex(s), ctx(c) {}

    PolyRepElement parse() {
        PolyRepElement e = expr();
        if (!lex.eof()) throw ParseError("unexpected input", lex.pos + 1);
        return e;
    }

    PolyRepElement expr() {
        PolyRepElement acc = term(lex.accept('-') ? -1 : (lex.accept('+'), 1));
        while (!lex.eof()) {
            if (lex.accept('+')) acc += term(1);
            else if (lex.accept('-')) acc += term(-1);
            else break;
        }
        return acc;
    }

    PolyRepElement term(int sign) {
        PolyRepElement acc = factor();
        while (!lex.eof()) {
            char c = lex.peek();
            if (c == '*') {
                lex.accept('*');
                acc = mul(acc, factor());
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
                acc = mul(acc, factor());
            } else {
                break;
            }
        }
        if (sign < 0) acc = -acc;
        return acc;
    }

    static PolyRepElement mul(const PolyRepElement& a, const PolyRepElement& b) {
        // products of T-monomial-scaled polynomials: combine term by term
        PolyRepElement out(a.context());
        const Context& cx = *a.context();
        for (const auto& [ta, ca] : a.terms()) {
            for (const auto& [tb, cb] : b.terms()) {
                TExp t(cx.n);
                for (unsigned i = 0; i < cx.n; ++i)
                    t[i] = static_cast<uint16_t>((ta[i] + tb[i]) % cx.ell);
                out.add_term(t, ca * cb);
            }
        }
        return out;
    }

    PolyRepElement factor() {
        PolyRepElement base = atom();
        while (lex.accept('^')) {
            size_t col = lex.pos + 1;
            if (lex.peek() == '-') throw ParseError("negative power", col);
            unsigned long e = lex.read_uint();
            PolyRepElement acc = PolyRepElement::from_poly(
                ParamPoly::constant(ctx, ctx.cone()));
            for (unsigned long r = 0; r < e; ++r) acc = mul(acc, base);
            base = acc;
        }
        return base;
    }

    PolyRepElement atom() {
        if (lex.accept('(')) {
            PolyRepElement e = expr();
            if (!lex.accept(')')) throw ParseError("expected ')'", lex.pos + 1);
            return e;
        }
        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long num = lex.read_uint();
            Rational r(static_cast<long>(num));
            if (lex.accept('/')) {
                unsigned long den = lex.read_uint();
                if (den == 0) throw ParseError("zero denominator", lex.pos + 1);
                r /= Rational(static_cast<long>(den));
            }
            return PolyRepElement::from_poly(ParamPoly::constant(ctx, r));
        }
        size_t col = lex.pos + 1;
        std::string id = lex.read_ident();
        if (id.empty()) throw ParseError("expected atom", col);
        if (id == "U" || id == "T" || id == "s") {
            unsigned long i = lex.read_uint();
            if (id == "U") {
                if (i < 1 || i > ctx.n) throw ParseError("U index out of range", col);
                return PolyRepElement::from_poly(ParamPoly::u(ctx, static_cast<unsigned>(i)));
            }
            if (id == "T") {
                if (i < 1 || i > ctx.n) throw ParseError("T index out of range", col);
                TExp t(ctx.n, 0);
                t[i - 1] = 1;
                PolyRepElement e(&ctx);
                e.add_term(t, ParamPoly::constant(ctx, ctx.cone()));
                return e;
            }
            if (i >= ctx.q) throw ParseError("s index out of range", col);
            return PolyRepElement::from_poly(ParamPoly::s(ctx, static_cast<unsigned>(i)));
        }
        if (id == "h") return PolyRepElement::from_poly(ParamPoly::hbar(ctx));
        if (id == "k") return PolyRepElement::from_poly(ParamPoly::kappa(ctx));
        if (id == "z") {
            return PolyRepElement::from_poly(ParamPoly::constant(ctx, ctx.zeta(1)));
        }
        throw ParseError("unknown symbol '" + id + "'", col);
    }
};

} // namespace

PolyRepElement parse_poly(const std::string& expr, const Context& ctx) {
    PolyParser p(expr, ctx);
    return p.parse();
}

} // namespace chered
