#include "hdiff/expr.hpp"

#include <cctype>

#include "hdiff/ring.hpp"

namespace hdiff {

ExprContext ExprContext::cartan(int n, const std::vector<std::string>& aux) {
    ExprContext c;
    c.n = n;
    c.spec = VarSpec{n, (int)aux.size()};
    c.names = cartan_names(n, aux);
    return c;
}

ExprContext ExprContext::univariate() {
    ExprContext c;
    c.n = 0;
    c.spec = VarSpec{0, 1};
    c.names.names = {"t"};
    return c;
}

namespace {

struct Parser {
    const std::string& s;
    const ExprContext& ctx;
    size_t pos = 0;

    explicit Parser(const std::string& text, const ExprContext& c) : s(text), ctx(c) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    int col() const { return (int)pos + 1; }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (pos != s.size()) throw ParseError("unexpected input", col());
        return r;
    }

    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }

    RatFunc term() {
        RatFunc r = factor();
        while (true) {
            if (eat('*')) r *= factor();
            else if (eat('/')) {
                int c = col();
                RatFunc d = factor();
                if (d.is_zero()) throw ParseError("division by zero", c);
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RatFunc factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (eat('^')) {
            int c = col();
            long e = integer();
            if (e < 0) throw ParseError("exponent must be a nonnegative integer", c);
            return base.pow((int)e);
        }
        return base;
    }

    long integer() {
        skip();
        size_t start = pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
            throw ParseError("expected integer", (int)start + 1);
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    RatFunc atom() {
        skip();
        if (pos >= s.size()) throw ParseError("unexpected end of input", (int)s.size());
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RatFunc r = expr();
            if (!eat(')')) throw ParseError("expected ')'", col());
            return r;
        }
        if (std::isdigit((unsigned char)c)) {
            mpz_class v(0);
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                v = v * 10 + (s[pos++] - '0');
            }
            return RatFunc::constant(ctx.spec, Rat(v));
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            // builtins take an index in parentheses
            if (peek() == '(' &&
                (name == "e" || name == "H" || name == "chi" || name == "psi" || name == "psip")) {
                eat('(');
                int icol = col();
                long idx = integer();
                if (!eat(')')) throw ParseError("expected ')'", col());
                return builtin(name, idx, icol);
            }
            int v = ctx.names.find(name);
            if (v < 0) throw ParseError("unknown symbol '" + name + "'", (int)start + 1);
            return RatFunc::variable(ctx.spec, v);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", col());
    }

    RatFunc builtin(const std::string& name, long idx, int icol) {
        int n = ctx.n;
        if (name == "e") {
            if (idx < 0 || idx > n) throw ParseError("e(k) needs 0 <= k <= n", icol);
            return named_family(ctx.spec, n, FamilyKind::ElementaryE, (int)idx);
        }
        if (name == "H") {
            if (idx < 0) throw ParseError("H(k) needs k >= 0", icol);
            return named_family(ctx.spec, n, FamilyKind::CompleteH, (int)idx);
        }
        if (idx < 1 || idx > n) throw ParseError(name + "(i) needs 1 <= i <= n", icol);
        if (name == "chi") return named_family(ctx.spec, n, FamilyKind::Chi, (int)idx - 1);
        if (name == "psi") return named_family(ctx.spec, n, FamilyKind::Psi, (int)idx - 1);
        return named_family(ctx.spec, n, FamilyKind::PsiPrime, (int)idx - 1);
    }
};

}  // namespace

RatFunc parse_expr(const std::string& text, const ExprContext& ctx) {
    if (text.empty()) throw ParseError("empty expression", 1);
    Parser p(text, ctx);
    return p.parse();
}

// Element text format: terms "(coef)*d[i,a]^p*x[j,b]^q" joined by " + ".
Element Element::parse(Ctx ctx, OrderTag tag, const std::string& text) {
    Element out = Element::zero(ctx, tag);
    ExprContext ec = ExprContext::cartan(ctx->n());
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    while (true) {
        skip();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw ParseError("expected '(' opening a coefficient", (int)pos + 1);
        int depth = 0;
        size_t start = ++pos;
        while (pos < text.size() && (depth > 0 || text[pos] != ')')) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')') --depth;
            ++pos;
        }
        if (pos >= text.size()) throw ParseError("unbalanced coefficient", (int)start);
        RatFunc coef = parse_expr(text.substr(start, pos - start), ec);
        ++pos;  // ')'
        std::vector<Gen> letters;
        while (true) {
            skip();
            if (pos >= text.size() || text[pos] != '*') break;
            ++pos;
            skip();
            if (pos >= text.size() || (text[pos] != 'd' && text[pos] != 'x'))
                throw ParseError("expected generator", (int)pos + 1);
            bool der = text[pos] == 'd';
            ++pos;
            if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", (int)pos + 1);
            ++pos;
            int site = 0, copy = 0;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
                site = site * 10 + (text[pos++] - '0');
            if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", (int)pos + 1);
            ++pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
                copy = copy * 10 + (text[pos++] - '0');
            if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", (int)pos + 1);
            ++pos;
            int e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = 0;
                while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
                    e = e * 10 + (text[pos++] - '0');
            }
            for (int r = 0; r < e; ++r) letters.push_back(Gen{der, site - 1, copy - 1});
        }
        out += Element::word(ctx, tag, letters, coef);
        skip();
        if (pos < text.size()) {
            if (text[pos] != '+') throw ParseError("expected '+'", (int)pos + 1);
            ++pos;
        }
    }
    return out;
}

}  // namespace hdiff
