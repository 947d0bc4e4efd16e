#include "tropadic/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tropadic/error.hpp"

namespace tropadic {

LaurentPoly LaurentPoly::monomial(const IntVec& u, const ValuedCoeff& a) {
    LaurentPoly f(u.size());
    f.add_term(u, a);
    return f;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const ValuedCoeff& a) {
    return monomial(IntVec(rank, 0), a);
}

void LaurentPoly::add_term(const IntVec& u, const ValuedCoeff& a) {
    if (u.size() != rank_) throw Error(ErrorKind::DimensionMismatch, "exponent length differs from rank");
    if (a.is_zero()) return;
    auto [it, inserted] = terms_.emplace(u, a);
    if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.rank_ != rank_) throw Error(ErrorKind::DimensionMismatch, "adding polynomials of different rank");
    for (const auto& [u, a] : o.terms_) add_term(u, a);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (o.rank_ != rank_) throw Error(ErrorKind::DimensionMismatch, "multiplying polynomials of different rank");
    LaurentPoly out(rank_);
    for (const auto& [u, a] : terms_) {
        for (const auto& [v, b] : o.terms_) {
            IntVec w(rank_);
            for (std::size_t i = 0; i < rank_; ++i) w[i] = u[i] + v[i];
            out.add_term(w, a * b);
        }
    }
    *this = std::move(out);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(rank_);
    for (const auto& [u, a] : terms_) out.terms_.emplace(u, -a);
    return out;
}

std::vector<std::string> default_variables(std::size_t rank) {
    static const char* names[] = {"x", "y", "z", "w"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(rank <= 4 ? std::string(names[i]) : "x" + std::to_string(i + 1));
    return out;
}

std::string monomial_string(const IntVec& u, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars.at(i);
        if (u[i] != 1) out += "^" + std::to_string(u[i]);
    }
    return out.empty() ? "1" : out;
}

namespace {

// Shared layout of "c*m" terms joined by signs.
void append_term(std::string& out, bool first, bool negative, const std::string& coeff,
                 const std::string& mono) {
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (mono == "1") {
        out += coeff.empty() ? "1" : coeff;
    } else {
        if (!coeff.empty()) out += coeff + "*";
        out += mono;
    }
}

}  // namespace

std::string to_string(const ResiduePoly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const Rational& c = it->second;
        const Rational mag = c < 0 ? Rational(-c) : c;
        append_term(out, first, c < 0, mag == 1 ? "" : to_string(mag), monomial_string(it->first, vars));
        first = false;
    }
    return out;
}

std::string to_string(const ResiduePoly& f) { return to_string(f, default_variables(f.rank)); }

std::string to_string(const LaurentPoly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const ValuedCoeff& a = it->second;
        bool negative = false;
        std::string coeff;
        if (a.terms().size() == 1) {
            const auto& [e, c] = *a.terms().begin();
            negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (e == 0) {
                coeff = mag == 1 ? "" : to_string(mag);
            } else {
                coeff = mag == 1 ? power_of_t(e) : to_string(mag) + "*" + power_of_t(e);
            }
        } else {
            coeff = "(" + to_string(a) + ")";
        }
        append_term(out, first, negative, coeff, monomial_string(it->first, vars));
        first = false;
    }
    return out;
}

std::string to_string(const LaurentPoly& f) { return to_string(f, default_variables(f.rank())); }

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBrace, RBrace, End };

struct Token {
    Tok kind;
    std::string text;
    Rational value;
    std::size_t pos;
};

[[noreturn]] void parse_error(std::string_view src, std::size_t pos, const std::string& msg) {
    throw Error(ErrorKind::Parse, msg + " at position " + std::to_string(pos) + " in '" + std::string(src) + "'");
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto digit = [&](std::size_t j) { return j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '.' && digit(i + 1))
            throw Error(ErrorKind::NonRationalPoint, "floating-point literal in '" + std::string(s) + "'; use p/q");
        if (digit(i)) {
            const std::size_t start = i;
            while (digit(i)) ++i;
            if (i < s.size() && (s[i] == '.' || ((s[i] == 'e' || s[i] == 'E') &&
                                                 (digit(i + 1) || (i + 1 < s.size() && (s[i + 1] == '-' || s[i + 1] == '+'))))))
                throw Error(ErrorKind::NonRationalPoint, "floating-point literal in '" + std::string(s) + "'; use p/q");
            if (i < s.size() && s[i] == '/' && digit(i + 1)) {
                ++i;
                while (digit(i)) ++i;
            }
            const std::string text(s.substr(start, i - start));
            out.push_back({Tok::Number, text, parse_rational(text), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), 0, start});
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '{': k = Tok::LBrace; break;
        case '}': k = Tok::RBrace; break;
        default: parse_error(s, i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), 0, i});
        ++i;
    }
    out.push_back({Tok::End, "", 0, s.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>& vars)
        : src_(src), toks_(tokenize(src)), vars_(vars) {}

    LaurentPoly parse() {
        LaurentPoly f = expr();
        if (peek().kind != Tok::End) parse_error(src_, peek().pos, "unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) parse_error(src_, peek().pos, std::string("expected ") + what);
    }

    LaurentPoly expr() {
        LaurentPoly f(vars_.size());
        bool negative = false;
        if (accept(Tok::Minus)) negative = true;
        else accept(Tok::Plus);
        LaurentPoly t = term();
        f += negative ? -t : t;
        for (;;) {
            if (accept(Tok::Plus)) f += term();
            else if (accept(Tok::Minus)) f += -term();
            else break;
        }
        return f;
    }

    LaurentPoly term() {
        LaurentPoly f = factor();
        while (accept(Tok::Star)) f *= factor();
        return f;
    }

    // Optional sign and a rational, bare or in braces or parentheses.
    Rational exponent() {
        Tok close = Tok::End;
        if (accept(Tok::LBrace)) close = Tok::RBrace;
        else if (accept(Tok::LParen)) close = Tok::RParen;
        bool negative = false;
        if (accept(Tok::Minus)) negative = true;
        else accept(Tok::Plus);
        if (peek().kind != Tok::Number) parse_error(src_, peek().pos, "expected exponent");
        Rational e = next().value;
        if (close != Tok::End) expect(close, close == Tok::RBrace ? "'}'" : "')'");
        return negative ? Rational(-e) : e;
    }

    static std::int64_t integer_exponent(const Rational& e, std::string_view src, std::size_t pos) {
        if (denominator(e) != 1) parse_error(src, pos, "fractional exponents are only allowed on t");
        return to_int64(e);
    }

    LaurentPoly factor() {
        const std::size_t n = vars_.size();
        if (accept(Tok::Minus)) return -factor();
        const Token tok = next();
        switch (tok.kind) {
        case Tok::Number: {
            LaurentPoly f = LaurentPoly::constant(n, tok.value);
            if (accept(Tok::Caret)) {
                const std::size_t p = peek().pos;
                const std::int64_t k = integer_exponent(exponent(), src_, p);
                if (k < 0 && tok.value == 0) parse_error(src_, p, "zero to a negative power");
                Rational v = 1;
                for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) v *= tok.value;
                f = LaurentPoly::constant(n, k < 0 ? Rational(1 / v) : v);
            }
            return f;
        }
        case Tok::Ident: {
            Rational e = 1;
            if (accept(Tok::Caret)) e = exponent();
            if (tok.text == "t") return LaurentPoly::constant(n, ValuedCoeff::monomial(1, e));
            auto it = std::find(vars_.begin(), vars_.end(), tok.text);
            if (it == vars_.end()) parse_error(src_, tok.pos, "unknown variable '" + tok.text + "'");
            IntVec u(n, 0);
            u[it - vars_.begin()] = integer_exponent(e, src_, tok.pos);
            return LaurentPoly::monomial(u, Rational(1));
        }
        case Tok::LParen: {
            LaurentPoly f = expr();
            expect(Tok::RParen, "')'");
            if (accept(Tok::Caret)) {
                const std::size_t p = peek().pos;
                const std::int64_t k = integer_exponent(exponent(), src_, p);
                if (k < 0) {
                    if (f.size() != 1 || f.terms().begin()->second.terms().size() != 1)
                        parse_error(src_, p, "negative powers need a monomial base");
                    const auto& [u, a] = *f.terms().begin();
                    const auto& [te, tc] = *a.terms().begin();
                    IntVec v(n);
                    for (std::size_t i = 0; i < n; ++i) v[i] = -u[i] * (-k);
                    Rational c = 1;
                    for (std::int64_t i = 0; i < -k; ++i) c /= tc;
                    return LaurentPoly::monomial(v, ValuedCoeff::monomial(c, te * k));
                }
                LaurentPoly out = LaurentPoly::constant(n, Rational(1));
                for (std::int64_t i = 0; i < k; ++i) out *= f;
                return out;
            }
            return f;
        }
        default:
            parse_error(src_, tok.pos, tok.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
        }
    }

    std::string_view src_;
    std::vector<Token> toks_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

std::vector<std::string> infer_variables(const std::set<std::string>& ids) {
    if (ids.empty()) return {};
    static const std::vector<std::string> xyzw = {"x", "y", "z", "w"};
    std::size_t k = 0;
    bool named = true;
    for (const auto& id : ids) {
        auto it = std::find(xyzw.begin(), xyzw.end(), id);
        if (it == xyzw.end()) {
            named = false;
            break;
        }
        k = std::max<std::size_t>(k, it - xyzw.begin() + 1);
    }
    if (named) return {xyzw.begin(), xyzw.begin() + k};
    std::size_t maxi = 0;
    bool indexed = true;
    for (const auto& id : ids) {
        if (id.size() < 2 || id[0] != 'x' || id[1] == '0' ||
            !std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            id.size() > 4) {
            indexed = false;
            break;
        }
        maxi = std::max<std::size_t>(maxi, std::stoul(id.substr(1)));
    }
    if (indexed) {
        std::vector<std::string> out;
        for (std::size_t i = 1; i <= maxi; ++i) out.push_back("x" + std::to_string(i));
        return out;
    }
    return {ids.begin(), ids.end()};
}

}  // namespace

ParsedPolys parse_polynomials(const std::vector<std::string>& texts, const std::vector<std::string>& variables) {
    ParsedPolys out;
    out.variables = variables;
    if (out.variables.empty()) {
        std::set<std::string> ids;
        for (const auto& text : texts)
            for (const auto& tok : tokenize(text))
                if (tok.kind == Tok::Ident && tok.text != "t") ids.insert(tok.text);
        out.variables = infer_variables(ids);
    }
    if (std::find(out.variables.begin(), out.variables.end(), "t") != out.variables.end())
        throw Error(ErrorKind::Parse, "'t' is reserved for the uniformizer");
    for (const auto& text : texts) out.polys.push_back(Parser(text, out.variables).parse());
    return out;
}

LaurentPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    return parse_polynomials({std::string(text)}, variables).polys.front();
}

}  // namespace tropadic
