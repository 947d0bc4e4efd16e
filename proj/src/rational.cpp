#include "tropadic/rational.hpp"

#include <cctype>
#include <limits>

#include "tropadic/error.hpp"

namespace tropadic {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DenominatorMismatch: return "DenominatorMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonRationalPoint: return "NonRationalPoint";
    case ErrorKind::ExponentOutsideSublattice: return "ExponentOutsideSublattice";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::NotARefinement: return "NotARefinement";
    case ErrorKind::FamilyNotSupported: return "FamilyNotSupported";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::EmbeddingMismatch: return "EmbeddingMismatch";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            if (text[j] == '.' || text[j] == 'e' || text[j] == 'E')
                throw Error(ErrorKind::NonRationalPoint,
                            "floating-point literal '" + std::string(whole) +
                                "' rejected; use p/q");
            throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
        }
    }
    Integer z(std::string(text.substr(i)));
    return negative ? Integer(-z) : z;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
    const Integer num = parse_integer(trim(t.substr(0, slash)), text);
    const auto den_text = trim(t.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    const Integer den = parse_integer(den_text, text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational dot(const IntVec& u, const RatVec& v) {
    if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) s += v[i] * u[i];
    return s;
}

Rational dot(const RatVec& u, const RatVec& v) {
    if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

std::int64_t dot(const IntVec& u, const IntVec& v) {
    if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += Integer(u[i]) * v[i];
    return to_int64(s);
}

RatVec to_rational(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

std::int64_t to_int64(const Integer& z) {
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorKind::Overflow, "integer " + z.str() + " exceeds 64 bits");
    return z.convert_to<std::int64_t>();
}

std::int64_t to_int64(const Rational& q) {
    if (denominator(q) != 1)
        throw Error(ErrorKind::InvalidArgument, "expected an integer, got " + to_string(q));
    return to_int64(numerator(q));
}

Integer common_denominator(const RatVec& v) {
    Integer l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
    return l;
}

IntVec primitive(const RatVec& v) {
    const Integer l = common_denominator(v);
    std::vector<Integer> scaled;
    scaled.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer z = numerator(x) * (l / denominator(x));
        g = boost::multiprecision::gcd(g, z);
        scaled.push_back(std::move(z));
    }
    IntVec out;
    out.reserve(v.size());
    for (const auto& z : scaled) out.push_back(g == 0 ? 0 : to_int64(Integer(z / g)));
    return out;
}

IntVec primitive(const IntVec& v) { return primitive(to_rational(v)); }

bool is_zero(const IntVec& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rational floor(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return Rational(f);
}

}  // namespace tropadic
