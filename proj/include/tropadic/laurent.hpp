#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tropadic/series.hpp"

namespace tropadic {

/// sum a_u chi^u in K[M], M = Z^rank. No zero coefficients are stored.
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}

    static LaurentPoly monomial(const IntVec& u, const ValuedCoeff& a);
    static LaurentPoly constant(std::size_t rank, const ValuedCoeff& a);

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<IntVec, ValuedCoeff>& terms() const { return terms_; }

    void add_term(const IntVec& u, const ValuedCoeff& a);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    std::size_t rank_;
    std::map<IntVec, ValuedCoeff> terms_;
};

/// A Laurent polynomial over the residue field.
struct ResiduePoly {
    std::size_t rank = 0;
    std::map<IntVec, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_monomial() const { return terms.size() == 1; }

    friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
        return a.rank == b.rank && a.terms == b.terms;
    }
    friend bool operator!=(const ResiduePoly& a, const ResiduePoly& b) { return !(a == b); }
};

/// x, y, z, w for rank <= 4, otherwise x1, ..., xn.
std::vector<std::string> default_variables(std::size_t rank);

/// "x^2*y^-1" style monomial; "1" for the zero exponent.
std::string monomial_string(const IntVec& u, const std::vector<std::string>& vars);

/// Terms in descending lexicographic exponent order: "x + y + 1".
std::string to_string(const ResiduePoly& f, const std::vector<std::string>& vars);
std::string to_string(const ResiduePoly& f);

/// Coefficients in parentheses when they have several terms:
/// "(3 + t^2)*x^2*y^-1 + t*x".
std::string to_string(const LaurentPoly& f, const std::vector<std::string>& vars);
std::string to_string(const LaurentPoly& f);

struct ParsedPolys {
    std::vector<std::string> variables;
    std::vector<LaurentPoly> polys;
};

/// Parses polynomials such as "(3 + t^2)*x^2*y^-1 + t*x" or "t^{1/2}*x1 - 1".
/// `t` is the uniformizer. When `variables` is empty they are inferred from
/// the input: a prefix of x, y, z, w; a range x1..xn; otherwise the sorted
/// identifiers. Floating-point literals raise NonRationalPoint, anything else
/// malformed raises Parse.
ParsedPolys parse_polynomials(const std::vector<std::string>& texts,
                              const std::vector<std::string>& variables = {});
LaurentPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables = {});

}  // namespace tropadic
