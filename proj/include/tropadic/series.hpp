#pragma once

#include <map>
#include <optional>
#include <string>

#include "tropadic/rational.hpp"

namespace tropadic {

/// A finite generalized power series sum c_e t^e with rational exponents and
/// rational coefficients, standing in for an element of a valued field with
/// value group Q and residue field Q.
class ValuedCoeff {
public:
    ValuedCoeff() = default;
    ValuedCoeff(const Rational& c);  // NOLINT: constants convert implicitly
    ValuedCoeff(int c) : ValuedCoeff(Rational(c)) {}

    static ValuedCoeff monomial(const Rational& c, const Rational& e);
    /// Zero coefficients are dropped.
    static ValuedCoeff from_terms(const std::map<Rational, Rational>& terms);

    bool is_zero() const { return terms_.empty(); }
    /// Exponent -> coefficient, ascending; no zero coefficients.
    const std::map<Rational, Rational>& terms() const { return terms_; }
    /// Smallest exponent, or nullopt (infinity) for zero.
    std::optional<Rational> valuation() const;
    /// Coefficient of t^valuation; zero for the zero element.
    Rational residue() const;

    ValuedCoeff operator-() const;
    ValuedCoeff& operator+=(const ValuedCoeff& o);
    ValuedCoeff& operator*=(const ValuedCoeff& o);
    friend ValuedCoeff operator+(ValuedCoeff a, const ValuedCoeff& b) { return a += b; }
    friend ValuedCoeff operator-(ValuedCoeff a, const ValuedCoeff& b) { return a += -b; }
    friend ValuedCoeff operator*(ValuedCoeff a, const ValuedCoeff& b) { return a *= b; }
    friend bool operator==(const ValuedCoeff& a, const ValuedCoeff& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ValuedCoeff& a, const ValuedCoeff& b) { return !(a == b); }

private:
    std::map<Rational, Rational> terms_;
};

/// "3 + t^2", "-t^{1/2}", "2*t^-1"; terms by ascending exponent.
std::string to_string(const ValuedCoeff& a);

/// t^e with e = p/q, printed as accepted by the polynomial parser.
std::string power_of_t(const Rational& e);

}  // namespace tropadic
