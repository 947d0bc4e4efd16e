#include "tropadic/series.hpp"

namespace tropadic {

ValuedCoeff::ValuedCoeff(const Rational& c) {
    if (c != 0) terms_.emplace(Rational(0), c);
}

ValuedCoeff ValuedCoeff::monomial(const Rational& c, const Rational& e) {
    ValuedCoeff a;
    if (c != 0) a.terms_.emplace(e, c);
    return a;
}

ValuedCoeff ValuedCoeff::from_terms(const std::map<Rational, Rational>& terms) {
    ValuedCoeff a;
    for (const auto& [e, c] : terms)
        if (c != 0) a.terms_.emplace(e, c);
    return a;
}

std::optional<Rational> ValuedCoeff::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

Rational ValuedCoeff::residue() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

ValuedCoeff ValuedCoeff::operator-() const {
    ValuedCoeff a = *this;
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

ValuedCoeff& ValuedCoeff::operator+=(const ValuedCoeff& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ValuedCoeff& ValuedCoeff::operator*=(const ValuedCoeff& o) {
    std::map<Rational, Rational> out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out[e1 + e2] += c1 * c2;
    *this = from_terms(out);
    return *this;
}

std::string power_of_t(const Rational& e) {
    if (e == 1) return "t";
    if (denominator(e) == 1) return "t^" + to_string(e);
    return "t^{" + to_string(e) + "}";
}

std::string to_string(const ValuedCoeff& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        Rational mag = c;
        if (first) {
            if (c < 0) {
                out += "-";
                mag = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) mag = -c;
        }
        first = false;
        if (e == 0) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += power_of_t(e);
        } else {
            out += to_string(mag) + "*" + power_of_t(e);
        }
    }
    return out;
}

}  // namespace tropadic
