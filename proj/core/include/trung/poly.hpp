#ifndef TRUNG_POLY_HPP
#define TRUNG_POLY_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trung/graph.hpp"

namespace trung {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with optional sign; result is reduced with positive
// denominator. Throws ParseError on anything else (including q = 0).
Rational parse_rational(const std::string& text);

// Canonical "p/q" form, denominator always written ("0/1", "-1/4").
std::string rational_fraction(const Rational& value);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_pretty(const Rational& value);

// Dense integer polynomial. The zero polynomial is the empty coefficient
// vector; otherwise the leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(BigInt value);
    static IntPoly one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    bool operator==(const IntPoly&) const = default;

    Rational eval(const Rational& point) const;
    BigInt eval_int(const BigInt& point) const;

    // "1 + 8*x + 18*x^2 + 12*x^3"; unit coefficients print as "x^k".
    std::string to_string(char variable = 'x') const;

private:
    std::vector<BigInt> coeffs_;
};

// I(G,x) by the deletion recurrence I(G) = I(G-v) + x*I(G_v) on a
// maximum-degree vertex, splitting into connected components first.
IntPoly independence_polynomial(const Graph& g);

// (2x+1)*h + (x+x^2)*h_v, the independence polynomial of the constructed
// graph in terms of I(H,x) and I(H_v,x).
IntPoly trung_polynomial(const IntPoly& h, const IntPoly& h_v);

// h(t) = sum_i a_i t^i (1-t)^(alpha-i). Throws std::domain_error when
// degree(p) > alpha.
IntPoly h_polynomial(const IntPoly& p, int alpha);

}  // namespace trung

#endif  // TRUNG_POLY_HPP
