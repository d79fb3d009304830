#include "trung/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "trung/errors.hpp"

namespace trung {

namespace {

bool is_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    if (!is_integer_token(num)) throw ParseError("malformed rational '" + text + "'");
    if (slash == std::string::npos) return Rational(BigInt(num));
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(den)) throw ParseError("malformed rational '" + text + "'");
    BigInt p(num);
    BigInt q(den);
    if (q == 0) throw ParseError("zero denominator in '" + text + "'");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

std::string rational_fraction(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string rational_pretty(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return rational_fraction(value);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt value) {
    if (value == 0) return IntPoly();
    return IntPoly({std::move(value)});
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < p.coeffs_.size()) out[i] += p.coeffs_[i];
        if (i < q.coeffs_.size()) out[i] += q.coeffs_[i];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return IntPoly();
    std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return IntPoly(std::move(out));
}

Rational IntPoly::eval(const Rational& point) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
    return acc;
}

BigInt IntPoly::eval_int(const BigInt& point) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
    return acc;
}

std::string IntPoly::to_string(char variable) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& a = coeffs_[i];
        if (a == 0) continue;
        BigInt mag = abs(a);
        if (first) {
            if (a < 0) out += "-";
            first = false;
        } else {
            out += (a < 0) ? " - " : " + ";
        }
        std::string term;
        if (i == 0) {
            term = mag.str();
        } else {
            if (mag != 1) term = mag.str() + "*";
            term += variable;
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

namespace {

IntPoly one_plus_x() { return IntPoly({1, 1}); }

IntPoly ind_poly_mask(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    if (mask == 0) return IntPoly::one();

    // peel vertices isolated within the mask: each contributes a (1+x) factor
    std::uint64_t isolated = 0;
    for (int v : VertexSet(mask))
        if ((adj[static_cast<std::size_t>(v)] & mask) == 0) isolated |= std::uint64_t{1} << v;
    if (isolated) {
        IntPoly rest = ind_poly_mask(adj, mask & ~isolated);
        IntPoly factor = one_plus_x();
        for (int k = 1; k < std::popcount(isolated); ++k) factor = factor * one_plus_x();
        return factor * rest;
    }

    // product rule across connected components
    std::uint64_t comp = 0;
    std::uint64_t frontier = mask & (~mask + 1);
    while (frontier) {
        comp |= frontier;
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= adj[static_cast<std::size_t>(v)] & mask;
        frontier = next & ~comp;
    }
    if (comp != mask) return ind_poly_mask(adj, comp) * ind_poly_mask(adj, mask & ~comp);

    // branch on a maximum-degree vertex (lowest index on ties)
    int pick = -1;
    int best_deg = -1;
    for (int v : VertexSet(mask)) {
        int d = std::popcount(adj[static_cast<std::size_t>(v)] & mask);
        if (d > best_deg) {
            best_deg = d;
            pick = v;
        }
    }
    std::uint64_t vbit = std::uint64_t{1} << pick;
    IntPoly without = ind_poly_mask(adj, mask & ~vbit);
    IntPoly with = ind_poly_mask(adj, mask & ~(adj[static_cast<std::size_t>(pick)] | vbit));
    // I(G) = I(G - v) + x * I(G_v)
    std::vector<BigInt> shifted(with.coeffs().size() + 1);
    for (std::size_t i = 0; i < with.coeffs().size(); ++i) shifted[i + 1] = with.coeffs()[i];
    return without + IntPoly(std::move(shifted));
}

}  // namespace

IntPoly independence_polynomial(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    return ind_poly_mask(adj, g.vertices().bits());
}

IntPoly trung_polynomial(const IntPoly& h, const IntPoly& h_v) {
    return IntPoly({1, 2}) * h + IntPoly({0, 1, 1}) * h_v;
}

IntPoly h_polynomial(const IntPoly& p, int alpha) {
    if (p.degree() > alpha)
        throw std::domain_error("polynomial degree " + std::to_string(p.degree()) +
                                " exceeds alpha " + std::to_string(alpha));
    IntPoly one_minus_t({1, -1});
    std::vector<IntPoly> pw(static_cast<std::size_t>(alpha) + 1);
    pw[0] = IntPoly::one();
    for (int k = 1; k <= alpha; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * one_minus_t;

    IntPoly acc;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        std::vector<BigInt> term(static_cast<std::size_t>(i) + 1);
        term[static_cast<std::size_t>(i)] = p.coeff(i);
        acc = acc + IntPoly(std::move(term)) * pw[static_cast<std::size_t>(alpha - i)];
    }
    return acc;
}

}  // namespace trung
