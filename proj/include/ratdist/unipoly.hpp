#pragma once

#include "ratdist/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ratdist {

class QuadElem;

// Dense univariate polynomial over Q, lowest degree first.
class UniPoly {
public:
    explicit UniPoly(std::string var = "t") : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Rational> coeffs);

    static UniPoly constant(const std::string& var, const Rational& c);
    static UniPoly monomial(const std::string& var, const Rational& c, int deg);
    static UniPoly x(const std::string& var) { return monomial(var, 1, 1); }

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const;

    Rational eval(const Rational& v) const;
    QuadElem eval(const QuadElem& v) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly compose(const UniPoly& inner) const;
    UniPoly renamed(const std::string& var) const;

    // Integer content 1, positive leading coefficient.
    UniPoly primitive() const;
    Rational content() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& r);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& r) { return a *= r; }
    friend UniPoly operator*(const Rational& r, UniPoly a) { return a *= r; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.var_ == b.var_ && a.c_ == b.c_; }

    std::string str() const;

private:
    void trim();
    std::string var_;
    std::vector<Rational> c_;
};

UniPoly pow(const UniPoly& p, unsigned e);

// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Throws NonExactDivision unless b | a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// q with q*q == p and positive leading coefficient.
std::optional<UniPoly> poly_sqrt(const UniPoly& p);

} // namespace ratdist
