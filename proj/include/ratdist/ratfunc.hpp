#pragma once

#include "ratdist/multipoly.hpp"

#include <map>
#include <optional>
#include <string>

namespace ratdist {

// Quotient of two polynomials in the same variable list. Univariate values
// are kept fully reduced with a monic denominator; multivariate values are
// content-normalised and reduced only by trial division.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(VarList vars) : num_(vars), den_(MultiPoly::constant(vars, 1)) {}
    RatFunc(MultiPoly num);
    RatFunc(MultiPoly num, MultiPoly den);
    RatFunc(const UniPoly& num, const UniPoly& den);

    static RatFunc constant(const VarList& vars, const Rational& c);
    static RatFunc var(const VarList& vars, const std::string& name);
    // Accepts polynomial text with '/', '^', parentheses.
    static RatFunc parse(const std::string& text, const VarList& vars = {});

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarList& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    // Univariate accessors; require a single used variable.
    UniPoly num_uni(const std::string& var) const { return num_.to_uni(var); }
    UniPoly den_uni(const std::string& var) const { return den_.to_uni(var); }

    Rational eval(const std::map<std::string, Rational>& at) const;
    RatFunc with_vars(const VarList& vars) const;
    RatFunc inverse() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator+(const RatFunc& a, const Rational& r) { return a + constant(a.vars(), r); }
    friend RatFunc operator-(const RatFunc& a, const Rational& r) { return a - constant(a.vars(), r); }
    friend RatFunc operator*(const RatFunc& a, const Rational& r) { return RatFunc(a.num_ * r, a.den_); }
    friend RatFunc operator/(const RatFunc& a, const Rational& r);
    friend RatFunc operator+(const Rational& r, const RatFunc& a) { return a + r; }
    friend RatFunc operator-(const Rational& r, const RatFunc& a) { return -a + r; }
    friend RatFunc operator*(const Rational& r, const RatFunc& a) { return a * r; }
    friend RatFunc operator/(const Rational& r, const RatFunc& a) { return constant(a.vars(), r) / a; }
    friend bool operator==(const RatFunc& a, const RatFunc& b);

    std::string str() const;

private:
    struct Raw {};
    RatFunc(MultiPoly num, MultiPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    MultiPoly num_, den_;
};

RatFunc pow(const RatFunc& f, int e);

// Square root with numerator and denominator both squares after reduction.
// For several variables this is decided by the squareness of num*den.
std::optional<RatFunc> ratfunc_square_root(const RatFunc& f);

// True when a and b agree as rational functions (cross-multiplied test).
bool same_function(const RatFunc& a, const RatFunc& b);

using Bindings = std::map<std::string, RatFunc>;

// Composition: every variable of p is replaced by its binding or kept when
// unbound. The result lives in `target`. Throws EvaluationAtPole when a
// denominator vanishes.
RatFunc subst(const MultiPoly& p, const Bindings& b, const VarList& target);
RatFunc subst(const RatFunc& f, const Bindings& b, const VarList& target);
Bindings rational_bindings(const std::map<std::string, Rational>& at, const VarList& target);

namespace detail {
// Parser shared by MultiPoly::parse and RatFunc::parse; returns num/den.
std::pair<MultiPoly, MultiPoly> parse_fraction(const std::string& text, const VarList& vars);
}

} // namespace ratdist
