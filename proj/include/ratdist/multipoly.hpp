#pragma once

#include "ratdist/rational.hpp"
#include "ratdist/unipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ratdist {

using Monomial = std::vector<unsigned>;
using VarList = std::vector<std::string>;

// Graded lexicographic order: total degree first, then lex on the declared
// variable order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned total_degree(const Monomial& m);

// Sparse polynomial over Q in an ordered list of variables.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(const VarList& vars, const Rational& c);
    static MultiPoly var(const VarList& vars, const std::string& name);
    static MultiPoly from_uni(const UniPoly& p, const VarList& vars);
    // Parses the "c*x^i*y^j" text form; variables default to those found,
    // sorted by name.
    static MultiPoly parse(const std::string& text, const VarList& vars = {});

    const VarList& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    int var_index(const std::string& name) const;
    int total_degree() const;
    int min_total_degree() const;
    int degree_in(const std::string& name) const;
    // Variables that actually occur.
    VarList used_vars() const;

    // Leading term in graded lex order; polynomial must be nonzero.
    std::pair<Monomial, Rational> leading_term() const;

    // Coefficients of the powers of one variable: result[k] is the
    // coefficient of name^k, a polynomial in the same variable list.
    std::vector<MultiPoly> coeffs_in(const std::string& name) const;
    MultiPoly partial(const std::string& name) const;

    Rational eval(const std::map<std::string, Rational>& at) const;
    // Binds some variables to rationals; the variable list is unchanged.
    MultiPoly specialize(const std::map<std::string, Rational>& at) const;

    // Same polynomial in a different variable list containing every used
    // variable. Throws VariableMismatch otherwise.
    MultiPoly with_vars(const VarList& vars) const;
    // Requires at most one used variable.
    UniPoly to_uni(const std::string& var) const;

    Rational content() const;
    // Integer content 1 and positive leading coefficient.
    MultiPoly primitive() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& r);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& r) { return a *= r; }
    friend MultiPoly operator*(const Rational& r, MultiPoly a) { return a *= r; }
    friend MultiPoly operator+(MultiPoly a, const Rational& r);
    friend MultiPoly operator-(MultiPoly a, const Rational& r);
    friend MultiPoly operator+(const Rational& r, MultiPoly a) { return std::move(a) + r; }
    friend MultiPoly operator-(const Rational& r, const MultiPoly& a) { return -a + r; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    std::string str() const;

private:
    void check_vars(const MultiPoly& o) const;
    VarList vars_;
    Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);
// Throws NonExactDivision unless b | a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
// Quotient when b | a, otherwise empty.
std::optional<MultiPoly> try_exact_div(const MultiPoly& a, const MultiPoly& b);
// q with q*q == p, leading coefficient positive.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

enum class PolyOp { add, sub, mul, exact_div };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

// Ordered union of two variable lists (first list order, then new names).
VarList merge_vars(const VarList& a, const VarList& b);

} // namespace ratdist
