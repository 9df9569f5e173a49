#pragma once

#include "ratdist/rational.hpp"

#include <optional>
#include <string>

namespace ratdist {

// base + coeff * sqrt(d) in Q(sqrt d), d square-free and >= 2.
class QuadElem {
public:
    QuadElem(Rational base, Rational coeff, long d);
    static QuadElem rational(const Rational& r, long d) { return QuadElem(r, 0, d); }

    const Rational& base() const { return base_; }
    const Rational& coeff() const { return coeff_; }
    long radicand() const { return d_; }

    bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }
    bool is_rational() const { return coeff_.is_zero(); }
    QuadElem conj() const { return QuadElem(base_, -coeff_, d_); }
    Rational norm() const { return base_ * base_ - Rational(d_) * coeff_ * coeff_; }
    QuadElem inverse() const;

    std::string str() const;

    QuadElem operator-() const { return QuadElem(-base_, -coeff_, d_); }
    friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator/(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator+(const QuadElem& a, const Rational& b) { return a + rational(b, a.d_); }
    friend QuadElem operator-(const QuadElem& a, const Rational& b) { return a - rational(b, a.d_); }
    friend QuadElem operator*(const QuadElem& a, const Rational& b) { return QuadElem(a.base_ * b, a.coeff_ * b, a.d_); }
    friend QuadElem operator+(const Rational& b, const QuadElem& a) { return a + b; }
    friend QuadElem operator*(const Rational& b, const QuadElem& a) { return a * b; }
    friend QuadElem operator-(const Rational& b, const QuadElem& a) { return rational(b, a.d_) - a; }
    friend bool operator==(const QuadElem& a, const QuadElem& b);

private:
    Rational base_, coeff_;
    long d_;
};

enum class QuadOp { add, sub, mul, div };
QuadElem quad_arith(const QuadElem& a, const QuadElem& b, QuadOp op);

// s with s*s == x when one exists in the same field.
std::optional<QuadElem> quad_sqrt(const QuadElem& x);

QuadElem pow(const QuadElem& x, unsigned e);

} // namespace ratdist
