#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ratdist {

using Integer = mpz_class;

// Reduced fraction p/q with q > 0. Thin value wrapper over mpq_class that
// keeps the canonical form at all times.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(long long v);
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& n, const Integer& d);
    Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q". Throws ParseError.
    static Rational parse(std::string_view s);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string str() const;
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
Rational pow(const Rational& r, long e);
Rational inverse(const Rational& r);

// Floor of the square root of n >= 0.
Integer isqrt(const Integer& n);
std::optional<Integer> integer_sqrt_exact(const Integer& n);

// Nonnegative s with s*s == r, when r is the square of a rational.
std::optional<Rational> is_rational_square(const Rational& r);

// max(|p|, q) of the reduced form.
Integer height(const Rational& r);

std::size_t hash_value(const Rational& r);

} // namespace ratdist

template <>
struct std::hash<ratdist::Rational> {
    std::size_t operator()(const ratdist::Rational& r) const { return ratdist::hash_value(r); }
};
