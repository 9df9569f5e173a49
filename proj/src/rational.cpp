#include "ratdist/rational.hpp"

#include "ratdist/errors.hpp"

#include <cctype>

namespace ratdist {

Rational::Rational(long long v) : v_(static_cast<long>(v)) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
}

Rational::Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool valid_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!valid_integer_text(s)) throw ParseError("bad integer '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    auto slash = t.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(t));
    Integer n = parse_integer(std::string_view(t).substr(0, slash));
    Integer d = parse_integer(std::string_view(t).substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
    if (e < 0) return pow(inverse(r), -e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational inverse(const Rational& r) {
    if (r.is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(r.den(), r.num());
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw InvalidArgument("isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    return isqrt(n);
}

std::optional<Rational> is_rational_square(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    auto p = integer_sqrt_exact(r.num());
    if (!p) return std::nullopt;
    auto q = integer_sqrt_exact(r.den());
    if (!q) return std::nullopt;
    return Rational(*p, *q);
}

Integer height(const Rational& r) {
    Integer p = ::abs(r.num());
    Integer q = r.den();
    return p > q ? p : q;
}

std::size_t hash_value(const Rational& r) {
    std::size_t h = mpz_fdiv_ui(r.num().get_mpz_t(), 1000000007UL);
    h = h * 1315423911u ^ mpz_fdiv_ui(r.den().get_mpz_t(), 998244353UL);
    return h;
}

} // namespace ratdist
