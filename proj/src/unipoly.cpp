#include "ratdist/unipoly.hpp"

#include "ratdist/errors.hpp"
#include "ratdist/quadfield.hpp"

#include <sstream>

namespace ratdist {

UniPoly::UniPoly(std::string var, std::vector<Rational> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(const std::string& var, const Rational& c) { return UniPoly(var, {c}); }

UniPoly UniPoly::monomial(const std::string& var, const Rational& c, int deg) {
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return UniPoly(var, std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
    static const Rational zero;
    return c_.empty() ? zero : c_.back();
}

Rational UniPoly::eval(const Rational& v) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
    return r;
}

QuadElem UniPoly::eval(const QuadElem& v) const {
    QuadElem r = QuadElem::rational(0, v.radicand());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rational l = inverse(leading());
    return *this * l;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly r(inner.var());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + UniPoly::constant(inner.var(), *it);
    return r;
}

UniPoly UniPoly::renamed(const std::string& var) const { return UniPoly(var, c_); }

Rational UniPoly::content() const {
    if (is_zero()) return 0;
    Integer g = 0, l = 1;
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(g, l);
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (leading().sign() < 0) c = -c;
    return *this * inverse(c);
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.var_ != var_ && !o.is_constant() && !is_constant())
        throw VariableMismatch("univariate variables " + var_ + " and " + o.var_);
    if (is_constant() && !o.is_constant()) var_ = o.var_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const Rational& r) {
    if (r.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= r;
    return *this;
}

namespace {

// Integer coefficient form used by the heavy routines; avoids per-step
// rational normalisation.
using ZPoly = std::vector<Integer>;

ZPoly to_z(const UniPoly& p, Integer* scale_den = nullptr) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
    if (scale_den) *scale_den = l;
    return z;
}

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void z_primitive(ZPoly& a) {
    Integer g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, then primitive part.
ZPoly z_prem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        Integer la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        z_trim(a);
        z_primitive(a);
    }
    return a;
}

} // namespace

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.var_ != b.var_ && !a.is_constant() && !b.is_constant())
        throw VariableMismatch("univariate variables " + a.var_ + " and " + b.var_);
    std::string var = a.is_constant() ? b.var_ : a.var_;
    if (a.is_zero() || b.is_zero()) return UniPoly(var);
    Integer da, db;
    ZPoly za = to_z(a, &da), zb = to_z(b, &db);
    ZPoly r(za.size() + zb.size() - 1);
    for (std::size_t i = 0; i < za.size(); ++i) {
        if (za[i] == 0) continue;
        for (std::size_t j = 0; j < zb.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
    }
    Integer d = da * db;
    std::vector<Rational> c;
    c.reserve(r.size());
    for (auto& v : r) c.emplace_back(v, d);
    return UniPoly(var, std::move(c));
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly r = UniPoly::constant(p.var(), 1), b = p;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    std::vector<Rational> q(r.size() > static_cast<std::size_t>(db) ? r.size() - static_cast<std::size_t>(db) : 0);
    Rational inv = inverse(b.leading());
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (r[static_cast<std::size_t>(i)].is_zero()) continue;
        Rational f = r[static_cast<std::size_t>(i)] * inv;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    std::string var = a.is_constant() ? b.var() : a.var();
    return {UniPoly(var, std::move(q)), UniPoly(var, std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NonExactDivision("(" + a.str() + ") is not divisible by (" + b.str() + ")");
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    std::string var = a.is_constant() ? b.var() : a.var();
    if (a.is_zero()) return b.monic().renamed(var);
    if (b.is_zero()) return a.monic().renamed(var);
    ZPoly x = to_z(a), y = to_z(b);
    z_primitive(x);
    z_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = z_prem(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> c;
    for (auto& v : x) c.emplace_back(v, x.back());
    return UniPoly(var, std::move(c));
}

std::optional<UniPoly> poly_sqrt(const UniPoly& p) {
    if (p.is_zero()) return p;
    int n = p.degree();
    if (n % 2) return std::nullopt;
    auto lead = is_rational_square(p.leading());
    if (!lead) return std::nullopt;
    int m = n / 2;
    // Coefficients of q from the top down: p_{m+k} fixes q_k.
    std::vector<Rational> q(static_cast<std::size_t>(m) + 1);
    q[static_cast<std::size_t>(m)] = *lead;
    Rational inv2 = inverse(2 * *lead);
    for (int k = m - 1; k >= 0; --k) {
        Rational s = p.coeff(m + k);
        for (int i = k + 1; i <= m; ++i) {
            int j = m + k - i;
            if (j < k || j > m) continue;
            if (j == k) continue;
            s -= q[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)];
        }
        q[static_cast<std::size_t>(k)] = s * inv2;
    }
    UniPoly r(p.var(), std::move(q));
    if (!(r * r == p)) return std::nullopt;
    return r;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rational a = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << var_;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace ratdist
