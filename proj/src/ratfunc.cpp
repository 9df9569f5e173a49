#include "ratdist/ratfunc.hpp"

#include "ratdist/errors.hpp"

#include <algorithm>

namespace ratdist {

namespace {

// The single variable a univariate pair lives in, or empty when the pair
// involves several.
std::optional<std::string> common_uni_var(const MultiPoly& a, const MultiPoly& b) {
    VarList u = merge_vars(a.used_vars(), b.used_vars());
    if (u.size() > 1) return std::nullopt;
    if (u.empty()) return a.vars().empty() ? std::string() : a.vars().front();
    return u.front();
}

} // namespace

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw VariableMismatch("numerator and denominator variable lists differ");
    normalize();
}

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) {
    std::string v = num.is_constant() ? den.var() : num.var();
    VarList vars{v};
    num_ = MultiPoly::from_uni(num, vars);
    den_ = MultiPoly::from_uni(den, vars);
    normalize();
}

RatFunc RatFunc::constant(const VarList& vars, const Rational& c) {
    return RatFunc(MultiPoly::constant(vars, c), MultiPoly::constant(vars, 1), Raw{});
}

RatFunc RatFunc::var(const VarList& vars, const std::string& name) {
    return RatFunc(MultiPoly::var(vars, name), MultiPoly::constant(vars, 1), Raw{});
}

RatFunc RatFunc::parse(const std::string& text, const VarList& vars) {
    auto [n, d] = detail::parse_fraction(text, vars);
    return RatFunc(std::move(n), std::move(d));
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    const VarList& vars = num_.vars();
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(vars, 1);
        return;
    }
    if (den_.is_constant()) {
        Rational c = den_.constant_term();
        if (c != 1) {
            num_ *= ratdist::inverse(c);
            den_ = MultiPoly::constant(vars, 1);
        }
        return;
    }
    if (auto v = common_uni_var(num_, den_)) {
        UniPoly n = num_.to_uni(*v), d = den_.to_uni(*v);
        UniPoly g = gcd(n, d);
        if (g.degree() > 0) {
            n = exact_div(n, g);
            d = exact_div(d, g);
        }
        Rational l = ratdist::inverse(d.leading());
        num_ = MultiPoly::from_uni(n * l, vars);
        den_ = MultiPoly::from_uni(d * l, vars);
        return;
    }
    if (auto q = try_exact_div(num_, den_)) {
        num_ = std::move(*q);
        den_ = MultiPoly::constant(vars, 1);
        return;
    }
    Rational c = den_.content();
    if (den_.leading_term().second.sign() < 0) c = -c;
    if (c != 1) {
        Rational ic = ratdist::inverse(c);
        num_ *= ic;
        den_ *= ic;
    }
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw InvalidArgument("not a constant: " + str());
    return num_.constant_term() / den_.constant_term();
}

Rational RatFunc::eval(const std::map<std::string, Rational>& at) const {
    Rational d = den_.eval(at);
    if (d.is_zero()) throw EvaluationAtPole("denominator vanishes at the given point: " + str());
    return num_.eval(at) / d;
}

RatFunc RatFunc::with_vars(const VarList& vars) const {
    if (vars == this->vars()) return *this;
    return RatFunc(num_.with_vars(vars), den_.with_vars(vars));
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (b.den_.is_constant()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.is_constant()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::constant(a.vars(), 0);
    VarList used = merge_vars(merge_vars(a.num_.used_vars(), a.den_.used_vars()),
                              merge_vars(b.num_.used_vars(), b.den_.used_vars()));
    if (used.size() <= 1 && !a.vars().empty()) {
        std::string v = used.empty() ? a.vars().front() : used.front();
        // Both reduced: only cross cancellations are possible.
        UniPoly an = a.num_.to_uni(v), ad = a.den_.to_uni(v);
        UniPoly bn = b.num_.to_uni(v), bd = b.den_.to_uni(v);
        UniPoly g1 = gcd(an, bd), g2 = gcd(bn, ad);
        if (g1.degree() > 0) {
            an = exact_div(an, g1);
            bd = exact_div(bd, g1);
        }
        if (g2.degree() > 0) {
            bn = exact_div(bn, g2);
            ad = exact_div(ad, g2);
        }
        UniPoly n = an * bn, d = ad * bd;
        Rational l = ratdist::inverse(d.leading());
        const VarList& vars = a.vars();
        return RatFunc(MultiPoly::from_uni(n * l, vars), MultiPoly::from_uni(d * l, vars), RatFunc::Raw{});
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc operator/(const RatFunc& a, const Rational& r) {
    if (r.is_zero()) throw DivisionByZero("rational function divided by zero");
    return RatFunc(a.num_ * ratdist::inverse(r), a.den_, RatFunc::Raw{});
}

bool operator==(const RatFunc& a, const RatFunc& b) { return same_function(a, b); }

bool same_function(const RatFunc& a, const RatFunc& b) {
    if (a.vars() != b.vars()) throw VariableMismatch("comparing rational functions over different variables");
    if (a.num() == b.num() && a.den() == b.den()) return true;
    return a.num() * b.den() == b.num() * a.den();
}

RatFunc pow(const RatFunc& f, int e) {
    if (e < 0) return pow(f.inverse(), -e);
    RatFunc r = RatFunc::constant(f.vars(), 1), b = f;
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1) r = r * b;
        u >>= 1;
        if (u) b = b * b;
    }
    return r;
}

std::optional<RatFunc> ratfunc_square_root(const RatFunc& f) {
    if (f.is_zero()) return f;
    if (common_uni_var(f.num(), f.den())) {
        auto n = poly_sqrt(f.num());
        if (!n) return std::nullopt;
        auto d = poly_sqrt(f.den());
        if (!d) return std::nullopt;
        return RatFunc(*n, *d);
    }
    // N/D is a square iff N*D is; the root is sqrt(N*D)/D.
    auto s = poly_sqrt(f.num() * f.den());
    if (!s) return std::nullopt;
    return RatFunc(*s, f.den());
}

Bindings rational_bindings(const std::map<std::string, Rational>& at, const VarList& target) {
    Bindings b;
    for (const auto& [k, v] : at) b.emplace(k, RatFunc::constant(target, v));
    return b;
}

RatFunc subst(const MultiPoly& p, const Bindings& b, const VarList& target) {
    const VarList& src = p.vars();
    const std::size_t n = src.size();
    std::vector<MultiPoly> nums, dens;
    std::vector<unsigned> maxdeg(n, 0);
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i) maxdeg[i] = std::max(maxdeg[i], m[i]);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = b.find(src[i]);
        if (it == b.end()) {
            if (maxdeg[i] && std::find(target.begin(), target.end(), src[i]) == target.end())
                throw VariableMismatch("unbound variable " + src[i] + " missing from target list");
            if (maxdeg[i]) nums.push_back(MultiPoly::var(target, src[i]));
            else nums.push_back(MultiPoly::constant(target, 1));
            dens.push_back(MultiPoly::constant(target, 1));
        } else {
            RatFunc v = it->second.with_vars(target);
            nums.push_back(v.num());
            dens.push_back(v.den());
        }
    }
    // Power tables of numerators and denominators.
    std::vector<std::vector<MultiPoly>> np(n), dp(n);
    for (std::size_t i = 0; i < n; ++i) {
        np[i].push_back(MultiPoly::constant(target, 1));
        dp[i].push_back(MultiPoly::constant(target, 1));
        bool trivial_den = dens[i].is_constant() && dens[i].constant_term() == 1;
        for (unsigned k = 1; k <= maxdeg[i]; ++k) {
            np[i].push_back(np[i].back() * nums[i]);
            dp[i].push_back(trivial_den ? dp[i].back() : dp[i].back() * dens[i]);
        }
    }
    MultiPoly num(target);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (!maxdeg[i]) continue;
            if (m[i]) t = t * np[i][m[i]];
            if (maxdeg[i] - m[i]) t = t * dp[i][maxdeg[i] - m[i]];
        }
        num += t;
    }
    MultiPoly den = MultiPoly::constant(target, 1);
    for (std::size_t i = 0; i < n; ++i)
        if (maxdeg[i]) den = den * dp[i][maxdeg[i]];
    return RatFunc(std::move(num), std::move(den));
}

RatFunc subst(const RatFunc& f, const Bindings& b, const VarList& target) {
    RatFunc d = subst(f.den(), b, target);
    if (d.is_zero()) throw EvaluationAtPole("denominator vanishes identically after substitution: " + f.str());
    return subst(f.num(), b, target) / d;
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace ratdist
