#include "ratdist/multipoly.hpp"

#include "ratdist/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ratdist {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

VarList merge_vars(const VarList& a, const VarList& b) {
    VarList r = a;
    for (const auto& v : b)
        if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
    return r;
}

MultiPoly MultiPoly::constant(const VarList& vars, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(Monomial(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::var(const VarList& vars, const std::string& name) {
    MultiPoly p(vars);
    int i = p.var_index(name);
    if (i < 0) throw VariableMismatch("variable " + name + " not in list");
    Monomial m(vars.size(), 0);
    m[static_cast<std::size_t>(i)] = 1;
    p.add_term(m, 1);
    return p;
}

MultiPoly MultiPoly::from_uni(const UniPoly& u, const VarList& vars) {
    MultiPoly p(vars);
    if (u.is_zero()) return p;
    int i = u.is_constant() ? 0 : p.var_index(u.var());
    if (i < 0) throw VariableMismatch("variable " + u.var() + " not in list");
    for (int k = 0; k <= u.degree(); ++k) {
        Monomial m(vars.size(), 0);
        if (k) m[static_cast<std::size_t>(i)] = static_cast<unsigned>(k);
        p.add_term(m, u.coeffs()[static_cast<std::size_t>(k)]);
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && ratdist::total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const { return coeff(Monomial(vars_.size(), 0)); }

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != vars_.size()) throw VariableMismatch("monomial arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(ratdist::total_degree(terms_.rbegin()->first));
}

int MultiPoly::min_total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(ratdist::total_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(const std::string& name) const {
    int i = var_index(name);
    if (i < 0) return terms_.empty() ? -1 : 0;
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[static_cast<std::size_t>(i)]));
    return d;
}

VarList MultiPoly::used_vars() const {
    VarList r;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (const auto& [m, c] : terms_)
            if (m[i]) {
                r.push_back(vars_[i]);
                break;
            }
    return r;
}

std::pair<Monomial, Rational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
    return *terms_.rbegin();
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& name) const {
    int i = var_index(name);
    if (i < 0) throw VariableMismatch("variable " + name + " not in list");
    std::vector<MultiPoly> r(static_cast<std::size_t>(std::max(degree_in(name), 0)) + 1, MultiPoly(vars_));
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        unsigned k = mm[static_cast<std::size_t>(i)];
        mm[static_cast<std::size_t>(i)] = 0;
        r[k].add_term(mm, c);
    }
    return r;
}

MultiPoly MultiPoly::partial(const std::string& name) const {
    int i = var_index(name);
    MultiPoly r(vars_);
    if (i < 0) return r;
    for (const auto& [m, c] : terms_) {
        unsigned k = m[static_cast<std::size_t>(i)];
        if (!k) continue;
        Monomial mm = m;
        mm[static_cast<std::size_t>(i)] = k - 1;
        r.add_term(mm, c * Rational(static_cast<long>(k)));
    }
    return r;
}

namespace {

// Powers cache for evaluation.
struct PowTable {
    std::vector<std::vector<Rational>> p;
    PowTable(const std::vector<Rational>& vals, const std::vector<unsigned>& maxdeg) {
        p.resize(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            p[i].push_back(1);
            for (unsigned k = 1; k <= maxdeg[i]; ++k) p[i].push_back(p[i].back() * vals[i]);
        }
    }
};

} // namespace

Rational MultiPoly::eval(const std::map<std::string, Rational>& at) const {
    MultiPoly s = specialize(at);
    if (!s.is_constant()) throw InvalidArgument("eval: unbound variables in " + s.str());
    return s.constant_term();
}

MultiPoly MultiPoly::specialize(const std::map<std::string, Rational>& at) const {
    std::vector<Rational> vals(vars_.size());
    std::vector<bool> bound(vars_.size(), false);
    std::vector<unsigned> maxdeg(vars_.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = at.find(vars_[i]);
        if (it != at.end()) {
            vals[i] = it->second;
            bound[i] = true;
        }
    }
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i) maxdeg[i] = std::max(maxdeg[i], m[i]);
    PowTable pt(vals, maxdeg);
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        Monomial mm = m;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!bound[i] || !m[i]) continue;
            v *= pt.p[i][m[i]];
            mm[i] = 0;
        }
        r.add_term(mm, v);
    }
    return r;
}

MultiPoly MultiPoly::with_vars(const VarList& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> map(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it != vars.end()) map[i] = static_cast<int>(it - vars.begin());
    }
    MultiPoly r(vars);
    for (const auto& [m, c] : terms_) {
        Monomial mm(vars.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (map[i] < 0) throw VariableMismatch("variable " + vars_[i] + " missing from target list");
            mm[static_cast<std::size_t>(map[i])] = m[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

UniPoly MultiPoly::to_uni(const std::string& var) const {
    VarList used = used_vars();
    if (used.size() > 1 || (used.size() == 1 && used[0] != var))
        throw VariableMismatch("not univariate in " + var + ": " + str());
    int i = var_index(var);
    std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
    for (const auto& [m, v] : terms_) c[i < 0 ? 0 : m[static_cast<std::size_t>(i)]] = v;
    return UniPoly(var, std::move(c));
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return 0;
    Integer g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(g, l);
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (leading_term().second.sign() < 0) c = -c;
    return *this * inverse(c);
}

void MultiPoly::check_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) {
        auto join = [](const VarList& v) {
            std::string s;
            for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
            return "[" + s + "]";
        };
        throw VariableMismatch("variable lists " + join(vars_) + " and " + join(o.vars_));
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& r) {
    if (r.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
}

MultiPoly operator+(MultiPoly a, const Rational& r) {
    a.add_term(Monomial(a.vars_.size(), 0), r);
    return a;
}

MultiPoly operator-(MultiPoly a, const Rational& r) {
    a.add_term(Monomial(a.vars_.size(), 0), -r);
    return a;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly r(a.vars_);
    const std::size_t n = a.vars_.size();
    Monomial m(n);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
    MultiPoly r = MultiPoly::constant(p.vars(), 1), b = p;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::optional<MultiPoly> try_exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.vars() != b.vars()) throw VariableMismatch("exact_div variable lists differ");
    MultiPoly q(a.vars()), r = a;
    auto [lm, lc] = b.leading_term();
    Rational inv = inverse(lc);
    const std::size_t n = lm.size();
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        Monomial t(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rm[i] < lm[i]) return std::nullopt;
            t[i] = rm[i] - lm[i];
        }
        MultiPoly term(a.vars());
        term.add_term(t, rc * inv);
        q += term;
        r -= term * b;
    }
    return q;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw NonExactDivision("(" + a.str() + ") is not divisible by (" + b.str() + ")");
    return *q;
}

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
    if (p.is_zero()) return p;
    if (p.total_degree() % 2 || p.min_total_degree() % 2) return std::nullopt;
    auto [lm, lc] = p.leading_term();
    auto root = is_rational_square(lc);
    if (!root) return std::nullopt;
    Monomial qm(lm.size());
    for (std::size_t i = 0; i < lm.size(); ++i) {
        if (lm[i] % 2) return std::nullopt;
        qm[i] = lm[i] / 2;
    }
    const unsigned floor_deg = static_cast<unsigned>(p.min_total_degree()) / 2;
    MultiPoly q(p.vars());
    q.add_term(qm, *root);
    MultiPoly r = p - q * q;
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        Monomial t(rm.size());
        for (std::size_t i = 0; i < rm.size(); ++i) {
            if (rm[i] < qm[i]) return std::nullopt;
            t[i] = rm[i] - qm[i];
        }
        if (total_degree(t) < floor_deg) return std::nullopt;
        MultiPoly term(p.vars());
        term.add_term(t, rc / (2 * *root));
        // r -= 2*q*term + term^2
        r -= (q * Rational(2) + term) * term;
        q += term;
    }
    return q;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    case PolyOp::exact_div: return exact_div(a, b);
    }
    throw InvalidArgument("unknown op");
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = ratdist::total_degree(m) == 0;
        bool need_star = false;
        if (constant || a != 1) {
            os << a;
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (m[i] > 1) os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

} // namespace ratdist
