// Recursive-descent parser for polynomial and rational-function text:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*
//   power  := atom ['^' ['-'] digits]
//   atom   := digits | ident | '(' expr ')'
#include "ratdist/errors.hpp"
#include "ratdist/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ratdist {

namespace {

using Frac = std::pair<MultiPoly, MultiPoly>;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    Parser(std::string text, VarList vars) : s_(std::move(text)), vars_(std::move(vars)) {}

    Frac run() {
        Frac r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Frac constant(const Rational& r) const { return {MultiPoly::constant(vars_, r), MultiPoly::constant(vars_, 1)}; }

    static Frac add(const Frac& a, const Frac& b, bool negate) {
        MultiPoly bn = negate ? -b.first : b.first;
        if (a.second == b.second) return {a.first + bn, a.second};
        return {a.first * b.second + bn * a.second, a.second * b.second};
    }

    Frac expr() {
        bool neg = false;
        skip();
        if (eat('-')) neg = true;
        else eat('+');
        Frac r = term();
        if (neg) r.first = -r.first;
        for (;;) {
            if (eat('+')) r = add(r, term(), false);
            else if (eat('-')) r = add(r, term(), true);
            else return r;
        }
    }

    Frac term() {
        Frac r = power();
        for (;;) {
            if (eat('*')) {
                Frac b = power();
                r = {r.first * b.first, r.second * b.second};
            } else if (eat('/')) {
                Frac b = power();
                if (b.first.is_zero()) fail("division by zero");
                r = {r.first * b.second, r.second * b.first};
            } else {
                return r;
            }
        }
    }

    Frac power() {
        Frac base = atom();
        if (!eat('^')) return base;
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent expected");
        unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
        Frac r{pow(base.first, e), pow(base.second, e)};
        if (neg) {
            if (r.first.is_zero()) fail("zero to a negative power");
            std::swap(r.first, r.second);
        }
        return r;
    }

    Frac atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Frac r = expr();
            if (!eat(')')) fail("')' expected");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(Rational(Integer(s_.substr(start, pos_ - start), 10)));
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) fail("unknown variable " + name);
            return {MultiPoly::var(vars_, name), MultiPoly::constant(vars_, 1)};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    VarList vars_;
    std::size_t pos_ = 0;
};

VarList collect_vars(const std::string& s) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < s.size();) {
        if (ident_start(s[i])) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            names.insert(s.substr(i, j - i));
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            while (i < s.size() && ident_char(s[i])) ++i;
        } else {
            ++i;
        }
    }
    return VarList(names.begin(), names.end());
}

} // namespace

namespace detail {

std::pair<MultiPoly, MultiPoly> parse_fraction(const std::string& text, const VarList& vars) {
    return Parser(text, vars.empty() ? collect_vars(text) : vars).run();
}

} // namespace detail

MultiPoly MultiPoly::parse(const std::string& text, const VarList& vars) {
    auto [n, d] = detail::parse_fraction(text, vars);
    if (!d.is_constant()) throw ParseError("not a polynomial: '" + text + "'");
    return n * inverse(d.constant_term());
}

} // namespace ratdist
