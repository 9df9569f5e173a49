#include "ratdist/quadfield.hpp"

#include "ratdist/errors.hpp"

namespace ratdist {

namespace {

bool square_free(long d) {
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

void check_same(const QuadElem& a, const QuadElem& b) {
    if (a.radicand() != b.radicand())
        throw RadicandMismatch("radicands " + std::to_string(a.radicand()) + " and " +
                               std::to_string(b.radicand()));
}

} // namespace

QuadElem::QuadElem(Rational base, Rational coeff, long d)
    : base_(std::move(base)), coeff_(std::move(coeff)), d_(d) {
    if (d < 2 || !square_free(d)) throw InvalidArgument("radicand must be square-free and >= 2");
}

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt d)");
    Rational n = norm();
    return QuadElem(base_ / n, -coeff_ / n, d_);
}

std::string QuadElem::str() const {
    if (coeff_.is_zero()) return base_.str();
    std::string s = base_.is_zero() ? "" : base_.str();
    if (!s.empty()) s += coeff_.sign() < 0 ? "-" : "+";
    else if (coeff_.sign() < 0) s += "-";
    s += abs(coeff_).str() + "*sqrt(" + std::to_string(d_) + ")";
    return s;
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    check_same(a, b);
    return QuadElem(a.base_ + b.base_, a.coeff_ + b.coeff_, a.d_);
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    check_same(a, b);
    return QuadElem(a.base_ - b.base_, a.coeff_ - b.coeff_, a.d_);
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    check_same(a, b);
    return QuadElem(a.base_ * b.base_ + Rational(a.d_) * a.coeff_ * b.coeff_,
                    a.base_ * b.coeff_ + a.coeff_ * b.base_, a.d_);
}

QuadElem operator/(const QuadElem& a, const QuadElem& b) {
    check_same(a, b);
    return a * b.inverse();
}

bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.d_ == b.d_ && a.base_ == b.base_ && a.coeff_ == b.coeff_;
}

QuadElem quad_arith(const QuadElem& a, const QuadElem& b, QuadOp op) {
    switch (op) {
    case QuadOp::add: return a + b;
    case QuadOp::sub: return a - b;
    case QuadOp::mul: return a * b;
    case QuadOp::div: return a / b;
    }
    throw InvalidArgument("unknown op");
}

std::optional<QuadElem> quad_sqrt(const QuadElem& x) {
    long d = x.radicand();
    if (x.is_zero()) return x;
    if (x.coeff().is_zero()) {
        if (auto r = is_rational_square(x.base())) return QuadElem::rational(*r, d);
        if (auto r = is_rational_square(x.base() / Rational(d))) return QuadElem(0, *r, d);
        return std::nullopt;
    }
    // (r + s sqrt d)^2 = a + b sqrt d with r^2 = (a +- n)/2, n^2 = a^2 - d b^2.
    auto n = is_rational_square(x.norm());
    if (!n) return std::nullopt;
    for (const Rational& cand : {(x.base() + *n) / 2, (x.base() - *n) / 2}) {
        auto r = is_rational_square(cand);
        if (!r || r->is_zero()) continue;
        QuadElem s(*r, x.coeff() / (2 * *r), d);
        if (s * s == x) return s;
    }
    return std::nullopt;
}

QuadElem pow(const QuadElem& x, unsigned e) {
    QuadElem r = QuadElem::rational(1, x.radicand()), b = x;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

} // namespace ratdist
