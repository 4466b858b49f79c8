#include "dyang/ratfunc.hpp"

#include <sstream>

namespace dyang {

QhPoly QhPoly::operator+(const QhPoly& o) const {
    QhPoly r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t d = 0; d < r.c_.size(); ++d) {
        if (d < c_.size()) r.c_[d] += c_[d];
        if (d < o.c_.size()) r.c_[d] += o.c_[d];
    }
    r.trim();
    return r;
}

QhPoly QhPoly::operator-(const QhPoly& o) const { return *this + o.negated(); }

QhPoly QhPoly::negated() const {
    QhPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

QhPoly QhPoly::scaled(const Rat& q) const {
    if (dyang::is_zero(q)) return QhPoly();
    QhPoly r(*this);
    for (auto& x : r.c_) x *= q;
    return r;
}

QhPoly QhPoly::operator*(const QhPoly& o) const {
    QhPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t a = 0; a < c_.size(); ++a) {
        if (dyang::is_zero(c_[a])) continue;
        for (size_t b = 0; b < o.c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
    }
    r.trim();
    return r;
}

QhPoly QhPoly::divided_by(const QhPoly& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    QhPoly rem(*this), q;
    int dq = degree() - o.degree();
    if (rem.is_zero()) return q;
    if (dq < 0) throw std::domain_error("inexact polynomial division");
    q.c_.assign(dq + 1, Rat(0));
    for (int d = dq; d >= 0; --d) {
        Rat lead = rem.coeff(o.degree() + d) / o.coeff(o.degree());
        q.c_[d] = lead;
        if (dyang::is_zero(lead)) continue;
        for (int t = 0; t <= o.degree(); ++t)
            rem.set(t + d, rem.coeff(t + d) - lead * o.coeff(t));
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    q.trim();
    return q;
}

QhPoly QhPoly::gcd(const QhPoly& a, const QhPoly& b) {
    QhPoly x = a, y = b;
    while (!y.is_zero()) {
        // Euclid over Q[h]: remainder of x by y.
        QhPoly rem = x;
        while (!rem.is_zero() && rem.degree() >= y.degree()) {
            Rat lead = rem.coeff(rem.degree()) / y.coeff(y.degree());
            int shift = rem.degree() - y.degree();
            for (int t = 0; t <= y.degree(); ++t)
                rem.set(t + shift, rem.coeff(t + shift) - lead * y.coeff(t));
        }
        x = y;
        y = rem;
    }
    if (x.is_zero()) return x;
    // Monic normalization.
    return x.scaled(Rat(1) / x.coeff(x.degree()));
}

std::string QhPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        if (dyang::is_zero(c_[d])) continue;
        if (!first) os << " + ";
        os << rat_str(c_[d]);
        if (d == 1) os << "*h";
        if (d > 1) os << "*h^" << d;
        first = false;
    }
    return os.str();
}

XPoly XPoly::linear(const Rat& a, const Rat& b, const Rat& c) {
    XPoly p;
    QhPoly c0(c);
    c0 = c0 + QhPoly::h_power(1, b);
    p.set(0, c0);
    p.set(1, QhPoly(a));
    return p;
}

XPoly XPoly::operator+(const XPoly& o) const {
    XPoly r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), QhPoly());
    for (size_t d = 0; d < r.c_.size(); ++d) {
        if (d < c_.size()) r.c_[d] = r.c_[d] + c_[d];
        if (d < o.c_.size()) r.c_[d] = r.c_[d] + o.c_[d];
    }
    r.trim();
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + o.negated(); }

XPoly XPoly::negated() const {
    XPoly r(*this);
    for (auto& x : r.c_) x = x.negated();
    return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
    XPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, QhPoly());
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (size_t b = 0; b < o.c_.size(); ++b)
            r.c_[a + b] = r.c_[a + b] + c_[a] * o.c_[b];
    }
    r.trim();
    return r;
}

QhPoly XPoly::content() const {
    QhPoly g;
    for (const auto& c : c_) g = QhPoly::gcd(g, c);
    return g;
}

XPoly XPoly::primitive_part() const {
    if (is_zero()) return *this;
    QhPoly g = content();
    XPoly r(*this);
    for (auto& c : r.c_) c = c.divided_by(g);
    return r;
}

void XPoly::pseudo_rem(const XPoly& a, const XPoly& b, XPoly& rem) {
    // lead(b)^{deg a - deg b + 1} * a = q*b + rem
    rem = a;
    QhPoly lb = b.coeff(b.degree());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        QhPoly lr = rem.coeff(rem.degree());
        XPoly scaled_rem;
        for (int d = 0; d <= rem.degree(); ++d) scaled_rem.set(d, rem.coeff(d) * lb);
        for (int t = 0; t <= b.degree(); ++t)
            scaled_rem.set(t + shift, scaled_rem.coeff(t + shift) - lr * b.coeff(t));
        rem = scaled_rem;
    }
}

XPoly XPoly::gcd(XPoly a, XPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        XPoly rem;
        pseudo_rem(a, b, rem);
        a = b;
        b = rem.is_zero() ? rem : rem.primitive_part();
    }
    return a;
}

XPoly XPoly::divided_by(const XPoly& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    XPoly rem(*this), q;
    if (rem.is_zero()) return q;
    int dq = degree() - o.degree();
    if (dq < 0) throw std::domain_error("inexact polynomial division");
    for (int d = dq; d >= 0; --d) {
        QhPoly lead = rem.coeff(o.degree() + d);
        if (lead.is_zero()) continue;
        QhPoly qd = lead.divided_by(o.coeff(o.degree()));
        q.set(d, qd);
        for (int t = 0; t <= o.degree(); ++t)
            rem.set(t + d, rem.coeff(t + d) - qd * o.coeff(t));
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        if (c_[d].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[d].str() << ")";
        if (d == 1) os << "*x";
        if (d > 1) os << "*x^" << d;
        first = false;
    }
    return os.str();
}

RatFunc::RatFunc(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = XPoly(QhPoly(Rat(1)));
        return;
    }
    XPoly g = XPoly::gcd(num_, den_);
    if (!g.is_zero() && (g.degree() > 0 || !(g == XPoly(QhPoly(Rat(1)))))) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    // Content normalization: make denominator primitive with positive
    // leading rational, fold the ratio of contents into the numerator.
    QhPoly cd = den_.content();
    if (!(cd == QhPoly(Rat(1)))) {
        den_ = den_.primitive_part();
        // num/cd may be inexact over Q[h]; multiply num by 1 and divide den:
        // instead scale both by 1/lc where possible -- we fold cd into num by
        // exact division when possible, else keep cd on den.
        bool ok = true;
        XPoly n2;
        try {
            for (int d = 0; d <= num_.degree(); ++d) n2.set(d, num_.coeff(d).divided_by(cd));
        } catch (const std::domain_error&) {
            ok = false;
        }
        if (ok) {
            num_ = n2;
        } else {
            XPoly dd;
            for (int d = 0; d <= den_.degree(); ++d) dd.set(d, den_.coeff(d) * cd);
            den_ = dd;
        }
    }
    Rat lc = den_.coeff(den_.degree()).coeff(den_.coeff(den_.degree()).degree());
    if (!dyang::is_zero(lc)) {
        Rat s = Rat(1) / lc;
        XPoly n2, d2;
        for (int d = 0; d <= num_.degree(); ++d) n2.set(d, num_.coeff(d).scaled(s));
        for (int d = 0; d <= den_.degree(); ++d) d2.set(d, den_.coeff(d).scaled(s));
        num_ = n2;
        den_ = d2;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverted() const {
    if (is_zero()) throw std::domain_error("zero has no inverse");
    return RatFunc(den_, num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

Rat RatFunc::eval(const Rat& x, const Rat& h) const {
    Rat d = den_.eval_x(x).eval(h);
    if (dyang::is_zero(d)) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.eval_x(x).eval(h) / d;
}

std::string RatFunc::str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
    return os.str();
}

}  // namespace dyang
