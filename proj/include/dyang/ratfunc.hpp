#pragma once

// Exact rational functions in one spectral variable x with coefficients in
// Q[h] (no truncation).  These carry the R-matrix entries such as (x+h)/x
// and make the Yang-Baxter / unitarity checks exact identities.
//
// QhPoly: dense polynomial in h over Q.
// XPoly:  polynomial in x over QhPoly.
// RatFunc: reduced fraction num/den of XPoly; reduction is by content
// normalization plus a primitive-PRS gcd in Q[h][x].

#include "dyang/hpoly.hpp"
#include "dyang/rational.hpp"

#include <string>
#include <vector>

namespace dyang {

class QhPoly {
public:
    QhPoly() = default;
    explicit QhPoly(const Rat& c) {
        if (!dyang::is_zero(c)) c_.push_back(c);
    }
    static QhPoly h_power(int k, const Rat& v = Rat(1)) {
        QhPoly p;
        if (!dyang::is_zero(v)) {
            p.c_.assign(k + 1, Rat(0));
            p.c_[k] = v;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int d) const {
        if (d < 0 || d > degree()) return Rat(0);
        return c_[d];
    }
    void set(int d, const Rat& v) {
        if (d >= static_cast<int>(c_.size())) {
            if (dyang::is_zero(v)) return;
            c_.resize(d + 1, Rat(0));
        }
        c_[d] = v;
        trim();
    }

    QhPoly operator+(const QhPoly& o) const;
    QhPoly operator-(const QhPoly& o) const;
    QhPoly operator*(const QhPoly& o) const;
    QhPoly negated() const;
    QhPoly scaled(const Rat& q) const;
    bool operator==(const QhPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QhPoly& o) const { return !(*this == o); }

    // Exact division; throws when not divisible.
    QhPoly divided_by(const QhPoly& o) const;
    static QhPoly gcd(const QhPoly& a, const QhPoly& b);

    Rat eval(const Rat& h) const {
        Rat acc(0);
        for (int d = degree(); d >= 0; --d) acc = acc * h + c_[d];
        return acc;
    }

    HPoly truncated(int m) const {
        HPoly r(m);
        for (int d = 0; d <= m && d <= degree(); ++d) r.set(d, c_[d]);
        return r;
    }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && dyang::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<Rat> c_;
};

class XPoly {
public:
    XPoly() = default;
    explicit XPoly(const QhPoly& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    static XPoly x_power(int k, const QhPoly& v) {
        XPoly p;
        if (!v.is_zero()) {
            p.c_.assign(k + 1, QhPoly());
            p.c_[k] = v;
        }
        return p;
    }
    // Convenience: a*x + b*h + c
    static XPoly linear(const Rat& a, const Rat& b, const Rat& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const QhPoly& coeff_ref(int d) const { return c_[d]; }
    QhPoly coeff(int d) const {
        if (d < 0 || d > degree()) return QhPoly();
        return c_[d];
    }
    void set(int d, const QhPoly& v) {
        if (d >= static_cast<int>(c_.size())) {
            if (v.is_zero()) return;
            c_.resize(d + 1, QhPoly());
        }
        c_[d] = v;
        trim();
    }

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    XPoly negated() const;
    bool operator==(const XPoly& o) const { return c_ == o.c_; }

    QhPoly content() const;                 // gcd of coefficients in Q[h]
    XPoly primitive_part() const;
    static XPoly gcd(XPoly a, XPoly b);     // primitive-PRS gcd
    // Pseudo-division helpers.
    static void pseudo_rem(const XPoly& a, const XPoly& b, XPoly& rem);
    XPoly divided_by(const XPoly& o) const; // exact division, throws otherwise

    QhPoly eval_x(const Rat& x) const {
        QhPoly acc;
        for (int d = degree(); d >= 0; --d) acc = acc * QhPoly(x) + c_[d];
        return acc;
    }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<QhPoly> c_;
};

class RatFunc {
public:
    RatFunc() : num_(), den_(XPoly(QhPoly(Rat(1)))) {}
    RatFunc(XPoly num, XPoly den);
    static RatFunc from_rat(const Rat& q) { return RatFunc(XPoly(QhPoly(q)), XPoly(QhPoly(Rat(1)))); }
    static RatFunc one() { return from_rat(Rat(1)); }

    const XPoly& num() const { return num_; }
    const XPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc scaled(const Rat& q) const { return *this * from_rat(q); }
    RatFunc h_mul(int k) const { return *this * RatFunc(XPoly(QhPoly::h_power(k)), XPoly(QhPoly(Rat(1)))); }
    RatFunc inverted() const;

    bool operator==(const RatFunc& o) const;  // cross-multiplied equality
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Evaluation at rational (x, h); throws on vanishing denominator.
    Rat eval(const Rat& x, const Rat& h) const;

    std::string str() const;

private:
    void reduce();
    XPoly num_, den_;
};

}  // namespace dyang
