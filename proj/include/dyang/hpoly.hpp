#pragma once

// Truncated polynomials in the deformation parameter h over Q, computed
// modulo h^{M+1}.  Every value carries its truncation order M; arithmetic
// between mismatched truncations is an error (callers re-truncate
// explicitly).  Dense storage with trailing zeros trimmed, so equal values
// have equal representations.

#include "dyang/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace dyang {

class HPoly {
public:
    explicit HPoly(int trunc) : trunc_(trunc) {
        if (trunc < 0) throw std::invalid_argument("negative h-truncation");
    }

    static HPoly constant(int trunc, const Rat& v) {
        HPoly p(trunc);
        p.set(0, v);
        return p;
    }

    static HPoly h_power(int trunc, int k, const Rat& v = Rat(1)) {
        HPoly p(trunc);
        p.set(k, v);
        return p;
    }

    int trunc() const { return trunc_; }
    bool is_zero() const { return c_.empty(); }

    Rat coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(c_.size())) return Rat(0);
        return c_[d];
    }

    void set(int d, const Rat& v) {
        if (d < 0) throw std::invalid_argument("negative h-degree");
        if (d > trunc_) return;  // beyond truncation: silently modded out
        if (d >= static_cast<int>(c_.size())) {
            if (dyang::is_zero(v)) return;
            c_.resize(d + 1, Rat(0));
        }
        c_[d] = v;
        trim();
    }

    // Lowest stored nonzero degree; trunc()+1 when the value is zero.
    int low_degree() const {
        for (int d = 0; d < static_cast<int>(c_.size()); ++d)
            if (!dyang::is_zero(c_[d])) return d;
        return trunc_ + 1;
    }

    HPoly operator+(const HPoly& o) const {
        check(o);
        HPoly r(trunc_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t d = 0; d < r.c_.size(); ++d) {
            if (d < c_.size()) r.c_[d] += c_[d];
            if (d < o.c_.size()) r.c_[d] += o.c_[d];
        }
        r.trim();
        return r;
    }

    HPoly operator-(const HPoly& o) const { return *this + o.negated(); }

    HPoly negated() const {
        HPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    HPoly operator*(const HPoly& o) const {
        check(o);
        HPoly r(trunc_);
        if (is_zero() || o.is_zero()) return r;
        size_t len = std::min<size_t>(c_.size() + o.c_.size() - 1, trunc_ + 1);
        r.c_.assign(len, Rat(0));
        for (size_t a = 0; a < c_.size(); ++a) {
            if (dyang::is_zero(c_[a])) continue;
            for (size_t b = 0; b < o.c_.size() && a + b < len; ++b)
                r.c_[a + b] += c_[a] * o.c_[b];
        }
        r.trim();
        return r;
    }

    HPoly scaled(const Rat& q) const {
        if (dyang::is_zero(q)) return HPoly(trunc_);
        HPoly r(*this);
        for (auto& x : r.c_) x *= q;
        return r;
    }

    // Multiplication by h^k.
    HPoly h_mul(int k) const {
        if (k == 0) return *this;
        HPoly r(trunc_);
        for (int d = 0; d + k <= trunc_ && d < static_cast<int>(c_.size()); ++d)
            if (!dyang::is_zero(c_[d])) r.set(d + k, c_[d]);
        return r;
    }

    // Exact division by h^k; fails if any coefficient below degree k is nonzero.
    HPoly div_h(int k) const {
        for (int d = 0; d < k; ++d)
            if (!dyang::is_zero(coeff(d)))
                throw std::domain_error("h-division not exact");
        HPoly r(trunc_);
        for (int d = k; d < static_cast<int>(c_.size()); ++d) r.set(d - k, c_[d]);
        return r;
    }

    HPoly retrunc(int m) const {
        HPoly r(m);
        for (int d = 0; d <= m && d < static_cast<int>(c_.size()); ++d) r.set(d, c_[d]);
        return r;
    }

    // Multiplicative inverse; requires a unit (nonzero h^0 part).
    HPoly inverted() const {
        if (dyang::is_zero(coeff(0))) throw std::domain_error("non-unit HPoly has no inverse");
        Rat inv0 = Rat(1) / coeff(0);
        HPoly r = HPoly::constant(trunc_, inv0);
        for (int d = 1; d <= trunc_; ++d) {
            Rat s(0);
            for (int e = 1; e <= d; ++e) s += coeff(e) * r.coeff(d - e);
            r.set(d, -inv0 * s);
        }
        return r;
    }

    bool operator==(const HPoly& o) const { return trunc_ == o.trunc_ && c_ == o.c_; }
    bool operator!=(const HPoly& o) const { return !(*this == o); }

    bool operator<(const HPoly& o) const {
        if (trunc_ != o.trunc_) return trunc_ < o.trunc_;
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (size_t d = 0; d < c_.size(); ++d)
            if (c_[d] != o.c_[d]) return c_[d] < o.c_[d];
        return false;
    }

    bool eq_mod(const HPoly& o, int m) const {
        for (int d = 0; d <= m; ++d)
            if (coeff(d) != o.coeff(d)) return false;
        return true;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = 0; d < static_cast<int>(c_.size()); ++d) {
            if (dyang::is_zero(c_[d])) continue;
            if (!first) os << " + ";
            os << rat_str(c_[d]);
            if (d == 1) os << "*h";
            if (d > 1) os << "*h^" << d;
            first = false;
        }
        return os.str();
    }

private:
    void check(const HPoly& o) const {
        if (trunc_ != o.trunc_)
            throw std::invalid_argument("h-truncation mismatch");
    }
    void trim() {
        while (!c_.empty() && dyang::is_zero(c_.back())) c_.pop_back();
    }

    int trunc_;
    std::vector<Rat> c_;
};

}  // namespace dyang
