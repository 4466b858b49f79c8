#pragma once

// Formal series in the spectral variable u over an arbitrary coefficient
// ring C (exact h-truncated scalars, algebra elements, diagonal
// polynomials).  Three shapes:
//
//   USeries<C>   directional: either only exponents <= 0 ("expanded in
//                negative powers of u") or only exponents >= 0, with
//                |exponent| <= order.  Products of same-direction series
//                are exact within the order window.
//   Laurent<C>   two-sided window [lo, hi]; used where plus- and
//                minus-type series mix.  The caller is responsible for
//                windows wide enough that trimmed tails are genuinely
//                zero modulo the h-truncation.
//   BiSeries<C>  bivariate window in (u, v) for region expansions,
//                kernels 1/(u-v+gamma*h)^m and the formal delta.
//
// The coefficient ring must provide: +, *, scaled(Rat), h_mul(int),
// is_zero(), and (only where series inversion is used) inverted().

#include "dyang/hpoly.hpp"
#include "dyang/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace dyang {

enum class Dir { NegU, NonNegU };

template <class C>
class USeries {
public:
    USeries(Dir dir, int order) : dir_(dir), order_(order) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }

    Dir dir() const { return dir_; }
    int order() const { return order_; }
    const std::map<int, C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    bool in_range(int e) const {
        if (dir_ == Dir::NegU) return e <= 0 && e >= -order_;
        return e >= 0 && e <= order_;
    }

    void add_to(int e, const C& v) {
        if (v.is_zero() || !in_range(e)) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    bool has(int e) const { return c_.count(e) != 0; }
    const C* find(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? nullptr : &it->second;
    }

    USeries operator+(const USeries& o) const {
        check(o);
        USeries r(*this);
        for (const auto& [e, v] : o.c_) r.add_to(e, v);
        return r;
    }

    USeries operator-(const USeries& o) const { return *this + o.scaled(Rat(-1)); }

    USeries operator*(const USeries& o) const {
        check(o);
        USeries r(dir_, order_);
        for (const auto& [a, va] : c_)
            for (const auto& [b, vb] : o.c_) {
                if (!r.in_range(a + b)) continue;
                r.add_to(a + b, va * vb);
            }
        return r;
    }

    USeries scaled(const Rat& q) const {
        USeries r(dir_, order_);
        for (const auto& [e, v] : c_) r.add_to(e, v.scaled(q));
        return r;
    }

    USeries scaled_c(const C& x) const {  // left multiplication by a coefficient
        USeries r(dir_, order_);
        for (const auto& [e, v] : c_) r.add_to(e, x * v);
        return r;
    }

    USeries h_mul(int k) const {
        USeries r(dir_, order_);
        for (const auto& [e, v] : c_) r.add_to(e, v.h_mul(k));
        return r;
    }

    // Left inverse (= two-sided modulo truncation): requires an invertible
    // coefficient at exponent 0.
    USeries inverted() const {
        auto it = c_.find(0);
        if (it == c_.end()) throw std::domain_error("series with no constant term has no inverse");
        C b0 = it->second.inverted();
        USeries r(dir_, order_);
        r.add_to(0, b0);
        int step = (dir_ == Dir::NegU) ? -1 : 1;
        for (int m = 1; m <= order_; ++m) {
            int e = step * m;
            C acc = b0;  // shape seed; replaced below
            bool any = false;
            for (const auto& [d, ad] : c_) {
                if (d == 0) continue;
                const C* re = r.find(e - d);
                if (!re) continue;
                C term = ad * (*re);
                acc = any ? acc + term : term;
                any = true;
            }
            if (!any) continue;
            r.add_to(e, (b0 * acc).scaled(Rat(-1)));
        }
        return r;
    }

    // u -> u + gamma*h, re-expanded in this direction.  Every introduced h
    // raises the h-degree, so the result is exact modulo the truncation.
    USeries shift_substitute(const Rat& gamma) const {
        if (dyang::is_zero(gamma)) return *this;
        USeries r(dir_, order_);
        for (const auto& [e, v] : c_) {
            Rat gpow(1);
            for (int j = 0;; ++j) {
                if (j > 0) gpow *= gamma;
                if (e >= 0 && j > e) break;  // binomial exhausted
                C hv = v.h_mul(j);
                if (hv.is_zero()) {
                    if (j > 0) break;  // h-budget exhausted
                    break;             // v itself zero (not stored, but be safe)
                }
                r.add_to(e - j, hv.scaled(binom_gen(e, j) * gpow));
            }
        }
        return r;
    }

    USeries retrunc_order(int ord) const {
        USeries r(dir_, ord);
        for (const auto& [e, v] : c_) r.add_to(e, v);
        return r;
    }

    bool operator==(const USeries& o) const {
        return dir_ == o.dir_ && order_ == o.order_ && c_ == o.c_;
    }

private:
    void check(const USeries& o) const {
        if (dir_ != o.dir_) throw std::invalid_argument("series direction mismatch");
        if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
    }

    Dir dir_;
    int order_;
    std::map<int, C> c_;
};

template <class C>
class Laurent {
public:
    Laurent(int lo, int hi) : lo_(lo), hi_(hi) {
        if (lo > hi) throw std::invalid_argument("empty Laurent window");
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const std::map<int, C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add_to(int e, const C& v) {
        if (v.is_zero() || e < lo_ || e > hi_) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    const C* find(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? nullptr : &it->second;
    }

    template <class C2>
    static Laurent from_useries(const USeries<C2>& s, int lo, int hi) {
        Laurent r(lo, hi);
        for (const auto& [e, v] : s.coeffs()) r.add_to(e, v);
        return r;
    }

    Laurent operator+(const Laurent& o) const {
        Laurent r(*this);
        for (const auto& [e, v] : o.c_) r.add_to(e, v);
        return r;
    }

    Laurent operator-(const Laurent& o) const { return *this + o.scaled(Rat(-1)); }

    Laurent operator*(const Laurent& o) const {
        Laurent r(lo_, hi_);
        for (const auto& [a, va] : c_)
            for (const auto& [b, vb] : o.c_) {
                if (a + b < lo_ || a + b > hi_) continue;
                r.add_to(a + b, va * vb);
            }
        return r;
    }

    Laurent scaled(const Rat& q) const {
        Laurent r(lo_, hi_);
        for (const auto& [e, v] : c_) r.add_to(e, v.scaled(q));
        return r;
    }

    Laurent h_mul(int k) const {
        Laurent r(lo_, hi_);
        for (const auto& [e, v] : c_) r.add_to(e, v.h_mul(k));
        return r;
    }

    Laurent shift_substitute(const Rat& gamma, int hmax) const {
        Laurent r(lo_, hi_);
        if (dyang::is_zero(gamma)) return *this;
        for (const auto& [e, v] : c_) {
            Rat gpow(1);
            for (int j = 0; j <= hmax; ++j) {
                if (j > 0) gpow *= gamma;
                if (e >= 0 && j > e) break;
                C term = v.h_mul(j).scaled(binom_gen(e, j) * gpow);
                r.add_to(e - j, term);
                if (v.h_mul(j + 1).is_zero()) break;
            }
        }
        return r;
    }

    Laurent window(int lo, int hi) const {
        Laurent r(lo, hi);
        for (const auto& [e, v] : c_) r.add_to(e, v);
        return r;
    }

    bool operator==(const Laurent& o) const {
        return lo_ == o.lo_ && hi_ == o.hi_ && c_ == o.c_;
    }

private:
    int lo_, hi_;
    std::map<int, C> c_;
};

// Rectangular bivariate window in (u, v).
struct BiWindow {
    int ulo, uhi, vlo, vhi;
    bool contains(int a, int b) const { return a >= ulo && a <= uhi && b >= vlo && b <= vhi; }
};

template <class C>
class BiSeries {
public:
    explicit BiSeries(BiWindow w) : w_(w) {}

    const BiWindow& win() const { return w_; }
    const std::map<std::pair<int, int>, C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add_to(int a, int b, const C& v) {
        if (v.is_zero() || !w_.contains(a, b)) return;
        auto key = std::make_pair(a, b);
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(key, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    const C* find(int a, int b) const {
        auto it = c_.find({a, b});
        return it == c_.end() ? nullptr : &it->second;
    }

    BiSeries operator+(const BiSeries& o) const {
        BiSeries r(*this);
        for (const auto& [k, v] : o.c_) r.add_to(k.first, k.second, v);
        return r;
    }

    BiSeries operator-(const BiSeries& o) const { return *this + o.scaled(Rat(-1)); }

    BiSeries operator*(const BiSeries& o) const {
        BiSeries r(w_);
        for (const auto& [ka, va] : c_)
            for (const auto& [kb, vb] : o.c_) {
                int a = ka.first + kb.first, b = ka.second + kb.second;
                if (!w_.contains(a, b)) continue;
                r.add_to(a, b, va * vb);
            }
        return r;
    }

    BiSeries scaled(const Rat& q) const {
        BiSeries r(w_);
        for (const auto& [k, v] : c_) r.add_to(k.first, k.second, v.scaled(q));
        return r;
    }

    BiSeries h_mul(int k) const {
        BiSeries r(w_);
        for (const auto& [key, v] : c_) r.add_to(key.first, key.second, v.h_mul(k));
        return r;
    }

    // Inverse of a series with invertible (0,0) coefficient and all other
    // support at strictly positive h-weight (the only case that arises:
    // normalization factors f(u-v+gamma*h) = 1 + O(h)).
    BiSeries inverted(int hmax) const {
        auto it = c_.find({0, 0});
        if (it == c_.end()) throw std::domain_error("bivariate series has no constant term");
        C b0 = it->second.inverted();
        BiSeries z(w_);  // z = 1 - b0 * this, supported away from (0,0)
        for (const auto& [k, v] : c_) {
            if (k.first == 0 && k.second == 0) continue;
            z.add_to(k.first, k.second, (b0 * v).scaled(Rat(-1)));
        }
        BiSeries acc(w_);
        acc.add_to(0, 0, b0);
        BiSeries pw(w_);
        pw.add_to(0, 0, b0);
        for (int j = 1; j <= hmax; ++j) {
            pw = z * pw;
            if (pw.is_zero()) break;
            acc = acc + pw;
        }
        return acc;
    }

    bool operator==(const BiSeries& o) const {
        return w_.ulo == o.w_.ulo && w_.uhi == o.w_.uhi && w_.vlo == o.w_.vlo &&
               w_.vhi == o.w_.vhi && c_ == o.c_;
    }

private:
    BiWindow w_;
    std::map<std::pair<int, int>, C> c_;
};

enum class Region { UBig, VBig };  // |u| >> |v|  /  |v| >> |u|

// Expansion of (u - v + gamma*h)^(-m) in the given region, restricted to the
// window, modulo h^{trunc+1}.
BiSeries<HPoly> kernel_pow(int m, const Rat& gamma, Region reg, BiWindow w, int trunc);

// Formal delta:  sum_k u^{-k-1} v^k restricted to the window.
BiSeries<HPoly> delta_series(BiWindow w, int trunc);

// delta(x - y) with x = u + alpha*h, y = v + beta*h, re-expanded in (u, v).
BiSeries<HPoly> delta_series_shifted(const Rat& alpha, const Rat& beta, BiWindow w, int trunc);

}  // namespace dyang
