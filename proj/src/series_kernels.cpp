#include "dyang/series.hpp"

namespace dyang {

// (u - v + gamma*h)^(-m) in region |u| >> |v|:
//   u^{-m} (1 - z)^{-m} with z = (v - gamma*h)/u
//   = sum_{j>=0} C(m-1+j, j) u^{-m-j} (v - gamma*h)^j.
// In region |v| >> |u| the roles of u and -v swap:
//   (u - v + gamma*h)^{-m} = (-1)^m (v - u - gamma*h)^{-m}.
BiSeries<HPoly> kernel_pow(int m, const Rat& gamma, Region reg, BiWindow w, int trunc) {
    if (m < 1) throw std::invalid_argument("kernel exponent must be >= 1");
    BiSeries<HPoly> r(w);
    if (reg == Region::UBig) {
        // u-exponent is -m-j; keep j while -m-j >= ulo
        for (int j = 0; -m - j >= w.ulo; ++j) {
            Rat cj = binom_gen(m - 1 + j, j);
            // (v - gamma*h)^j = sum_a C(j,a) v^{j-a} (-gamma)^a h^a
            Rat gp(1);
            for (int a = 0; a <= j && a <= trunc; ++a) {
                if (a > 0) gp *= -gamma;
                int vexp = j - a;
                if (vexp > w.vhi || vexp < w.vlo) continue;
                Rat coef = cj * binom_gen(j, a) * gp;
                if (is_zero(coef)) continue;
                r.add_to(-m - j, vexp, HPoly::h_power(trunc, a, coef));
            }
        }
    } else {
        for (int j = 0; -m - j >= w.vlo; ++j) {
            Rat cj = binom_gen(m - 1 + j, j);
            Rat sign = (m % 2 == 0) ? Rat(1) : Rat(-1);
            // (u + gamma*h)^j = sum_a C(j,a) u^{j-a} gamma^a h^a
            Rat gp(1);
            for (int a = 0; a <= j && a <= trunc; ++a) {
                if (a > 0) gp *= gamma;
                int uexp = j - a;
                if (uexp > w.uhi || uexp < w.ulo) continue;
                Rat coef = sign * cj * binom_gen(j, a) * gp;
                if (is_zero(coef)) continue;
                r.add_to(uexp, -m - j, HPoly::h_power(trunc, a, coef));
            }
        }
    }
    return r;
}

BiSeries<HPoly> delta_series(BiWindow w, int trunc) {
    BiSeries<HPoly> r(w);
    for (int k = w.vlo; k <= w.vhi; ++k) {
        if (-k - 1 < w.ulo || -k - 1 > w.uhi) continue;
        r.add_to(-k - 1, k, HPoly::constant(trunc, Rat(1)));
    }
    return r;
}

BiSeries<HPoly> delta_series_shifted(const Rat& alpha, const Rat& beta, BiWindow w, int trunc) {
    BiSeries<HPoly> r(w);
    // sum_k (u + alpha*h)^{-k-1} (v + beta*h)^k.
    // Contributions to window entry (a, b): a = -k-1-j (j >= 0 when -k-1 < 0;
    // finite binomial when -k-1 >= 0), b = k - i likewise.  We simply iterate
    // k over a range wide enough to reach the window through at most `trunc`
    // h-shifts on each variable.
    int kmin = std::min(w.vlo, -w.uhi - 1) - trunc;
    int kmax = std::max(w.vhi, -w.ulo - 1) + trunc;
    for (int k = kmin; k <= kmax; ++k) {
        // x^e with e = -k-1 in u, then e' = k in v
        for (int j = 0; j <= trunc; ++j) {
            int e = -k - 1;
            if (e >= 0 && j > e) break;
            int a = e - j;
            if (a < w.ulo || a > w.uhi) continue;
            Rat cu = binom_gen(e, j);
            if (is_zero(cu)) continue;
            Rat ap(1);
            for (int t = 0; t < j; ++t) ap *= alpha;
            cu *= ap;
            for (int i = 0; j + i <= trunc; ++i) {
                if (k >= 0 && i > k) break;
                int b = k - i;
                if (b < w.vlo || b > w.vhi) continue;
                Rat cv = binom_gen(k, i);
                if (is_zero(cv)) continue;
                Rat bp(1);
                for (int t = 0; t < i; ++t) bp *= beta;
                cv *= bp;
                r.add_to(a, b, HPoly::h_power(trunc, j + i, cu * cv));
            }
        }
    }
    return r;
}

}  // namespace dyang
