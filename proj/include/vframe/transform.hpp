#pragma once

#include <cmath>
#include <numbers>

#include "vframe/signal.hpp"

namespace vframe {

namespace detail {

/// The p-th roots of unity, root[k] = exp(2*pi*i*k/p).  Quarter-turn
/// values are pinned exactly and the upper half mirrors the lower so
/// that conj-symmetry holds bit for bit.
inline std::vector<cplx> unit_roots(int p) {
    std::vector<cplx> r(static_cast<std::size_t>(p));
    r[0] = cplx{1.0, 0.0};
    for (int k = 1; 2 * k <= p; ++k) {
        cplx v;
        if (2 * k == p) v = cplx{-1.0, 0.0};
        else if (4 * k == p) v = cplx{0.0, 1.0};
        else {
            const double t = 2.0 * std::numbers::pi * k / p;
            v = cplx{std::cos(t), std::sin(t)};
        }
        r[static_cast<std::size_t>(k)] = v;
        r[static_cast<std::size_t>(p - k)] = std::conj(v);
    }
    return r;
}

/// Digit pairing of the character: time slot s meets dual slot K-1-s.
inline int character_exponent(const DigitVector& x, const DigitVector& w) {
    const int K = x.cfg.digit_count();
    int e = 0;
    for (int s = 0; s < K; ++s)
        e = (e + x.digits[static_cast<std::size_t>(s)] *
                     w.digits[static_cast<std::size_t>(K - 1 - s)]) %
            x.cfg.p;
    return e;
}

/// Unnormalized multidimensional DFT over (Z_p)^K in place:
/// out[y] = sum_x in[x] * root[sign * sum_s x_s y_s], digits slot-aligned.
inline void dft_pow(std::vector<cplx>& a, int p, int K, int sign) {
    const std::vector<cplx> roots = unit_roots(p);
    const std::int64_t N = static_cast<std::int64_t>(a.size());
    std::vector<cplx> tmp(static_cast<std::size_t>(p));
    std::int64_t stride = N / p;  // slot 0 (most significant) first
    for (int s = 0; s < K; ++s) {
        const std::int64_t block = stride * p;
        for (std::int64_t base = 0; base < N; base += block) {
            for (std::int64_t off = 0; off < stride; ++off) {
                for (int e = 0; e < p; ++e) {
                    cplx acc{0.0, 0.0};
                    for (int d = 0; d < p; ++d) {
                        const int k = ((sign * d * e) % p + p) % p;
                        acc += a[static_cast<std::size_t>(base + d * stride +
                                                          off)] *
                               roots[static_cast<std::size_t>(k)];
                    }
                    tmp[static_cast<std::size_t>(e)] = acc;
                }
                for (int e = 0; e < p; ++e)
                    a[static_cast<std::size_t>(base + e * stride + off)] =
                        tmp[static_cast<std::size_t>(e)];
            }
        }
        stride /= p;
    }
}

/// out[i] = in[digit-reversed i]; an involution.
inline std::vector<cplx> digit_reverse(const std::vector<cplx>& a, int p,
                                       int K) {
    std::vector<cplx> out(a.size());
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(a.size()); ++i) {
        std::int64_t r = 0, t = i;
        for (int s = 0; s < K; ++s) {
            r = r * p + t % p;
            t /= p;
        }
        out[static_cast<std::size_t>(r)] = a[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace detail

/// chi(x, w) = exp((2*pi*i/p) * sum_j x_j w_{1-j}); unit modulus.
inline cplx character(const DigitVector& x, const DigitVector& w) {
    if (x.side != Side::time || w.side != Side::dual)
        throw dimension_error("character: expects (time, dual) arguments");
    if (!x.cfg.same_window(w.cfg))
        throw dimension_error("character: window mismatch");
    const std::vector<cplx> roots = detail::unit_roots(x.cfg.p);
    return roots[static_cast<std::size_t>(detail::character_exponent(x, w))];
}

/// Generalized Walsh function W_alpha = chi(., omega_[alpha]), 0 <= alpha < p^n.
inline Signal walsh_function(std::int64_t alpha, const ModelConfig& cfg) {
    const DigitVector w = omega_of_alpha(alpha, cfg);  // range-checks alpha
    Signal f(cfg);
    for (std::int64_t i = 0; i < cfg.point_count(); ++i)
        f[i] = character(from_index(i, Side::time, cfg), w);
    return f;
}

/// f-hat(w) = p^(-n) sum_x f(x) conj(chi(x,w)), via m+n tensor stages of
/// the p-point DFT plus a digit reversal.  O(N log_p N * p).
inline SpectralSignal forward(const Signal& f) {
    std::vector<cplx> a = f.values;
    detail::dft_pow(a, f.cfg.p, f.cfg.digit_count(), -1);
    a = detail::digit_reverse(a, f.cfg.p, f.cfg.digit_count());
    const double scale = f.cfg.time_weight();
    for (cplx& v : a) v *= scale;
    return SpectralSignal(f.cfg, std::move(a));
}

/// f(x) = p^(-m) sum_w F(w) chi(x,w); exact inverse of forward.
inline Signal inverse(const SpectralSignal& F) {
    std::vector<cplx> a =
        detail::digit_reverse(F.values, F.cfg.p, F.cfg.digit_count());
    detail::dft_pow(a, F.cfg.p, F.cfg.digit_count(), +1);
    const double scale = F.cfg.dual_weight();
    for (cplx& v : a) v *= scale;
    return Signal(F.cfg, std::move(a));
}

/// Naive double-loop summation; the in-repo oracle for forward().
inline SpectralSignal forward_naive(const Signal& f) {
    SpectralSignal F(f.cfg);
    const double scale = f.cfg.time_weight();
    for (std::int64_t iw = 0; iw < f.size(); ++iw) {
        const DigitVector w = from_index(iw, Side::dual, f.cfg);
        cplx acc{0.0, 0.0};
        for (std::int64_t ix = 0; ix < f.size(); ++ix) {
            const DigitVector x = from_index(ix, Side::time, f.cfg);
            acc += f[ix] * std::conj(character(x, w));
        }
        F[iw] = acc * scale;
    }
    return F;
}

/// Naive summation oracle for inverse().
inline Signal inverse_naive(const SpectralSignal& F) {
    Signal f(F.cfg);
    const double scale = F.cfg.dual_weight();
    for (std::int64_t ix = 0; ix < F.size(); ++ix) {
        const DigitVector x = from_index(ix, Side::time, F.cfg);
        cplx acc{0.0, 0.0};
        for (std::int64_t iw = 0; iw < F.size(); ++iw) {
            const DigitVector w = from_index(iw, Side::dual, F.cfg);
            acc += F[iw] * character(x, w);
        }
        f[ix] = acc * scale;
    }
    return f;
}

}  // namespace vframe
