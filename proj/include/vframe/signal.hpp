#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "vframe/model.hpp"

namespace vframe {

using cplx = std::complex<double>;

namespace detail {

/// Shared storage for functions sampled on one side of the window.
/// weight() is the Haar mass of a single sample point.
template <Side S>
struct SampledFunction {
    ModelConfig cfg;
    std::vector<cplx> values;  // indexed by index_of, length p^(m+n)

    SampledFunction()
        : values(static_cast<std::size_t>(cfg.point_count()), cplx{0.0, 0.0}) {}
    explicit SampledFunction(const ModelConfig& c)
        : cfg(c),
          values(static_cast<std::size_t>(c.point_count()), cplx{0.0, 0.0}) {}
    SampledFunction(const ModelConfig& c, std::vector<cplx> v)
        : cfg(c), values(std::move(v))
    {
        if (values.size() != static_cast<std::size_t>(cfg.point_count()))
            throw dimension_error("sampled function: value count != p^(m+n)");
    }

    static constexpr Side side() { return S; }
    double weight() const {
        return S == Side::time ? cfg.time_weight() : cfg.dual_weight();
    }

    cplx& operator[](std::int64_t i) { return values[static_cast<std::size_t>(i)]; }
    const cplx& operator[](std::int64_t i) const {
        return values[static_cast<std::size_t>(i)];
    }
    std::int64_t size() const { return cfg.point_count(); }

    /// Value at a window point given as digits.
    cplx at(const DigitVector& x) const {
        if (x.side != S || !x.cfg.same_window(cfg))
            throw dimension_error("sampled function: point on wrong window");
        return values[static_cast<std::size_t>(index_of(x))];
    }

    bool is_zero() const {
        for (const cplx& v : values)
            if (v != cplx{0.0, 0.0}) return false;
        return true;
    }

    double max_abs() const {
        double mx = 0.0;
        for (const cplx& v : values) mx = std::max(mx, std::abs(v));
        return mx;
    }
};

}  // namespace detail

/// f in L^2(G) restricted to the window; per-point measure p^(-n).
struct Signal : detail::SampledFunction<Side::time> {
    using detail::SampledFunction<Side::time>::SampledFunction;
};

/// f-hat in L^2(G*) restricted to the dual window; per-point measure p^(-m).
struct SpectralSignal : detail::SampledFunction<Side::dual> {
    using detail::SampledFunction<Side::dual>::SampledFunction;
};

namespace detail {
inline void require_same_window(const ModelConfig& a, const ModelConfig& b,
                                const char* op) {
    if (!a.same_window(b))
        throw dimension_error(std::string(op) + ": window mismatch");
}
}  // namespace detail

/// <f,g> = weight * sum f conj(g); conjugate-linear in the second slot.
template <typename F>
cplx inner_product(const F& f, const F& g) {
    detail::require_same_window(f.cfg, g.cfg, "inner_product");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < f.values.size(); ++i)
        acc += f.values[i] * std::conj(g.values[i]);
    return acc * f.weight();
}

template <typename F>
double norm_squared(const F& f) {
    double acc = 0.0;
    for (const cplx& v : f.values) acc += std::norm(v);
    return acc * f.weight();
}

template <typename F>
double norm(const F& f) {
    return std::sqrt(norm_squared(f));
}

template <typename F>
F scaled(const F& f, cplx c) {
    F g = f;
    for (cplx& v : g.values) v *= c;
    return g;
}

template <typename F>
F added(const F& f, const F& g) {
    detail::require_same_window(f.cfg, g.cfg, "added");
    F h = f;
    for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] += g.values[i];
    return h;
}

template <typename F>
F subtracted(const F& f, const F& g) {
    detail::require_same_window(f.cfg, g.cfg, "subtracted");
    F h = f;
    for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] -= g.values[i];
    return h;
}

template <typename F>
double distance(const F& f, const F& g) {
    return norm(subtracted(f, g));
}

/// (T_h f)(x) = f(x (-) h) for h in the H-window.
inline Signal translate(const Signal& f, const DigitVector& h) {
    if (!h.cfg.same_window(f.cfg) || h.side != Side::time)
        throw dimension_error("translate: h on wrong window or side");
    if (!h.in_H())
        throw dimension_error("translate: h must lie in the H-window");
    Signal g(f.cfg);
    for (std::int64_t i = 0; i < f.size(); ++i) {
        const DigitVector x = from_index(i, Side::time, f.cfg);
        g[i] = f[index_of(sub(x, h))];
    }
    return g;
}

inline Signal translate(const Signal& f, std::int64_t alpha) {
    return translate(f, h_of_alpha(alpha, f.cfg));
}

/// Indicator of U, the unit neighbourhood of zero (an ONB generator).
inline Signal indicator_U(const ModelConfig& cfg) {
    Signal f(cfg);
    for (std::int64_t i = 0; i < cfg.u_count(); ++i) f[i] = cplx{1.0, 0.0};
    return f;
}

/// Unit mass at the window origin.
inline Signal point_mass(const ModelConfig& cfg) {
    Signal f(cfg);
    f[0] = cplx{1.0, 0.0};
    return f;
}

}  // namespace vframe
