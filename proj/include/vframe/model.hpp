#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vframe {

/// Thrown when two operands live on different windows or on different
/// sides (time vs dual) of the transform.
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a digit shift would move a nonzero digit out of the
/// window.  The caller must enlarge the window and retry.
class truncation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by operations that require a nonzero generator.
class degenerate_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class Side { time, dual };

/// Description of the finite window model.
///
/// The time window carries digit positions j = -m+1..n, the dual window
/// positions j = 1-n..m.  Functions on the window stand for functions on
/// the full group that vanish outside {lambda < p^m} and are constant on
/// U_n-cosets; all quantities of interest restrict to that subspace
/// without discretization error.
struct ModelConfig {
    int p = 2;           // digit base, any integer >= 2
    int m = 1;           // integer-side digit slots
    int n = 1;           // fractional-side digit slots
    double tol_zero = 1e-10;  // relative zero threshold for support masks

    ModelConfig() = default;
    ModelConfig(int p_, int m_, int n_, double tol = 1e-10)
        : p(p_), m(m_), n(n_), tol_zero(tol)
    {
        if (p < 2) throw std::invalid_argument("ModelConfig: p must be >= 2");
        if (m < 1) throw std::invalid_argument("ModelConfig: m must be >= 1");
        if (n < 1) throw std::invalid_argument("ModelConfig: n must be >= 1");
        if (tol_zero < 0.0)
            throw std::invalid_argument("ModelConfig: tol_zero must be >= 0");
        // p^(m+n) must fit the index range
        std::int64_t total = 1;
        for (int i = 0; i < m + n; ++i) {
            total *= p;
            if (total > (std::int64_t{1} << 31))
                throw std::invalid_argument(
                    "ModelConfig: p^(m+n) exceeds the supported index range");
        }
    }

    int digit_count() const { return m + n; }

    /// p^k for 0 <= k <= m+n.
    std::int64_t pow_p(int k) const {
        std::int64_t r = 1;
        for (int i = 0; i < k; ++i) r *= p;
        return r;
    }

    std::int64_t point_count() const { return pow_p(m + n); }
    std::int64_t h_count() const { return pow_p(m); }       // |H-window|
    std::int64_t hperp_count() const { return pow_p(n); }   // |H^perp-window|
    std::int64_t u_count() const { return pow_p(n); }       // |U-window|
    std::int64_t ustar_count() const { return pow_p(m); }   // |U*-window|

    /// Haar weight of one window point: mu(U)=1 and mu*(U*)=1.
    double time_weight() const { return 1.0 / static_cast<double>(pow_p(n)); }
    double dual_weight() const { return 1.0 / static_cast<double>(pow_p(m)); }

    /// Same window geometry; tol_zero is a numeric knob, not geometry.
    bool same_window(const ModelConfig& o) const {
        return p == o.p && m == o.m && n == o.n;
    }

    int min_position(Side s) const { return s == Side::time ? -m + 1 : 1 - n; }
    int max_position(Side s) const { return s == Side::time ? n : m; }
};

/// Exact value of the digit-expansion map lambda (or lambda* on the dual
/// side).  Always reduced; den = 1 exactly on H / H^perp.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t nu, std::int64_t de) : num(nu), den(de) {
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    bool is_integer() const { return den == 1; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

/// One element of the finite window of G (time side) or G* (dual side).
///
/// digits[s] is the digit at position j = min_position + s, so slot 0
/// holds the most significant digit of the linear index.
struct DigitVector {
    ModelConfig cfg;
    Side side = Side::time;
    std::vector<int> digits;  // each in [0, p)

    DigitVector() : digits(static_cast<std::size_t>(cfg.digit_count()), 0) {}
    DigitVector(const ModelConfig& c, Side s)
        : cfg(c), side(s),
          digits(static_cast<std::size_t>(c.digit_count()), 0) {}

    int min_position() const { return cfg.min_position(side); }
    int max_position() const { return cfg.max_position(side); }

    bool position_in_window(int j) const {
        return j >= min_position() && j <= max_position();
    }

    /// Digit at position j; zero outside the window (the represented
    /// group element has no other nonzero digits).
    int digit(int j) const {
        if (!position_in_window(j)) return 0;
        return digits[static_cast<std::size_t>(j - min_position())];
    }

    void set_digit(int j, int v) {
        if (!position_in_window(j))
            throw std::out_of_range("DigitVector: position outside window");
        if (v < 0 || v >= cfg.p)
            throw std::out_of_range("DigitVector: digit outside [0,p)");
        digits[static_cast<std::size_t>(j - min_position())] = v;
    }

    bool is_zero() const {
        for (int d : digits)
            if (d != 0) return false;
        return true;
    }

    // Membership predicates for the four distinguished subsets.
    bool in_H() const {
        if (side != Side::time) return false;
        for (int j = 1; j <= max_position(); ++j)
            if (digit(j) != 0) return false;
        return true;
    }
    bool in_U() const {
        if (side != Side::time) return false;
        for (int j = min_position(); j <= 0; ++j)
            if (digit(j) != 0) return false;
        return true;
    }
    bool in_Hperp() const {
        if (side != Side::dual) return false;
        for (int j = 1; j <= max_position(); ++j)
            if (digit(j) != 0) return false;
        return true;
    }
    bool in_Ustar() const {
        if (side != Side::dual) return false;
        for (int j = min_position(); j <= 0; ++j)
            if (digit(j) != 0) return false;
        return true;
    }

    friend bool operator==(const DigitVector& a, const DigitVector& b) {
        return a.side == b.side && a.cfg.same_window(b.cfg) &&
               a.digits == b.digits;
    }
};

namespace detail {
inline void require_compatible(const DigitVector& x, const DigitVector& y,
                               const char* op) {
    if (!x.cfg.same_window(y.cfg))
        throw dimension_error(std::string(op) + ": window mismatch");
    if (x.side != y.side)
        throw dimension_error(std::string(op) + ": side mismatch");
}
}  // namespace detail

/// z = x (+) y, digit-wise addition mod p.  Carry-free by construction.
inline DigitVector add(const DigitVector& x, const DigitVector& y) {
    detail::require_compatible(x, y, "add");
    DigitVector z(x.cfg, x.side);
    for (std::size_t s = 0; s < z.digits.size(); ++s)
        z.digits[s] = (x.digits[s] + y.digits[s]) % x.cfg.p;
    return z;
}

inline DigitVector negate(const DigitVector& x) {
    DigitVector z(x.cfg, x.side);
    for (std::size_t s = 0; s < z.digits.size(); ++s)
        z.digits[s] = (x.cfg.p - x.digits[s]) % x.cfg.p;
    return z;
}

/// z = x (-) y, the inverse of add.
inline DigitVector sub(const DigitVector& x, const DigitVector& y) {
    detail::require_compatible(x, y, "sub");
    DigitVector z(x.cfg, x.side);
    for (std::size_t s = 0; s < z.digits.size(); ++s)
        z.digits[s] = (x.digits[s] - y.digits[s] + x.cfg.p) % x.cfg.p;
    return z;
}

/// Linear index of a window point, most significant digit first.
/// Time side: i = sum_j x_j p^(n-j); dual side: i = sum_j w_j p^(m-j).
inline std::int64_t index_of(const DigitVector& x) {
    std::int64_t i = 0;
    for (int d : x.digits) i = i * x.cfg.p + d;
    return i;
}

inline DigitVector from_index(std::int64_t i, Side side,
                              const ModelConfig& cfg) {
    if (i < 0 || i >= cfg.point_count())
        throw std::out_of_range("from_index: index outside window");
    DigitVector x(cfg, side);
    for (int s = cfg.digit_count() - 1; s >= 0; --s) {
        x.digits[static_cast<std::size_t>(s)] = static_cast<int>(i % cfg.p);
        i /= cfg.p;
    }
    return x;
}

/// lambda(x) = sum_j x_j p^(-j), exact.  Equals index_of(x) / p^n.
inline Rational lambda_map(const DigitVector& x) {
    if (x.side != Side::time)
        throw dimension_error("lambda_map: expects a time-side vector");
    return Rational(index_of(x), x.cfg.pow_p(x.cfg.n));
}

/// lambda*(w) = sum_j w_j p^(-j), exact.  Equals index_of(w) / p^m.
inline Rational lambda_star_map(const DigitVector& w) {
    if (w.side != Side::dual)
        throw dimension_error("lambda_star_map: expects a dual-side vector");
    return Rational(index_of(w), w.cfg.pow_p(w.cfg.m));
}

/// The unique h in the H-window with lambda(h) = alpha: base-p digits of
/// alpha placed at positions j <= 0.
inline DigitVector h_of_alpha(std::int64_t alpha, const ModelConfig& cfg) {
    if (alpha < 0 || alpha >= cfg.h_count())
        throw std::out_of_range("h_of_alpha: alpha >= p^m overflows the window");
    DigitVector h(cfg, Side::time);
    for (int k = 0; k < cfg.m; ++k) {
        h.set_digit(-k, static_cast<int>(alpha % cfg.p));
        alpha /= cfg.p;
    }
    return h;
}

/// The unique w in the H^perp-window with lambda*(w) = alpha.
inline DigitVector omega_of_alpha(std::int64_t alpha, const ModelConfig& cfg) {
    if (alpha < 0 || alpha >= cfg.hperp_count())
        throw std::out_of_range(
            "omega_of_alpha: alpha >= p^n overflows the window");
    DigitVector w(cfg, Side::dual);
    for (int k = 0; k < cfg.n; ++k) {
        w.set_digit(-k, static_cast<int>(alpha % cfg.p));
        alpha /= cfg.p;
    }
    return w;
}

/// H-window elements in lambda-ascending order (lambda = 0..p^m-1).
inline std::vector<DigitVector> enumerate_H(const ModelConfig& cfg) {
    std::vector<DigitVector> out;
    out.reserve(static_cast<std::size_t>(cfg.h_count()));
    for (std::int64_t a = 0; a < cfg.h_count(); ++a)
        out.push_back(h_of_alpha(a, cfg));
    return out;
}

/// H^perp-window elements in lambda*-ascending order.
inline std::vector<DigitVector> enumerate_Hperp(const ModelConfig& cfg) {
    std::vector<DigitVector> out;
    out.reserve(static_cast<std::size_t>(cfg.hperp_count()));
    for (std::int64_t a = 0; a < cfg.hperp_count(); ++a)
        out.push_back(omega_of_alpha(a, cfg));
    return out;
}

/// U*-window samples in lambda*-ascending order; these are exactly the
/// dual indices 0..p^m-1.
inline std::vector<DigitVector> enumerate_Ustar(const ModelConfig& cfg) {
    std::vector<DigitVector> out;
    out.reserve(static_cast<std::size_t>(cfg.ustar_count()));
    for (std::int64_t i = 0; i < cfg.ustar_count(); ++i)
        out.push_back(from_index(i, Side::dual, cfg));
    return out;
}

/// U-window samples in lambda-ascending order (time indices 0..p^n-1).
inline std::vector<DigitVector> enumerate_U(const ModelConfig& cfg) {
    std::vector<DigitVector> out;
    out.reserve(static_cast<std::size_t>(cfg.u_count()));
    for (std::int64_t i = 0; i < cfg.u_count(); ++i)
        out.push_back(from_index(i, Side::time, cfg));
    return out;
}

/// Digit-shift automorphism: A^l on the time side, B^l on the dual side.
/// (A x)_j = x_{j+1}, so the digit at position k moves to position k-l.
/// A nonzero digit leaving the window raises truncation_error.
inline DigitVector shift_automorphism(const DigitVector& x, int l) {
    DigitVector z(x.cfg, x.side);
    const int lo = x.min_position(), hi = x.max_position();
    for (int k = lo; k <= hi; ++k) {
        const int target = k - l;
        if (target < lo || target > hi) {
            if (x.digit(k) != 0)
                throw truncation_error(
                    "shift_automorphism: nonzero digit at position " +
                    std::to_string(k) + " shifted out of the window");
        } else {
            z.set_digit(target, x.digit(k));
        }
    }
    return z;
}

}  // namespace vframe
