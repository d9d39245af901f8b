#ifndef JFRIEZE_RECURRENCE_HPP
#define JFRIEZE_RECURRENCE_HPP

// The linear recurrence C x = 0 attached to a frieze.
//
// Solutions of interest are superperiodic: x_{a+n} = (-1)^s x_a.  A
// SolutionWindow keeps, for each column b in [1,n], the entries a in
// [b, b+n-1] together with s; everything else follows from
// Sol_{a+n,b+n} = Sol_{a,b} and the sign rule.

#include "jfrieze/construct.hpp"
#include "jfrieze/frieze.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace jfrieze {

inline long floor_div(long a, long n) { return a >= 0 ? a / n : -((-a + n - 1) / n); }

struct SolutionWindow {
    long period = 0;
    long sign_exponent = 0;
    std::vector<std::vector<Rational>> columns;  // columns[b-1][a-b]

    Rational at(long a, long b) const {
        long n = period;
        long r = residue(b, n);
        long a0 = a - (b - r);
        long m = floor_div(a0 - r, n);
        return columns[r - 1][a0 - m * n - r] * sign_power(sign_exponent * m);
    }

    friend bool operator==(const SolutionWindow&, const SolutionWindow&) = default;
};

// q_{(k,n)}(v)_a = (-1)^{(k-1)(a - abar)/n} v_abar.
inline Rational superperiodic_extension(const std::vector<Rational>& v, long k, long a) {
    long n = static_cast<long>(v.size());
    long r = residue(a, n);
    return v[r - 1] * sign_power((k - 1) * ((a - r) / n));
}

// A finite stretch of a sequence x, starting at index `first`.
struct Sequence {
    long first = 0;
    std::vector<Rational> values;

    long last() const { return first + static_cast<long>(values.size()) - 1; }
    bool covers(long lo, long hi) const { return lo >= first && hi <= last(); }
    Rational at(long i) const {
        if (i < first || i > last()) throw std::out_of_range("sequence index " + std::to_string(i) + " outside window");
        return values[i - first];
    }
};

// (C x)_a = sum over b in [a-n, a] of C_{a,b} x_b.
inline Rational residual(const PeriodicFrieze& C, const Sequence& x, long a) {
    long n = C.period();
    if (!x.covers(a - n, a))
        throw std::out_of_range("residual at " + std::to_string(a) + ": sequence must cover [" +
                                std::to_string(a - n) + ", " + std::to_string(a) + "]");
    Rational s = 0;
    for (long b = a - n; b <= a; ++b) {
        Rational c = C.entry(a, b);
        if (c != 0) s += c * x.at(b);
    }
    return s;
}

// Column b of a window, written out on [lo, hi].
inline Sequence window_column(const SolutionWindow& w, long b, long lo, long hi) {
    Sequence s{lo, {}};
    for (long a = lo; a <= hi; ++a) s.values.push_back(w.at(a, b));
    return s;
}

// Sol_{a,b} = (-1)^{a+b} C+_{a,b} for b <= a < b+n, zero columns at loops;
// sign exponent n - h - 1.  The candidate is built for any prefrieze; only
// for friezes is it the solution matrix.
inline SolutionWindow candidate_solution_matrix(const PeriodicFrieze& C) {
    const auto& pi = C.shape();
    long n = C.period();
    PeriodicFrieze D = dual_frieze(C);
    SolutionWindow w{n, n - pi.balls() - 1, std::vector<std::vector<Rational>>(n)};
    for (long b = 1; b <= n; ++b)
        for (long a = b; a < b + n; ++a)
            w.columns[b - 1].push_back(pi.is_loop(b) ? Rational(0) : D.entry(a, b) * sign_power(a + b));
    return w;
}

inline SolutionWindow solution_matrix(const PeriodicFrieze& C) {
    if (!is_frieze(C)) throw std::domain_error("solution matrix: input is not a frieze");
    return candidate_solution_matrix(C);
}

// Tiling(X)_{a,b} = sum_i (-1)^{a+b+i(n-h-1)} X_{a+in,b}, for X periodic with
// h balls.  Its columns are superperiodic with sign (-1)^{h-1}, which is the
// exponent stored.
inline SolutionWindow tiling(const PeriodicFrieze& X, long h, long n) {
    if (X.period() != n) throw std::invalid_argument("tiling: period mismatch");
    SolutionWindow w{n, h - 1, std::vector<std::vector<Rational>>(n)};
    for (long b = 1; b <= n; ++b)
        for (long a = b; a < b + n; ++a) {
            Rational s = 0;
            for (long i = -1; i <= 2; ++i) {
                Rational x = X.entry(a + i * n, b);
                if (x != 0) s += x * sign_power(a + b + i * (n - h - 1));
            }
            w.columns[b - 1].push_back(s);
        }
    return w;
}

// Every candidate column solves C x = 0 on two periods of rows and the columns
// span a space of dimension balls(pi).  Equivalent to is_frieze for a
// prefrieze.
inline bool verify_superperiodic_kernel(const PeriodicFrieze& C) {
    if (!is_prefrieze(C)) return false;
    const auto& pi = C.shape();
    long n = C.period();
    SolutionWindow w = candidate_solution_matrix(C);
    std::vector<long> cols;
    for (long b = 1; b <= n; ++b) {
        if (pi.is_loop(b)) continue;
        cols.push_back(b);
        Sequence x = window_column(w, b, 1 - n, 2 * n);
        for (long a = 1; a <= 2 * n; ++a)
            if (residual(C, x, a) != 0) return false;
    }
    Matrix M(n, cols.size());
    for (long a = 1; a <= n; ++a)
        for (std::size_t j = 0; j < cols.size(); ++j) M(a - 1, j) = w.at(a, cols[j]);
    return static_cast<long>(rank(M)) == pi.balls();
}

// The n x h block of a window on rows [a, a+n-1] and the columns of L_a.
inline Matrix schedule_block(const SolutionWindow& w, const JugglingFunction& pi, long a) {
    long n = pi.period();
    auto L = landing_schedule(pi, a);
    Matrix M(n, L.size());
    for (long i = 0; i < n; ++i)
        for (std::size_t j = 0; j < L.size(); ++j) M(i, j) = w.at(a + i, L[j]);
    return M;
}

// A v = 0 iff F(A) q_{(k,n)}(v) = 0, checked on a kernel basis, on unit
// vectors and on sums of neighbouring unit vectors; plus the dimension count.
inline bool kernel_correspondence(const Matrix& A, const JugglingFunction& pi) {
    require_pi_unimodular(A, pi, "kernel correspondence");
    long n = pi.period();
    long k = pi.balls();
    PeriodicFrieze F = build_frieze_det(A, pi);
    Matrix K = kernel_basis(A);
    if (static_cast<long>(K.rows()) != n - k || dual(pi).balls() != n - k) return false;
    if (static_cast<long>(rank(superperiodic_system(F, k))) != k) return false;

    auto solves = [&](const std::vector<Rational>& v) {
        Sequence x{1 - n, {}};
        for (long a = 1 - n; a <= 2 * n; ++a) x.values.push_back(superperiodic_extension(v, k, a));
        for (long a = 1; a <= 2 * n; ++a)
            if (residual(F, x, a) != 0) return false;
        return true;
    };
    auto in_kernel = [&](const std::vector<Rational>& v) {
        for (const auto& y : A.apply(v))
            if (y != 0) return false;
        return true;
    };
    for (std::size_t i = 0; i < K.rows(); ++i)
        if (!solves(K.row(i))) return false;
    for (long j = 0; j < n; ++j) {
        std::vector<Rational> e(n), f(n);
        e[j] = 1;
        f[j] = 1;
        f[(j + 1) % n] += 1;
        if (solves(e) != in_kernel(e) || solves(f) != in_kernel(f)) return false;
    }
    return true;
}

}  // namespace jfrieze

#endif
