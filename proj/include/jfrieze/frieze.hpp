#ifndef JFRIEZE_FRIEZE_HPP
#define JFRIEZE_FRIEZE_HPP

// Periodic friezes as Z x Z lower unitriangular matrices.
//
// Entry C_{a,b} sits in row a and column b (a >= b).  A PeriodicFrieze stores
// one fundamental domain: for each column b in [1, n] the entries C_{a,b} with
// a in [b, b + n].  Everything outside that window is 0, and
// C_{a+n,b+n} = C_{a,b} holds by construction.

#include "jfrieze/juggling.hpp"
#include "jfrieze/matrix.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jfrieze {

class PeriodicFrieze {
public:
    PeriodicFrieze() = default;

    // columns[b-1][a-b] = C_{a,b} for b in [1,n], a in [b, b+n].
    PeriodicFrieze(JugglingFunction shape, std::vector<std::vector<Rational>> columns)
        : shape_(std::move(shape)), columns_(std::move(columns)) {
        long n = shape_.period();
        if (static_cast<long>(columns_.size()) != n)
            throw std::invalid_argument("frieze: expected " + std::to_string(n) + " columns, got " +
                                        std::to_string(columns_.size()));
        for (long b = 1; b <= n; ++b) {
            auto& col = columns_[b - 1];
            if (static_cast<long>(col.size()) > n + 1)
                throw std::invalid_argument("frieze: column " + std::to_string(b) + " is longer than n+1");
            col.resize(n + 1);
            if (col[0] != 1)
                throw std::invalid_argument("frieze: diagonal entry C_{" + std::to_string(b) + "," +
                                            std::to_string(b) + "} is " + to_string(col[0]) + ", not 1");
        }
    }

    // Fills the fundamental domain from f(a, b).
    template <class F>
    static PeriodicFrieze generate(const JugglingFunction& shape, F&& f) {
        long n = shape.period();
        std::vector<std::vector<Rational>> cols(n);
        for (long b = 1; b <= n; ++b) {
            cols[b - 1].reserve(n + 1);
            for (long a = b; a <= b + n; ++a) cols[b - 1].push_back(f(a, b));
        }
        return PeriodicFrieze(shape, std::move(cols));
    }

    const JugglingFunction& shape() const { return shape_; }
    long period() const { return shape_.period(); }
    const std::vector<std::vector<Rational>>& columns() const { return columns_; }

    Rational entry(long a, long b) const {
        long n = period();
        long r = residue(b, n);
        long a0 = a - (b - r);
        if (a0 < r || a0 > r + n) return 0;
        return columns_[r - 1][a0 - r];
    }

    // C_{rows, cols} with integer labels, in the order given.
    Matrix block(const std::vector<long>& rows, const std::vector<long>& cols) const {
        Matrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = entry(rows[i], cols[j]);
        return m;
    }

    friend bool operator==(const PeriodicFrieze& x, const PeriodicFrieze& y) {
        return x.shape_ == y.shape_ && x.columns_ == y.columns_;
    }

private:
    JugglingFunction shape_;
    std::vector<std::vector<Rational>> columns_;
};

// [lo, hi] as a vector (empty when hi < lo), minus the elements of `drop`.
inline std::vector<long> interval_minus(long lo, long hi, const std::vector<long>& drop = {}) {
    std::vector<long> v;
    for (long i = lo; i <= hi; ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) v.push_back(i);
    return v;
}

// The value a pi-prefrieze must have at (a, b), or nullopt-like `free` when the
// entry is unconstrained.
struct PrefriezeRule {
    enum Kind { fixed, free } kind;
    Rational value;
};

inline PrefriezeRule prefrieze_rule(const JugglingFunction& pi, long a, long b) {
    if (a == b) return {PrefriezeRule::fixed, 1};
    if (a == pi(b)) return {PrefriezeRule::fixed, sign_power(static_cast<long>(s_set(pi, b, pi(b)).size()))};
    if (a < b || a > pi(b) || pi.inverse(a) > b) return {PrefriezeRule::fixed, 0};
    return {PrefriezeRule::free, 0};
}

inline bool is_prefrieze(const PeriodicFrieze& C) {
    const auto& pi = C.shape();
    long n = C.period();
    for (long b = 1; b <= n; ++b)
        for (long a = b; a <= b + n; ++a) {
            auto rule = prefrieze_rule(pi, a, b);
            if (rule.kind == PrefriezeRule::fixed && C.entry(a, b) != rule.value) return false;
        }
    return true;
}

// det C_{[a,b] - I, [a,b] - pid(I)} with I = S_{pid}(a-1, b+1).
inline Rational frieze_minor(const PeriodicFrieze& C, long a, long b) {
    JugglingFunction pd = dual(C.shape());
    std::vector<long> I = s_set(pd, a - 1, b + 1);
    std::vector<long> pI;
    for (long i : I) pI.push_back(pd(i));
    return det(C.block(interval_minus(a, b, I), interval_minus(a, b, pI)));
}

// Whether the tameness condition is imposed at (a, b).
inline bool tameness_applies(const JugglingFunction& pi, long a, long b) {
    long n = pi.period();
    long pda = pi.inverse(a) + n;
    return (pda < b && b < a + n) || (b < a + n && a + n < pi(b));
}

// det C_{(a,b] - J, [a,b) - pid(J)} with J = S_{pid}(a, b).
inline Rational tameness_minor(const PeriodicFrieze& C, long a, long b) {
    JugglingFunction pd = dual(C.shape());
    std::vector<long> J = s_set(pd, a, b);
    std::vector<long> pJ;
    for (long j : J) pJ.push_back(pd(j));
    return det(C.block(interval_minus(a + 1, b, J), interval_minus(a, b - 1, pJ)));
}

struct DiamondFailure {
    long a;
    long b;
    Rational determinant;
    friend bool operator==(const DiamondFailure&, const DiamondFailure&) = default;
};

struct FriezeReport {
    bool prefrieze_ok = false;
    std::vector<DiamondFailure> frieze_failures;
    std::vector<DiamondFailure> tame_failures;
    std::size_t checked_pairs = 0;  // (a, b) pairs visited, n^2
    std::size_t tame_checked = 0;   // pairs where the tameness minor was needed

    bool is_frieze() const { return prefrieze_ok && frieze_failures.empty() && tame_failures.empty(); }
};

// Frieze determinants for all a in [1,n], a <= b < a+n; tameness determinants
// where tameness_applies.  With jobs > 1 the rows a are split across threads;
// failures are always reported sorted by (a, b).
inline FriezeReport check_frieze(const PeriodicFrieze& C, unsigned jobs = 1) {
    FriezeReport rep;
    rep.prefrieze_ok = is_prefrieze(C);
    long n = C.period();
    const auto& pi = C.shape();

    struct Partial {
        std::vector<DiamondFailure> fr, tm;
        std::size_t count = 0, tame = 0;
    };
    auto work = [&](long a_lo, long a_hi) {
        Partial p;
        for (long a = a_lo; a <= a_hi; ++a)
            for (long b = a; b < a + n; ++b) {
                ++p.count;
                Rational d = frieze_minor(C, a, b);
                if (d != 1) p.fr.push_back({a, b, d});
                if (tameness_applies(pi, a, b)) {
                    ++p.tame;
                    Rational t = tameness_minor(C, a, b);
                    if (t != 0) p.tm.push_back({a, b, t});
                }
            }
        return p;
    };

    std::vector<Partial> parts;
    if (jobs <= 1 || n < 2) {
        parts.push_back(work(1, n));
    } else {
        long chunks = std::min<long>(jobs, n);
        std::vector<std::future<Partial>> fut;
        for (long c = 0; c < chunks; ++c) {
            long lo = 1 + c * n / chunks, hi = (c + 1) * n / chunks;
            fut.push_back(std::async(std::launch::async, work, lo, hi));
        }
        for (auto& f : fut) parts.push_back(f.get());
    }
    for (auto& p : parts) {
        rep.checked_pairs += p.count;
        rep.tame_checked += p.tame;
        rep.frieze_failures.insert(rep.frieze_failures.end(), p.fr.begin(), p.fr.end());
        rep.tame_failures.insert(rep.tame_failures.end(), p.tm.begin(), p.tm.end());
    }
    return rep;
}

inline bool is_frieze(const PeriodicFrieze& C) { return check_frieze(C).is_frieze(); }

// Value at (b+n, b) of the dual when b is a loop of the shape pi: the
// pi-dagger boundary sign there, (-1)^{|S_{pid}(b,b+n)|} = (-1)^{balls(pi)}.
inline int dual_loop_slot(const JugglingFunction& pi) { return sign_power(pi.balls()); }

// n-truncated dual, shape pi-dagger:
//   C+_{a,b} = det C_{[b+1,a],[b,a-1]}   for b <= a < b+n,
//   C+_{b+n,b} = dual_loop_slot(pi)       when pi(b) = b.
inline PeriodicFrieze dual_frieze(const PeriodicFrieze& C) {
    const auto& pi = C.shape();
    long n = C.period();
    return PeriodicFrieze::generate(dual(pi), [&](long a, long b) -> Rational {
        if (a < b + n) return det(C.block(interval_minus(b + 1, a), interval_minus(b, a - 1)));
        return pi.is_loop(b) ? Rational(dual_loop_slot(pi)) : Rational(0);
    });
}

// C is a pi-frieze iff C is a pi-prefrieze and its dual is a pi-dagger-prefrieze.
inline bool is_frieze_by_duality(const PeriodicFrieze& C) {
    return is_prefrieze(C) && is_prefrieze(dual_frieze(C));
}

inline void require_sl_shape(const PeriodicFrieze& C, long k, long h) {
    if (h < 1) throw std::invalid_argument("SL(k) frieze: height must be at least 1");
    if (k < 1) throw std::invalid_argument("SL(k) frieze: k must be at least 1");
    if (!(C.shape() == JugglingFunction::uniform(h + k, h)))
        throw std::invalid_argument("SL(k) frieze: shape is not uniform with " + std::to_string(h) +
                                    " balls and period " + std::to_string(h + k));
}

inline bool is_sl_frieze(const PeriodicFrieze& C, long k, long h) {
    require_sl_shape(C, k, h);
    return is_frieze(C);
}

// The classical formulation: solid k x k minors are 1 for b <= a <= b+h and
// solid (k+1) x (k+1) minors vanish for b < a < b+h.
inline bool solid_minors_ok(const PeriodicFrieze& C, long k, long h) {
    require_sl_shape(C, k, h);
    if (!is_prefrieze(C)) return false;
    long n = C.period();
    for (long b = 1; b <= n; ++b) {
        for (long a = b; a <= b + h; ++a)
            if (det(C.block(interval_minus(a, a + k - 1), interval_minus(b, b + k - 1))) != 1) return false;
        for (long a = b + 1; a < b + h; ++a)
            if (det(C.block(interval_minus(a, a + k), interval_minus(b, b + k))) != 0) return false;
    }
    return true;
}

// (-1)^{|S_pi(b,a)|} C_{a,b} > 0 wherever the entry is not forced to vanish.
inline bool is_positive(const PeriodicFrieze& C) {
    const auto& pi = C.shape();
    long n = C.period();
    for (long b = 1; b <= n; ++b)
        for (long a = b; a <= pi(b); ++a) {
            if (pi.inverse(a) > b) continue;
            Rational v = C.entry(a, b) * sign_power(static_cast<long>(s_set(pi, b, a).size()));
            if (v <= 0) return false;
        }
    return true;
}

// C'_{a,b} = C_{a+s,b+s}; the shape becomes i -> pi(i+s) - s.
inline PeriodicFrieze shifted(const PeriodicFrieze& C, long s) {
    const auto& pi = C.shape();
    std::vector<long> v(pi.period());
    for (long i = 1; i <= pi.period(); ++i) v[i - 1] = pi(i + s) - s;
    return PeriodicFrieze::generate(JugglingFunction(std::move(v)),
                                    [&](long a, long b) { return C.entry(a + s, b + s); });
}

}  // namespace jfrieze

#endif
