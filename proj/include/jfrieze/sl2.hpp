#ifndef JFRIEZE_SL2_HPP
#define JFRIEZE_SL2_HPP

// SL(2)-friezes from quiddity rows, and the search for the positive integral
// ones of a given height.

#include "jfrieze/frieze.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace jfrieze {

// The SL(2)-frieze of height h = n - 2 whose second row is q, with
// q[b-1] = C_{b+1,b}.  Columns follow C_{a+1,b} = q_a C_{a,b} - C_{a-1,b}.
// Returns nullopt if the recurrence does not close up (C_{b+h,b} != 1 or
// C_{b+h+1,b} != 0 for some b).
inline std::optional<PeriodicFrieze> frieze_from_quiddity(const std::vector<Rational>& q) {
    long n = static_cast<long>(q.size());
    long h = n - 2;
    if (h < 1) throw std::invalid_argument("quiddity row: period must be at least 3");
    std::vector<std::vector<Rational>> cols(n);
    for (long b = 1; b <= n; ++b) {
        std::vector<Rational> x{1, q[b - 1]};
        for (long a = b + 1; a <= b + h; ++a) x.push_back(q[residue(a, n) - 1] * x[a - b] - x[a - b - 1]);
        if (x[h] != 1 || x[h + 1] != 0) return std::nullopt;
        x.resize(n + 1);
        cols[b - 1] = std::move(x);
    }
    return PeriodicFrieze(JugglingFunction::uniform(n, h), std::move(cols));
}

// Depth-first search over second rows with entries in [1, entry_bound].  Each
// new second-row value fills the next anti-diagonal by the diamond rule
// C_{a+1,b} = (C_{a,b} C_{a+1,b+1} - 1) / C_{a,b+1}; branches die as soon as an
// entry above the bottom row is non-integral or non-positive, or a
// bottom-row entry is not 1.  Survivors are completed periodically and
// checked in full.
inline std::vector<PeriodicFrieze> enumerate_sl2_positive(long h, long entry_bound) {
    if (h < 1) throw std::invalid_argument("enumeration: height must be at least 1");
    if (entry_bound < 1) throw std::invalid_argument("enumeration: entry bound must be positive");
    long n = h + 2;
    std::vector<PeriodicFrieze> found;
    std::vector<long> q;
    // m[{a,b}] = C_{a,b} for the finite triangle fixed by the prefix of q.
    std::map<std::pair<long, long>, Integer> m;

    auto extend = [&](long j) -> bool {
        // q has j entries; add the anti-diagonal C_{j+1, b}.
        m[{j + 1, j + 1}] = 1;
        m[{j + 1, j}] = q[j - 1];
        for (long b = j - 1; b >= 1 && j + 1 - b <= h; --b) {
            const Integer& north = m.at({j, b + 1});
            Integer num = m.at({j, b}) * m.at({j + 1, b + 1}) - 1;
            if (north == 0 || num % north != 0) return false;
            Integer v = num / north;
            long depth = j + 1 - b;
            if (depth < h && v <= 0) return false;
            if (depth == h && v != 1) return false;
            m[{j + 1, b}] = v;
        }
        return true;
    };

    auto dfs = [&](auto&& self) -> void {
        long j = static_cast<long>(q.size());
        if (j == n) {
            std::vector<Rational> row(q.begin(), q.end());
            auto C = frieze_from_quiddity(row);
            if (C && is_positive(*C) && is_sl_frieze(*C, 2, h)) found.push_back(*C);
            return;
        }
        for (long v = 1; v <= entry_bound; ++v) {
            q.push_back(v);
            m[{1, 1}] = 1;
            if (extend(j + 1)) self(self);
            q.pop_back();
        }
    };
    dfs(dfs);

    std::vector<PeriodicFrieze> unique;
    for (auto& C : found) {
        bool dup = false;
        for (auto& U : unique) dup = dup || (U == C);
        if (!dup) unique.push_back(C);
    }
    return unique;
}

}  // namespace jfrieze

#endif
