#ifndef JFRIEZE_JUGGLING_HPP
#define JFRIEZE_JUGGLING_HPP

// Juggling functions: n-periodic bijections pi of Z with i <= pi(i) <= i + n.
//
// A juggling function is stored by its values on [1, n]; every query at an
// arbitrary integer reduces mod n.  The period is part of the data and is
// never collapsed to a minimal one.

#include "jfrieze/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jfrieze {

class JugglingFunction {
public:
    JugglingFunction() = default;

    // values[i-1] = pi(i) for i in [1, n].
    explicit JugglingFunction(std::vector<long> values) : values_(std::move(values)) {
        long n = period();
        if (n <= 0) throw std::invalid_argument("juggling function: empty period");
        std::vector<bool> seen(n + 1, false);
        inverse_.assign(n + 1, 0);
        long total = 0;
        for (long i = 1; i <= n; ++i) {
            long v = values_[i - 1];
            if (v < i || v > i + n) {
                throw std::invalid_argument("juggling function: pi(" + std::to_string(i) + ") = " +
                                            std::to_string(v) + " is outside [" + std::to_string(i) +
                                            ", " + std::to_string(i + n) + "]");
            }
            long r = residue(v, n);
            if (seen[r]) {
                throw std::invalid_argument("juggling function: not a bijection (two throws land at residue " +
                                            std::to_string(r) + " mod " + std::to_string(n) + ")");
            }
            seen[r] = true;
            inverse_[r] = i;
            total += v - i;
        }
        // Always divisible for a bijection; kept as a guard.
        if (total % n != 0) throw std::invalid_argument("juggling function: non-integral ball count");
        balls_ = total / n;
    }

    static JugglingFunction from_throws(const std::vector<long>& throws) {
        std::vector<long> v(throws.size());
        for (std::size_t i = 0; i < throws.size(); ++i) v[i] = static_cast<long>(i) + 1 + throws[i];
        return JugglingFunction(std::move(v));
    }

    // pi(i) = i + h for all i.
    static JugglingFunction uniform(long n, long h) {
        if (h < 0 || h > n) throw std::invalid_argument("uniform juggling function: need 0 <= h <= n");
        return from_throws(std::vector<long>(n, h));
    }

    long period() const { return static_cast<long>(values_.size()); }
    long balls() const { return balls_; }
    const std::vector<long>& values() const { return values_; }

    long operator()(long i) const {
        long n = period();
        long r = residue(i, n);
        return values_[r - 1] + (i - r);
    }

    long inverse(long j) const {
        long n = period();
        long i = inverse_[residue(j, n)];
        return i + (j - (*this)(i));
    }

    std::vector<long> throws() const {
        std::vector<long> t(values_.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = values_[i] - static_cast<long>(i) - 1;
        return t;
    }

    bool is_loop(long a) const { return (*this)(a) == a; }
    bool is_coloop(long a) const { return (*this)(a) == a + period(); }

    friend bool operator==(const JugglingFunction& a, const JugglingFunction& b) {
        return a.values_ == b.values_;
    }

private:
    std::vector<long> values_;
    std::vector<long> inverse_;  // inverse_[r] = the i in [1,n] with pi(i) = r mod n
    long balls_ = 0;
};

// Digit-string shorthand when every throw is at most 9, otherwise a
// comma-separated list.
inline JugglingFunction parse_siteswap(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("siteswap: empty input");
    std::vector<long> throws;
    if (s.find(',') == std::string::npos) {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument(std::string("siteswap: unexpected character '") + c + "'");
            throws.push_back(c - '0');
        }
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(),
                                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw std::invalid_argument("siteswap: bad throw '" + item + "'");
            if (item.size() > 9) throw std::invalid_argument("siteswap: throw too large '" + item + "'");
            throws.push_back(std::stol(item));
        }
        if (s.back() == ',') throw std::invalid_argument("siteswap: trailing comma");
    }
    long n = static_cast<long>(throws.size());
    for (long t : throws)
        if (t > n)
            throw std::invalid_argument("siteswap: throw " + std::to_string(t) + " exceeds the period " +
                                        std::to_string(n));
    return JugglingFunction::from_throws(throws);
}

inline std::string format_siteswap(const JugglingFunction& pi) {
    auto t = pi.throws();
    bool digits = std::all_of(t.begin(), t.end(), [](long x) { return x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!digits && i) out += ',';
        out += std::to_string(t[i]);
    }
    return out;
}

// pi-dagger(a) = pi^{-1}(a) + n.
inline JugglingFunction dual(const JugglingFunction& pi) {
    long n = pi.period();
    std::vector<long> v(n);
    for (long a = 1; a <= n; ++a) v[a - 1] = pi.inverse(a) + n;
    return JugglingFunction(std::move(v));
}

inline long num_balls(const JugglingFunction& pi) { return pi.balls(); }

// S_pi(a, b) = {i : a < i and pi(i) < b}, ascending.
inline std::vector<long> s_set(const JugglingFunction& pi, long a, long b) {
    std::vector<long> s;
    for (long i = a + 1; i < b; ++i)
        if (pi(i) < b) s.push_back(i);
    return s;
}

// L_a = {b : pi^{-1}(b) < a <= b}; always inside [a, a + n - 1].
inline std::vector<long> landing_schedule(const JugglingFunction& pi, long a) {
    std::vector<long> L;
    for (long b = a; b < a + pi.period(); ++b)
        if (pi.inverse(b) < a) L.push_back(b);
    return L;
}

// Residues of L_1, ..., L_n, each sorted.
inline std::vector<std::vector<long>> necklace(const JugglingFunction& pi) {
    long n = pi.period();
    std::vector<std::vector<long>> out;
    for (long a = 1; a <= n; ++a) {
        std::vector<long> r;
        for (long b : landing_schedule(pi, a)) r.push_back(residue(b, n));
        std::sort(r.begin(), r.end());
        out.push_back(std::move(r));
    }
    return out;
}

struct Classification {
    std::vector<long> loops;
    std::vector<long> coloops;
    bool uniform = false;
};

inline Classification classify(const JugglingFunction& pi) {
    Classification c;
    auto t = pi.throws();
    for (long a = 1; a <= pi.period(); ++a) {
        if (pi.is_loop(a)) c.loops.push_back(a);
        if (pi.is_coloop(a)) c.coloops.push_back(a);
    }
    c.uniform = std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
    return c;
}

// Inverse of necklace(): recovers pi from (L_1, ..., L_n) given as residue
// sets.  Throws if the sequence is not a Grassmann necklace.
inline JugglingFunction from_necklace(const std::vector<std::vector<long>>& neck) {
    long n = static_cast<long>(neck.size());
    if (n == 0) throw std::invalid_argument("necklace: empty");
    std::vector<long> v(n);
    for (long a = 1; a <= n; ++a) {
        const auto& cur = neck[a - 1];
        const auto& next = neck[a % n];
        bool in = std::binary_search(cur.begin(), cur.end(), a);
        if (!in) {
            if (cur != next) throw std::invalid_argument("necklace: L_a changes although a is not in L_a");
            v[a - 1] = a;
            continue;
        }
        std::vector<long> rest;
        for (long x : cur)
            if (x != a) rest.push_back(x);
        std::vector<long> added;
        std::set_difference(next.begin(), next.end(), rest.begin(), rest.end(), std::back_inserter(added));
        if (added.size() != 1 || next.size() != cur.size())
            throw std::invalid_argument("necklace: consecutive sets do not differ by one exchange at a");
        long r = added.front();
        // Lift the landing residue into [a + 1, a + n].
        long lift = a + residue(r - a, n);
        v[a - 1] = lift;
    }
    JugglingFunction pi(std::move(v));
    if (necklace(pi) != neck) throw std::invalid_argument("necklace: not a Grassmann necklace");
    return pi;
}

}  // namespace jfrieze

#endif
