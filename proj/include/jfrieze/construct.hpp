#ifndef JFRIEZE_CONSTRUCT_HPP
#define JFRIEZE_CONSTRUCT_HPP

// Matrices to friezes and back.
//
// A k x n matrix A is pi-unimodular when every necklace minor det(A_{L_a}) is
// 1 and rank(A_{[a,b]}) <= |L_a cap [a,b]|.  F(A) is then a pi-dagger-frieze,
// computed either entry by entry from determinants or in one product
// tau(A)^T A using the twist.

#include "jfrieze/frieze.hpp"
#include "jfrieze/juggling.hpp"
#include "jfrieze/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace jfrieze {

struct UnimodularCertificate {
    enum class Kind { consecutive, positroid };
    struct Minor {
        std::vector<long> columns;  // residues in [1, n], ascending
        Rational determinant;
    };
    struct RankViolation {
        long a;
        long b;
        std::size_t rank;
        std::size_t allowed;
    };

    Kind kind = Kind::positroid;
    std::vector<Minor> checked_minors;
    std::vector<RankViolation> rank_violations;

    bool ok() const {
        return rank_violations.empty() &&
               std::all_of(checked_minors.begin(), checked_minors.end(),
                           [](const Minor& m) { return m.determinant == 1; });
    }
    std::vector<Minor> failed_minors() const {
        std::vector<Minor> out;
        for (const auto& m : checked_minors)
            if (m.determinant != 1) out.push_back(m);
        return out;
    }
};

inline std::vector<long> residues_of(const std::vector<long>& I, long n) {
    std::vector<long> r;
    for (long i : I) r.push_back(residue(i, n));
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

inline bool is_consecutively_unimodular(const Matrix& A) {
    long k = static_cast<long>(A.rows()), n = static_cast<long>(A.cols());
    if (k > n) throw std::invalid_argument("consecutive unimodularity: more rows than columns");
    for (long a = 1; a <= n; ++a)
        if (det(cyclic_submatrix(A, interval_minus(a, a + k - 1), n)) != 1) return false;
    return true;
}

inline void require_dimensions(const Matrix& A, const JugglingFunction& pi) {
    if (static_cast<long>(A.cols()) != pi.period() || static_cast<long>(A.rows()) != pi.balls())
        throw std::invalid_argument("matrix is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                                    " but the juggling function needs " + std::to_string(pi.balls()) + "x" +
                                    std::to_string(pi.period()));
}

inline UnimodularCertificate is_pi_unimodular(const Matrix& A, const JugglingFunction& pi) {
    require_dimensions(A, pi);
    long n = pi.period();
    UnimodularCertificate cert;
    cert.kind = classify(pi).uniform ? UnimodularCertificate::Kind::consecutive
                                     : UnimodularCertificate::Kind::positroid;
    for (long a = 1; a <= n; ++a) {
        auto L = landing_schedule(pi, a);
        cert.checked_minors.push_back({residues_of(L, n), det(cyclic_submatrix(A, L, n))});
    }
    for (long a = 1; a <= n; ++a) {
        auto L = landing_schedule(pi, a);
        for (long b = a; b < a + n; ++b) {
            std::size_t allowed = std::count_if(L.begin(), L.end(), [&](long x) { return x <= b; });
            std::size_t r = rank(cyclic_submatrix(A, interval_minus(a, b), n));
            if (r > allowed) cert.rank_violations.push_back({a, b, r, allowed});
        }
    }
    return cert;
}

inline void require_pi_unimodular(const Matrix& A, const JugglingFunction& pi, const char* what) {
    auto cert = is_pi_unimodular(A, pi);
    if (!cert.ok())
        throw std::domain_error(std::string(what) + ": matrix is not " + format_siteswap(pi) + "-unimodular");
}

// Column a of tau(A) solves (A_{L_a})^T x = e_{position of a in L_a}; it is
// zero when a is a loop.
inline Matrix twist(const Matrix& A, const JugglingFunction& pi) {
    require_pi_unimodular(A, pi, "twist");
    long n = pi.period();
    std::size_t k = A.rows();
    Matrix T(k, n);
    for (long a = 1; a <= n; ++a) {
        if (pi.is_loop(a)) continue;
        auto cols = residues_of(landing_schedule(pi, a), n);
        std::vector<Rational> e(k);
        e[std::find(cols.begin(), cols.end(), a) - cols.begin()] = 1;
        auto x = solve_square(cyclic_submatrix(A, cols, n).transpose(), e);
        for (std::size_t i = 0; i < k; ++i) T(i, a - 1) = x[i];
    }
    return T;
}

// (n-k) x n matrix with det(A_I) = det(Ad_{[n]-I}) for every k-subset I:
// kernel basis, odd-numbered columns negated, first row rescaled, then every
// identity verified.
inline Matrix positive_complement(const Matrix& A) {
    std::size_t k = A.rows(), n = A.cols();
    if (k > n || rank(A) < k) throw std::domain_error("positive complement: matrix does not have full row rank");
    Matrix B = kernel_basis(A);
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < n; j += 2) B(i, j) = -B(i, j);

    std::vector<std::size_t> arows(k), brows(n - k);
    for (std::size_t i = 0; i < k; ++i) arows[i] = i;
    for (std::size_t i = 0; i < n - k; ++i) brows[i] = i;
    auto complement = [&](const std::vector<std::size_t>& I) {
        std::vector<std::size_t> c;
        for (std::size_t j = 0; j < n; ++j)
            if (!std::binary_search(I.begin(), I.end(), j)) c.push_back(j);
        return c;
    };

    auto all = subsets(n, k);
    if (n > k) {
        for (const auto& I : all) {
            Rational da = det(submatrix(A, arows, I));
            if (da == 0) continue;
            Rational lambda = det(submatrix(B, brows, complement(I))) / da;
            if (lambda == 0) throw std::domain_error("positive complement: degenerate kernel basis");
            for (std::size_t j = 0; j < n; ++j) B(0, j) /= lambda;
            break;
        }
    }
    for (const auto& I : all) {
        if (det(submatrix(A, arows, I)) != det(submatrix(B, brows, complement(I))))
            throw std::domain_error("positive complement: complementary minor identity fails");
    }
    return B;
}

// M with twist(M, pi) in the SL(k)-orbit of B, via complement, twist for
// pi-dagger, complement.
inline Matrix inverse_twist(const Matrix& B, const JugglingFunction& pi) {
    require_pi_unimodular(B, pi, "inverse twist");
    Matrix M = positive_complement(twist(positive_complement(B), dual(pi)));
    require_pi_unimodular(M, pi, "inverse twist result");
    return M;
}

// F(A)_{a,b} at arbitrary integers, without any periodic reduction.
inline Rational frieze_entry_det(const Matrix& A, const JugglingFunction& pi, long a, long b) {
    long n = pi.period();
    long k = static_cast<long>(A.rows());
    if (a < b || a > b + n) return 0;
    if (pi.is_loop(a)) {
        if (a == b) return 1;
        if (a == b + n) return sign_power(k);
        return 0;
    }
    if (a == b + n) return 0;
    auto L = landing_schedule(pi, a);
    long rb = residue(b, n), ra = residue(a, n);
    std::vector<long> cols;
    for (long x : L) {
        if (x == a) continue;
        if (residue(x, n) == rb && rb != ra) return 0;
        cols.push_back(x);
    }
    cols.push_back(b);
    Rational d = det(cyclic_submatrix(A, cols, n));
    return d * sign_power(static_cast<long>(s_set(dual(pi), b, a).size()));
}

inline PeriodicFrieze build_frieze_det(const Matrix& A, const JugglingFunction& pi) {
    require_pi_unimodular(A, pi, "F(A)");
    return PeriodicFrieze::generate(dual(pi), [&](long a, long b) { return frieze_entry_det(A, pi, a, b); });
}

inline Matrix twist_product(const Matrix& A, const JugglingFunction& pi) { return twist(A, pi).transpose() * A; }

// P = tau(A)^T A laid out as a strip: P_{a,b} for b <= a goes to (a, b), P_{a,b}
// for b > a is multiplied by (-1)^{k-1} and goes to (a, b - n).  At a loop a
// the zero on the diagonal of P splits into 1 at (a, a) and (-1)^k at (a+n, a).
inline PeriodicFrieze build_frieze_twist(const Matrix& A, const JugglingFunction& pi) {
    Matrix P = twist_product(A, pi);
    long n = pi.period();
    long k = static_cast<long>(A.rows());
    return PeriodicFrieze::generate(dual(pi), [&](long a, long b) -> Rational {
        if (a == b + n) return pi.is_loop(b) ? Rational(sign_power(k)) : Rational(0);
        if (pi.is_loop(residue(a, n))) return a == b ? 1 : 0;
        long ra = residue(a, n), rb = residue(b, n);
        Rational v = P(ra - 1, rb - 1);
        if (rb > ra) v *= sign_power(k - 1);
        return v;
    });
}

// Superperiodic kernel equations of C restricted to one period of rows: row a
// of the result encodes sum_b C_{a,b} q_{(k,n)}(v)_b in terms of v_1..v_n.
inline Matrix superperiodic_system(const PeriodicFrieze& C, long k) {
    long n = C.period();
    Matrix E(n, n);
    for (long a = 1; a <= n; ++a)
        for (long b = a - n; b <= a; ++b) {
            Rational c = C.entry(a, b);
            if (c == 0) continue;
            long r = residue(b, n);
            E(a - 1, r - 1) += c * sign_power((k - 1) * ((b - r) / n));
        }
    return E;
}

// Inverse of F: C must be a pi-dagger-frieze; returns a pi-unimodular A with
// build_frieze_det(A, pi) = C, where pi is the dual of C's shape.
inline Matrix frieze_to_matrix(const PeriodicFrieze& C) {
    JugglingFunction pi = dual(C.shape());
    long n = pi.period();
    long k = pi.balls();
    Matrix V = kernel_basis(superperiodic_system(C, k));
    if (static_cast<long>(V.rows()) != n - k)
        throw std::domain_error("frieze_to_matrix: superperiodic kernel has dimension " + std::to_string(V.rows()) +
                                ", expected " + std::to_string(n - k));
    Matrix A = V.rows() ? kernel_basis(V) : Matrix::identity(n);
    if (k > 0) {
        Rational d = det(cyclic_submatrix(A, landing_schedule(pi, 1), n));
        if (d == 0) throw std::domain_error("frieze_to_matrix: necklace minor vanishes");
        for (long j = 0; j < n; ++j) A(0, j) /= d;
    }
    if (!is_pi_unimodular(A, pi).ok() || !(build_frieze_det(A, pi) == C))
        throw std::domain_error("frieze_to_matrix: round trip failed (input is not a frieze)");
    return A;
}

}  // namespace jfrieze

#endif
