#ifndef INDEL_BOUNDS_HPP
#define INDEL_BOUNDS_HPP

#include <optional>
#include <stdexcept>

#include "indel/balls.hpp"
#include "indel/rational.hpp"

namespace indel {

// Parameter bundle for the bound CLI surface. d is half the guaranteed
// pairwise indel distance (B_d); w a codeword weight (weight bounds).
struct BoundQuery {
    long long n = 1;
    long long q = 2;
    long long t = 0;
    std::optional<long long> d;
    std::optional<long long> w;

    void validate() const {
        if (n < 1) throw std::invalid_argument("BoundQuery: n must be >= 1");
        if (q < 2) throw std::invalid_argument("BoundQuery: q must be >= 2");
        if (t < 0) throw std::invalid_argument("BoundQuery: t must be >= 0");
        if (d && (*d < 1 || *d > n)) throw std::invalid_argument("BoundQuery: d must be in [1, n]");
        if (w && (*w < 0 || *w > n)) throw std::invalid_argument("BoundQuery: w must be in [0, n]");
    }
};

// Minimum insertion-ball intersection cardinality over all center pairs
// (X, Y) of lengths n1, n2 at common output length n1+t1 = n2+t2:
//   sum_{k=n1}^{t2} sum_{i=0}^{k-n1} C(k,i) (q-2)^i C(n2+t2, k).
// Empty sum (t2 < n1) gives 0. Attained by every pair at indel distance
// n1+n2, in particular by (0_{n1}, 1_{n2}).
inline Integer min_intersection(long long n1, long long n2, long long t1, long long t2,
                                long long q) {
    if (n1 < 0 || n2 < 0 || t1 < 0 || t2 < 0)
        throw std::invalid_argument("min_intersection: negative parameter");
    if (q < 2) throw std::invalid_argument("min_intersection: q must be >= 2");
    if (n1 + t1 != n2 + t2) throw std::invalid_argument("min_intersection: output length mismatch");
    Integer total = 0;
    for (long long k = n1; k <= t2; ++k) {
        Integer inner = 0;
        for (long long i = 0; i <= k - n1; ++i) inner += binomial(k, i) * int_pow(q - 2, i);
        total += inner * binomial(n2 + t2, k);
    }
    return total;
}

// Exact |I_{t1}(X) ∩ I_{t2}(Y)| for any pair at indel distance n1+n2 whose
// symbols split into disjoint sub-alphabets of sizes q-q_B (for X) and q_B
// (for Y):
//   sum_{k=0}^{N-n1-n2} I_k(n1, q-q_B) I_{N-k-n1-n2}(n2, q_B) C(N, t1-k).
inline Integer maxdist_pair_intersection(long long n1, long long n2, long long t1, long long t2,
                                         long long q, long long q_B) {
    if (n1 < 0 || n2 < 0 || t1 < 0 || t2 < 0)
        throw std::invalid_argument("maxdist_pair_intersection: negative parameter");
    if (n1 + t1 != n2 + t2)
        throw std::invalid_argument("maxdist_pair_intersection: output length mismatch");
    if (q_B < 1 || q_B > q - 1)
        throw std::invalid_argument("maxdist_pair_intersection: q_B must be in [1, q-1]");
    const long long N = n1 + t1;
    Integer total = 0;
    for (long long k = 0; k <= N - n1 - n2; ++k) {
        total += insertion_ball_size(n1, k, q - q_B) *
                 insertion_ball_size(n2, N - k - n1 - n2, q_B) * binomial(N, t1 - k);
    }
    return total;
}

// B(n, q, USC_t): tight upper bound on the fraction of unique
// t-supersequences, 1 - min_intersection(n,n,t,t,q) / |I_t(n,q)|.
inline Rational bound_usc(long long n, long long q, long long t) {
    if (n < 1) throw std::invalid_argument("bound_usc: n must be >= 1");
    if (q < 2) throw std::invalid_argument("bound_usc: q must be >= 2");
    if (t < 0) throw std::invalid_argument("bound_usc: t must be >= 0");
    return 1 - Rational(min_intersection(n, n, t, t, q), insertion_ball_size(n, t, q));
}

// Number of t-insertion histories for a length-n word X whose output lands
// in I_t(Y), for Y at indel distance 2n from X (a lower bound for closer
// pairs): sum_{i=0}^{t-n} C(t,i) (q-1)^i * prod_{i=1}^{t} (n+i).
// Zero when t < n.
inline Integer count_histories_covering(long long n, long long q, long long t) {
    if (n < 1) throw std::invalid_argument("count_histories_covering: n must be >= 1");
    if (q < 2) throw std::invalid_argument("count_histories_covering: q must be >= 2");
    if (t < 0) throw std::invalid_argument("count_histories_covering: t must be >= 0");
    if (t < n) return 0;
    Integer positions = 1;
    for (long long i = 1; i <= t; ++i) positions *= n + i;
    Integer patterns = 0;
    for (long long i = 0; i <= t - n; ++i) patterns += binomial(t, i) * int_pow(q - 1, i);
    return patterns * positions;
}

// B(n, q, UIC_t) = sum_{i=t-n+1}^{t} C(t,i) (q-1)^i / q^t, the lower summation
// index clamped at 0 so the bound totalizes to 1 for t < n.
inline Rational bound_uic(long long n, long long q, long long t) {
    if (n < 1) throw std::invalid_argument("bound_uic: n must be >= 1");
    if (q < 2) throw std::invalid_argument("bound_uic: q must be >= 2");
    if (t < 0) throw std::invalid_argument("bound_uic: t must be >= 0");
    const long long lo = t - n + 1 > 0 ? t - n + 1 : 0;
    Integer numerator = 0;
    for (long long i = lo; i <= t; ++i) numerator += binomial(t, i) * int_pow(q - 1, i);
    return Rational(numerator, int_pow(q, t));
}

// B_d(n, q, UDC_t): 1 for t < d, otherwise
//   1 - d! (t-d)! C(t,d) C(n-d,t-d) (n-t)! / n!.
// Alphabet-free; q is unused and kept for interface uniformity.
inline Rational bound_udc(long long n, long long q, long long t, long long d) {
    (void)q;
    if (n < 1) throw std::invalid_argument("bound_udc: n must be >= 1");
    if (d < 1 || d > n) throw std::invalid_argument("bound_udc: d must be in [1, n]");
    if (t < 1 || t > n) throw std::invalid_argument("bound_udc: t must be in [1, n]");
    if (t < d) return 1;
    const Integer shared = factorial(d) * factorial(t - d) * binomial(t, d) *
                           binomial(n - d, t - d) * factorial(n - t);
    return 1 - Rational(shared, factorial(n));
}

// Binary weight bound when {0_n, 1_n} is in the code:
//   f_UIC_t(c, C) <= 1 - (sum_{i=n-w}^{t} C(t,i) + sum_{i=w}^{t} C(t,i)) / 2^t
// for a codeword of weight 1 <= w <= n-1 and 1 <= t <= n-1.
inline Rational weight_bound_uic_0n1n(long long n, long long t, long long w) {
    if (n < 2) throw std::invalid_argument("weight_bound_uic_0n1n: n must be >= 2");
    if (w < 1 || w > n - 1)
        throw std::invalid_argument("weight_bound_uic_0n1n: w must be in [1, n-1]");
    if (t < 1 || t > n - 1)
        throw std::invalid_argument("weight_bound_uic_0n1n: t must be in [1, n-1]");
    Integer covered = 0;
    for (long long i = n - w; i <= t; ++i) covered += binomial(t, i);
    for (long long i = w; i <= t; ++i) covered += binomial(t, i);
    return 1 - Rational(covered, int_pow(2, t));
}

// Weight bound when 0_n is in the code (any linear code):
//   f_UIC_t(c, C) <= sum_{i=0}^{w-1} C(t,i) (q-1)^{t-i} / q^t.
inline Rational weight_bound_uic_0n(long long n, long long q, long long t, long long w) {
    if (n < 1) throw std::invalid_argument("weight_bound_uic_0n: n must be >= 1");
    if (q < 2) throw std::invalid_argument("weight_bound_uic_0n: q must be >= 2");
    if (t < 0) throw std::invalid_argument("weight_bound_uic_0n: t must be >= 0");
    if (w < 1) throw std::invalid_argument("weight_bound_uic_0n: w must be >= 1");
    Integer numerator = 0;
    for (long long i = 0; i <= w - 1 && i <= t; ++i)
        numerator += binomial(t, i) * int_pow(q - 1, t - i);
    return Rational(numerator, int_pow(q, t));
}

// Deletion analogue for binary codes containing {0_n, 1_n}:
//   f_UDC_t(c, C) <= 1 - A_w^n(t, e_0) - A_{n-w}^n(t, e_1), and 0 at t = n,
// where A_x^n(t, e) is 0 for t < x and e for x <= t < n.
inline Rational weight_bound_udc_0n1n(long long n, long long t, long long w) {
    if (n < 2) throw std::invalid_argument("weight_bound_udc_0n1n: n must be >= 2");
    if (w < 1 || w > n - 1)
        throw std::invalid_argument("weight_bound_udc_0n1n: w must be in [1, n-1]");
    if (t < 1 || t > n) throw std::invalid_argument("weight_bound_udc_0n1n: t must be in [1, n]");
    if (t == n) return 0;
    const auto shared_fraction = [n, t](long long x) {
        return Rational(factorial(n - t) * factorial(x) * factorial(t - x) * binomial(t, x) *
                            binomial(n - x, t - x),
                        factorial(n));
    };
    Rational result = 1;
    if (t >= w) result -= shared_fraction(w);
    if (t >= n - w) result -= shared_fraction(n - w);
    return result;
}

}  // namespace indel

#endif
