#ifndef INDEL_BALLS_HPP
#define INDEL_BALLS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "indel/rational.hpp"
#include "indel/word.hpp"

namespace indel {

// |I_t(x)| for any length-n word over q symbols:
//   sum_{i=0}^{t} C(n+t, i) (q-1)^i.
// Center-independent. q = 1 is accepted (the ball over a unary alphabet has
// exactly one member); the max-distance pair formula evaluates unit
// sub-alphabets.
inline Integer insertion_ball_size(long long n, long long t, long long q) {
    if (n < 0 || t < 0) throw std::invalid_argument("insertion_ball_size: negative n or t");
    if (q < 1) throw std::invalid_argument("insertion_ball_size: q must be >= 1");
    Integer total = 0;
    for (long long i = 0; i <= t; ++i) total += binomial(n + t, i) * int_pow(q - 1, i);
    return total;
}

struct BallSpec {
    enum class Direction { insertion, deletion };
    Word center;
    int radius;
    Direction direction;

    BallSpec(Word center_, int radius_, Direction direction_)
        : center(std::move(center_)), radius(radius_), direction(direction_) {
        if (radius < 0) throw std::invalid_argument("BallSpec: negative radius");
        if (direction == Direction::deletion && radius > static_cast<int>(center.size()))
            throw std::domain_error("BallSpec: deletion radius exceeds word length");
    }
};

// I_t(x): all words obtained from x by t insertions, deduplicated.
inline std::set<Word> enumerate_insertion_ball(const Word& x, int t) {
    if (t < 0) throw std::invalid_argument("enumerate_insertion_ball: negative t");
    std::set<Word> level{x};
    for (int step = 0; step < t; ++step) {
        std::set<Word> next;
        for (const Word& w : level) {
            std::vector<Symbol> symbols = w.symbols();
            for (std::size_t pos = 0; pos <= symbols.size(); ++pos) {
                for (int s = 0; s < w.q(); ++s) {
                    symbols.insert(symbols.begin() + pos, static_cast<Symbol>(s));
                    next.insert(Word(symbols, w.alphabet()));
                    symbols.erase(symbols.begin() + pos);
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

// D_t(x): all words obtained from x by t deletions, deduplicated. No closed
// form exists for the size; |D_1(x)| equals the run count.
inline std::set<Word> enumerate_deletion_ball(const Word& x, int t) {
    if (t < 0) throw std::invalid_argument("enumerate_deletion_ball: negative t");
    if (t > static_cast<int>(x.size()))
        throw std::domain_error("enumerate_deletion_ball: t exceeds word length");
    std::set<Word> level{x};
    for (int step = 0; step < t; ++step) {
        std::set<Word> next;
        for (const Word& w : level) {
            std::vector<Symbol> symbols = w.symbols();
            for (std::size_t pos = 0; pos < w.size(); ++pos) {
                const Symbol removed = symbols[pos];
                symbols.erase(symbols.begin() + pos);
                next.insert(Word(symbols, w.alphabet()));
                symbols.insert(symbols.begin() + pos, removed);
            }
        }
        level = std::move(next);
    }
    return level;
}

inline std::set<Word> enumerate_ball(const BallSpec& spec) {
    return spec.direction == BallSpec::Direction::insertion
               ? enumerate_insertion_ball(spec.center, spec.radius)
               : enumerate_deletion_ball(spec.center, spec.radius);
}

// |I_{t1}(x) ∩ I_{t2}(y)| by enumerating I_{t1}(x) and testing each member
// for membership in I_{t2}(y) (y must be a subsequence and lengths match by
// precondition). Oracle for the closed forms and the recursion.
inline Integer intersection_bruteforce(const Word& x, int t1, const Word& y, int t2) {
    require_same_alphabet(x, y, "intersection_bruteforce");
    if (t1 < 0 || t2 < 0) throw std::invalid_argument("intersection_bruteforce: negative radius");
    if (x.size() + t1 != y.size() + t2)
        throw std::invalid_argument("intersection_bruteforce: output length mismatch");
    Integer count = 0;
    for (const Word& s : enumerate_insertion_ball(x, t1))
        if (is_subsequence(y, s)) ++count;
    return count;
}

namespace detail {

struct IntersectionMemo {
    // Key: offsets into x and y plus the remaining radii, each < 2^16.
    std::map<std::uint64_t, Integer> cache;

    static std::uint64_t key(std::size_t i, std::size_t j, int t1, int t2) {
        return (static_cast<std::uint64_t>(i) << 48) | (static_cast<std::uint64_t>(j) << 32) |
               (static_cast<std::uint64_t>(t1) << 16) | static_cast<std::uint64_t>(t2);
    }
};

inline bool suffix_is_subsequence(const Word& x, std::size_t i, const Word& y, std::size_t j) {
    // x[i:] subsequence of y[j:]
    std::size_t a = i;
    for (std::size_t b = j; b < y.size() && a < x.size(); ++b)
        if (y[b] == x[a]) ++a;
    return a == x.size();
}

inline Integer intersection_rec(const Word& x, std::size_t i, int t1, const Word& y, std::size_t j,
                                int t2, IntersectionMemo& memo) {
    if (t1 < 0 || t2 < 0) return 0;
    const std::size_t nx = x.size() - i, ny = y.size() - j;
    if (nx == 0) return insertion_ball_size(static_cast<long long>(ny), t2, x.q());
    if (ny == 0) return insertion_ball_size(static_cast<long long>(nx), t1, x.q());
    if (t1 == 0) return suffix_is_subsequence(y, j, x, i) ? 1 : 0;
    if (t2 == 0) return suffix_is_subsequence(x, i, y, j) ? 1 : 0;

    const std::uint64_t key = IntersectionMemo::key(i, j, t1, t2);
    if (auto it = memo.cache.find(key); it != memo.cache.end()) return it->second;

    const int q = x.q();
    Integer result;
    if (x[i] == y[j]) {
        result = intersection_rec(x, i + 1, t1, y, j + 1, t2, memo) +
                 (q - 1) * intersection_rec(x, i, t1 - 1, y, j, t2 - 1, memo);
    } else {
        result = intersection_rec(x, i + 1, t1, y, j, t2 - 1, memo) +
                 intersection_rec(x, i, t1 - 1, y, j + 1, t2, memo) +
                 (q - 2) * intersection_rec(x, i, t1 - 1, y, j, t2 - 1, memo);
    }
    memo.cache.emplace(key, result);
    return result;
}

}  // namespace detail

// Same value as intersection_bruteforce, via the two-branch recursion on the
// leading symbols with memoization keyed on suffix offsets. The memo lives
// per top-level call, so concurrent calls are independent.
inline Integer intersection_recursive(const Word& x, int t1, const Word& y, int t2) {
    require_same_alphabet(x, y, "intersection_recursive");
    if (t1 < 0 || t2 < 0) throw std::invalid_argument("intersection_recursive: negative radius");
    if (x.size() + t1 != y.size() + t2)
        throw std::invalid_argument("intersection_recursive: output length mismatch");
    detail::IntersectionMemo memo;
    return detail::intersection_rec(x, 0, t1, y, 0, t2, memo);
}

}  // namespace indel

#endif
