#ifndef INDEL_VT_HPP
#define INDEL_VT_HPP

#include <set>
#include <stdexcept>
#include <vector>

#include "indel/word.hpp"

namespace indel {

// Varshamov-Tenengolts code VT_a(n): binary length-n words whose checksum
// sum_{i=1}^{n} i*x_i is congruent to a mod n+1.
struct VTParams {
    int n;
    int a;

    VTParams(int n_, int a_) : n(n_), a(a_) {
        if (n < 1) throw std::invalid_argument("VTParams: n must be >= 1");
        if (a < 0 || a > n) throw std::invalid_argument("VTParams: a must be in [0, n]");
    }
};

inline int vt_checksum(const Word& x) {
    if (x.q() != 2) throw std::invalid_argument("vt_checksum: word must be binary");
    const int mod = static_cast<int>(x.size()) + 1;
    int sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum = (sum + static_cast<int>(i + 1) * x[i]) % mod;
    return sum;
}

inline Code vt_code(const VTParams& p) {
    if (p.n > 20) throw std::invalid_argument("vt_code: n too large to enumerate (max 20)");
    const Alphabet binary(2);
    std::vector<Word> words;
    std::vector<Symbol> symbols(p.n, 0);
    for (std::uint32_t bits = 0; bits < (1u << p.n); ++bits) {
        for (int i = 0; i < p.n; ++i) symbols[i] = (bits >> (p.n - 1 - i)) & 1;
        Word w(symbols, binary);
        if (vt_checksum(w) == p.a) words.push_back(std::move(w));
    }
    return Code(std::move(words));
}

namespace detail {

inline void require_received(const Word& r, int expected_len, const char* op) {
    if (r.q() != 2) throw std::invalid_argument(std::string(op) + ": received word must be binary");
    if (static_cast<int>(r.size()) != expected_len)
        throw std::invalid_argument(std::string(op) + ": received word has wrong length");
}

}  // namespace detail

// Classical VT correction of one deletion: the checksum deficiency D of the
// received word equals the number of ones right of a deleted zero, or
// w + 1 + (zeros left of a deleted one), where w is the weight of r. Those
// two ranges partition [0, n], which pins down the reinserted symbol and a
// position producing the unique codeword.
inline Word decode_one_deletion(const VTParams& p, const Word& r) {
    detail::require_received(r, p.n - 1, "decode_one_deletion");
    const int mod = p.n + 1;
    int weight = 0;
    int checksum = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        weight += r[i];
        checksum = (checksum + static_cast<int>(i + 1) * r[i]) % mod;
    }
    const int deficiency = ((p.a - checksum) % mod + mod) % mod;

    std::vector<Symbol> symbols = r.symbols();
    if (deficiency <= weight) {
        // A zero was deleted with `deficiency` ones to its right.
        int ones_right = weight;
        std::size_t gap = 0;
        while (ones_right > deficiency) {
            ones_right -= symbols[gap] == 1;
            ++gap;
        }
        symbols.insert(symbols.begin() + gap, 0);
    } else {
        // A one was deleted with deficiency - weight - 1 zeros to its left.
        const int zeros_left = deficiency - weight - 1;
        int zeros = 0;
        std::size_t gap = 0;
        while (zeros < zeros_left) {
            zeros += symbols[gap] == 0;
            ++gap;
        }
        symbols.insert(symbols.begin() + gap, 1);
    }

    Word decoded(std::move(symbols), r.alphabet());
    if (vt_checksum(decoded) != p.a || !is_subsequence(r, decoded))
        throw std::invalid_argument("decode_one_deletion: no codeword explains received word");
    return decoded;
}

// One-insertion correction: scan the n+1 single-deletion candidates of r for
// checksum membership. The code corrects a single insertion, so the first
// verified candidate is the unique answer.
inline Word decode_one_insertion(const VTParams& p, const Word& r) {
    detail::require_received(r, p.n + 1, "decode_one_insertion");
    std::vector<Symbol> symbols = r.symbols();
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
        const Symbol removed = symbols[pos];
        symbols.erase(symbols.begin() + pos);
        Word candidate(symbols, r.alphabet());
        symbols.insert(symbols.begin() + pos, removed);
        if (vt_checksum(candidate) == p.a && is_subsequence(candidate, r)) return candidate;
    }
    throw std::invalid_argument("decode_one_insertion: no codeword explains received word");
}

struct TwoInsertionScan {
    enum class Outcome { unique, ambiguous, none };
    Outcome outcome;
    std::vector<Word> candidates;  // sorted; exactly the codewords with r in their 2-insertion ball
};

// Decodes two insertions by running the one-insertion decoder on every
// single deletion of r. Ambiguity is reported, never silently broken.
inline TwoInsertionScan decode_two_insertions_scan(const VTParams& p, const Word& r) {
    detail::require_received(r, p.n + 2, "decode_two_insertions_scan");
    std::set<Word> found;
    std::vector<Symbol> symbols = r.symbols();
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
        const Symbol removed = symbols[pos];
        symbols.erase(symbols.begin() + pos);
        Word candidate(symbols, r.alphabet());
        symbols.insert(symbols.begin() + pos, removed);
        try {
            Word decoded = decode_one_insertion(p, candidate);
            if (is_subsequence(decoded, r)) found.insert(std::move(decoded));
        } catch (const std::invalid_argument&) {
            // this 1-subsequence is not explained by any codeword
        }
    }
    TwoInsertionScan result;
    result.candidates.assign(found.begin(), found.end());
    result.outcome = result.candidates.empty()      ? TwoInsertionScan::Outcome::none
                     : result.candidates.size() == 1 ? TwoInsertionScan::Outcome::unique
                                                     : TwoInsertionScan::Outcome::ambiguous;
    return result;
}

}  // namespace indel

#endif
