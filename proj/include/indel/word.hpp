#ifndef INDEL_WORD_HPP
#define INDEL_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indel {

using Symbol = std::uint8_t;

// Alphabet {0, 1, ..., q-1}. Words never mix alphabets silently: operations
// on two words check that the alphabets agree and throw otherwise.
struct Alphabet {
    int q;

    explicit Alphabet(int q_) : q(q_) {
        if (q < 2) throw std::invalid_argument("Alphabet: q must be >= 2");
        if (q > 256) throw std::invalid_argument("Alphabet: q must be <= 256");
    }

    bool operator==(const Alphabet&) const = default;
};

// Immutable q-ary sequence. The empty word is legal; ball recursions and the
// appendix formulas operate on length-0 words.
class Word {
public:
    Word(std::vector<Symbol> symbols, Alphabet alphabet)
        : symbols_(std::move(symbols)), alphabet_(alphabet) {
        for (Symbol s : symbols_)
            if (s >= alphabet_.q) throw std::invalid_argument("Word: symbol out of alphabet");
    }

    static Word constant(Symbol symbol, std::size_t length, Alphabet alphabet) {
        return Word(std::vector<Symbol>(length, symbol), alphabet);
    }

    // Parses a base-q digit string such as "001100". Only q <= 10 has a
    // digit form; this is the representation used by code files and the CLI.
    static Word from_digits(const std::string& digits, Alphabet alphabet) {
        if (alphabet.q > 10)
            throw std::invalid_argument("Word::from_digits: digit form requires q <= 10");
        std::vector<Symbol> symbols;
        symbols.reserve(digits.size());
        for (char c : digits) {
            if (c < '0' || c >= '0' + alphabet.q)
                throw std::invalid_argument(std::string("Word::from_digits: invalid digit '") + c +
                                            "' for q=" + std::to_string(alphabet.q));
            symbols.push_back(static_cast<Symbol>(c - '0'));
        }
        return Word(std::move(symbols), alphabet);
    }

    std::string to_digits() const {
        std::string out;
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
        return out;
    }

    const std::vector<Symbol>& symbols() const { return symbols_; }
    Alphabet alphabet() const { return alphabet_; }
    int q() const { return alphabet_.q; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    bool operator==(const Word& other) const {
        return alphabet_ == other.alphabet_ && symbols_ == other.symbols_;
    }

    // Orders by alphabet, then length-aware lexicographic order on symbols.
    // Used by std::set and for deterministic CLI output.
    std::strong_ordering operator<=>(const Word& other) const {
        if (auto c = alphabet_.q <=> other.alphabet_.q; c != 0) return c;
        return std::lexicographical_compare_three_way(symbols_.begin(), symbols_.end(),
                                                      other.symbols_.begin(), other.symbols_.end());
    }

private:
    std::vector<Symbol> symbols_;
    Alphabet alphabet_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(w.q());
        for (Symbol s : w.symbols()) {
            h ^= s;
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline void require_same_alphabet(const Word& x, const Word& y, const char* op) {
    if (x.alphabet() != y.alphabet())
        throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

// Indel Levenshtein distance: |x| + |y| - 2*LCS(x, y), via the LCS dynamic
// program. Insertions and deletions only, no substitutions.
inline int indel_distance(const Word& x, const Word& y) {
    require_same_alphabet(x, y, "indel_distance");
    const std::size_t n = x.size(), m = y.size();
    std::vector<int> prev(m + 1, 0), cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    const int lcs = prev[m];
    return static_cast<int>(n + m) - 2 * lcs;
}

// Maximal constant substrings, in order.
inline std::vector<std::pair<Symbol, int>> runs(const Word& x) {
    std::vector<std::pair<Symbol, int>> result;
    for (Symbol s : x.symbols()) {
        if (!result.empty() && result.back().first == s)
            ++result.back().second;
        else
            result.emplace_back(s, 1);
    }
    return result;
}

inline int run_count(const Word& x) { return static_cast<int>(runs(x).size()); }

// True iff x is obtainable from y by deletions.
inline bool is_subsequence(const Word& x, const Word& y) {
    require_same_alphabet(x, y, "is_subsequence");
    std::size_t i = 0;
    for (std::size_t j = 0; j < y.size() && i < x.size(); ++j)
        if (y[j] == x[i]) ++i;
    return i == x.size();
}

// Temporal list of t insertions. Step i (0-based) applies to a word of
// length n+i and inserts `symbol` before gap `position`, where positions
// 0..n+i index the gaps including the append slot.
struct InsertionStep {
    int position;
    Symbol symbol;
};

using InsertionHistory = std::vector<InsertionStep>;

// Temporal list of t deletion indices; step i indexes into the current
// length n-i word.
using DeletionHistory = std::vector<int>;

// Temporal list of t distinct indices into the original word.
using DeletionPattern = std::vector<int>;

inline Word apply_insertion_history(const Word& x, const InsertionHistory& h) {
    std::vector<Symbol> symbols = x.symbols();
    for (const InsertionStep& step : h) {
        if (step.position < 0 || step.position > static_cast<int>(symbols.size()))
            throw std::invalid_argument("apply_insertion_history: position out of range");
        if (step.symbol >= x.q())
            throw std::invalid_argument("apply_insertion_history: symbol out of alphabet");
        symbols.insert(symbols.begin() + step.position, step.symbol);
    }
    return Word(std::move(symbols), x.alphabet());
}

inline Word apply_deletion_history(const Word& x, const DeletionHistory& h) {
    std::vector<Symbol> symbols = x.symbols();
    for (int index : h) {
        if (index < 0 || index >= static_cast<int>(symbols.size()))
            throw std::invalid_argument("apply_deletion_history: index out of range");
        symbols.erase(symbols.begin() + index);
    }
    return Word(std::move(symbols), x.alphabet());
}

inline Word apply_deletion_pattern(const Word& x, const DeletionPattern& p) {
    std::vector<bool> removed(x.size(), false);
    for (int index : p) {
        if (index < 0 || index >= static_cast<int>(x.size()))
            throw std::invalid_argument("apply_deletion_pattern: index out of range");
        if (removed[index]) throw std::invalid_argument("apply_deletion_pattern: repeated index");
        removed[index] = true;
    }
    std::vector<Symbol> symbols;
    symbols.reserve(x.size() - p.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!removed[i]) symbols.push_back(x[i]);
    return Word(std::move(symbols), x.alphabet());
}

// Traces a deletion history on a word of length x_len back to the original
// indices it removes. Inverse of pattern_to_history.
inline DeletionPattern history_to_pattern(int x_len, const DeletionHistory& h) {
    std::vector<int> original(x_len);
    for (int i = 0; i < x_len; ++i) original[i] = i;
    DeletionPattern pattern;
    pattern.reserve(h.size());
    for (int index : h) {
        if (index < 0 || index >= static_cast<int>(original.size()))
            throw std::invalid_argument("history_to_pattern: index out of range");
        pattern.push_back(original[index]);
        original.erase(original.begin() + index);
    }
    return pattern;
}

inline DeletionHistory pattern_to_history(int x_len, const DeletionPattern& p) {
    std::vector<int> original(x_len);
    for (int i = 0; i < x_len; ++i) original[i] = i;
    DeletionHistory history;
    history.reserve(p.size());
    for (int target : p) {
        auto it = std::find(original.begin(), original.end(), target);
        if (it == original.end())
            throw std::invalid_argument("pattern_to_history: index invalid or repeated");
        history.push_back(static_cast<int>(it - original.begin()));
        original.erase(it);
    }
    return history;
}

// Set of distinct equal-length words over one alphabet. Codewords are kept
// sorted; cardinality and the minimum pairwise indel distance are computed
// on construction.
class Code {
public:
    explicit Code(std::vector<Word> words) : words_(std::move(words)) {
        if (words_.empty()) throw std::invalid_argument("Code: at least one codeword required");
        std::sort(words_.begin(), words_.end());
        for (std::size_t i = 1; i < words_.size(); ++i) {
            if (words_[i].alphabet() != words_[0].alphabet())
                throw std::invalid_argument("Code: mixed alphabets");
            if (words_[i].size() != words_[0].size())
                throw std::invalid_argument("Code: mixed codeword lengths");
            if (words_[i] == words_[i - 1]) throw std::invalid_argument("Code: duplicate codeword");
        }
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (std::size_t j = i + 1; j < words_.size(); ++j) {
                const int d = indel_distance(words_[i], words_[j]);
                if (!d_min_ || d < *d_min_) d_min_ = d;
            }
    }

    const std::vector<Word>& words() const { return words_; }
    std::size_t M() const { return words_.size(); }
    std::size_t n() const { return words_[0].size(); }
    Alphabet alphabet() const { return words_[0].alphabet(); }
    int q() const { return words_[0].q(); }

    // Defined only for M >= 2; even, since equal-length words are at even
    // indel distance.
    std::optional<int> d_min() const { return d_min_; }

    bool contains(const Word& w) const {
        return std::binary_search(words_.begin(), words_.end(), w);
    }

private:
    std::vector<Word> words_;
    std::optional<int> d_min_;
};

}  // namespace indel

#endif
