#ifndef INDEL_CHANNELS_HPP
#define INDEL_CHANNELS_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "indel/balls.hpp"
#include "indel/rational.hpp"
#include "indel/word.hpp"

namespace indel {

// The four channels: uniform over distinct t-supersequences (USC) or
// t-subsequences (UBC), and uniform over t-insertion (UIC) or t-deletion
// (UDC) histories.
struct ChannelKind {
    enum class Kind { USC, UIC, UDC, UBC };
    Kind kind;
    int t;

    ChannelKind(Kind kind_, int t_) : kind(kind_), t(t_) {
        if (t < 0) throw std::invalid_argument("ChannelKind: t must be >= 0");
    }

    bool is_deletion() const { return kind == Kind::UDC || kind == Kind::UBC; }

    static ChannelKind parse(const std::string& name, int t) {
        if (name == "usc") return {Kind::USC, t};
        if (name == "uic") return {Kind::UIC, t};
        if (name == "udc") return {Kind::UDC, t};
        if (name == "ubc") return {Kind::UBC, t};
        throw std::invalid_argument("ChannelKind: unknown channel '" + name + "'");
    }

    std::string name() const {
        switch (kind) {
            case Kind::USC: return "usc";
            case Kind::UIC: return "uic";
            case Kind::UDC: return "udc";
            case Kind::UBC: return "ubc";
        }
        return "";
    }
};

// favorable / total as exact unbounded counts; f = favorable / total.
struct ChannelCounts {
    Integer favorable;
    Integer total;

    Rational f() const { return Rational(favorable, total); }
};

struct CodewordStats {
    Word codeword;
    Integer favorable;
    Integer total;
    Rational f;
};

struct DecodingReport {
    std::vector<CodewordStats> per_codeword;  // in code (lexicographic) order
    Rational W;                               // min over codewords
    Rational U;                               // average over codewords
};

namespace detail {

// Direct enumeration of histories is kept exact by bounding the count.
constexpr std::uint64_t kMaxHistories = 100'000'000;

struct SymbolsHash {
    std::size_t operator()(const std::vector<Symbol>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Symbol s : v) {
            h ^= s;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Lazily answers "is this received word unique to c" for a fixed c in C,
// memoized per distinct word.
class UniquenessMemo {
public:
    // For insertions the received word is unique iff no other codeword is a
    // subsequence of it; for deletions iff it is a subsequence of no other
    // codeword.
    UniquenessMemo(const Word& c, const Code& code, bool deletion_side)
        : alphabet_(c.alphabet()), deletion_side_(deletion_side) {
        for (const Word& other : code.words())
            if (!(other == c)) others_.push_back(&other);
    }

    bool unique(const std::vector<Symbol>& received) {
        auto it = cache_.find(received);
        if (it != cache_.end()) return it->second;
        const Word s(received, alphabet_);
        bool result = true;
        for (const Word* other : others_) {
            const bool shared = deletion_side_ ? is_subsequence(s, *other) : is_subsequence(*other, s);
            if (shared) {
                result = false;
                break;
            }
        }
        cache_.emplace(received, result);
        return result;
    }

private:
    Alphabet alphabet_;
    bool deletion_side_;
    std::vector<const Word*> others_;
    std::unordered_map<std::vector<Symbol>, bool, SymbolsHash> cache_;
};

inline void require_member(const Word& c, const Code& code, const char* op) {
    if (!code.contains(c)) throw std::invalid_argument(std::string(op) + ": codeword not in code");
}

}  // namespace detail

// Fraction of I_t(c) unique to c; denominator is the closed-form ball size.
inline ChannelCounts f_usc_counts(const Word& c, const Code& code, int t) {
    detail::require_member(c, code, "f_usc");
    if (t < 0) throw std::invalid_argument("f_usc: t must be >= 0");
    detail::UniquenessMemo memo(c, code, /*deletion_side=*/false);
    Integer favorable = 0;
    for (const Word& s : enumerate_insertion_ball(c, t))
        if (memo.unique(s.symbols())) ++favorable;
    return {favorable, insertion_ball_size(static_cast<long long>(c.size()), t, c.q())};
}

// Fraction of the q^t * prod(n+i) insertion histories whose output is unique
// to c, by full history enumeration.
inline ChannelCounts f_uic_counts(const Word& c, const Code& code, int t) {
    detail::require_member(c, code, "f_uic");
    if (t < 0) throw std::invalid_argument("f_uic: t must be >= 0");
    const int n = static_cast<int>(c.size());
    const int q = c.q();
    Integer total = int_pow(q, t);
    for (int i = 1; i <= t; ++i) total *= n + i;
    if (total > detail::kMaxHistories)
        throw std::domain_error("f_uic: history count exceeds enumeration limit");

    detail::UniquenessMemo memo(c, code, /*deletion_side=*/false);
    std::uint64_t favorable = 0;
    std::vector<Symbol> buffer = c.symbols();
    const std::function<void(int)> visit = [&](int step) {
        if (step == t) {
            if (memo.unique(buffer)) ++favorable;
            return;
        }
        for (std::size_t pos = 0; pos <= buffer.size(); ++pos) {
            for (int s = 0; s < q; ++s) {
                buffer.insert(buffer.begin() + pos, static_cast<Symbol>(s));
                visit(step + 1);
                buffer.erase(buffer.begin() + pos);
            }
        }
    };
    visit(0);
    return {Integer(favorable), total};
}

// Fraction of the n!/(n-t)! deletion histories whose output is unique to c.
inline ChannelCounts f_udc_counts(const Word& c, const Code& code, int t) {
    detail::require_member(c, code, "f_udc");
    const int n = static_cast<int>(c.size());
    if (t < 0) throw std::invalid_argument("f_udc: t must be >= 0");
    if (t > n) throw std::domain_error("f_udc: t exceeds codeword length");
    Integer total = 1;
    for (int i = 0; i < t; ++i) total *= n - i;
    if (total > detail::kMaxHistories)
        throw std::domain_error("f_udc: history count exceeds enumeration limit");

    detail::UniquenessMemo memo(c, code, /*deletion_side=*/true);
    std::uint64_t favorable = 0;
    std::vector<Symbol> buffer = c.symbols();
    const std::function<void(int)> visit = [&](int step) {
        if (step == t) {
            if (memo.unique(buffer)) ++favorable;
            return;
        }
        for (std::size_t pos = 0; pos < buffer.size(); ++pos) {
            const Symbol removed = buffer[pos];
            buffer.erase(buffer.begin() + pos);
            visit(step + 1);
            buffer.insert(buffer.begin() + pos, removed);
        }
    };
    visit(0);
    return {Integer(favorable), total};
}

// Fraction of the distinct t-subsequences of c unique to c.
inline ChannelCounts f_ubc_counts(const Word& c, const Code& code, int t) {
    detail::require_member(c, code, "f_ubc");
    if (t < 0) throw std::invalid_argument("f_ubc: t must be >= 0");
    if (t > static_cast<int>(c.size())) throw std::domain_error("f_ubc: t exceeds codeword length");
    detail::UniquenessMemo memo(c, code, /*deletion_side=*/true);
    const std::set<Word> ball = enumerate_deletion_ball(c, t);
    Integer favorable = 0;
    for (const Word& s : ball)
        if (memo.unique(s.symbols())) ++favorable;
    return {favorable, Integer(ball.size())};
}

inline ChannelCounts channel_counts(const Word& c, const Code& code, ChannelKind kind) {
    switch (kind.kind) {
        case ChannelKind::Kind::USC: return f_usc_counts(c, code, kind.t);
        case ChannelKind::Kind::UIC: return f_uic_counts(c, code, kind.t);
        case ChannelKind::Kind::UDC: return f_udc_counts(c, code, kind.t);
        case ChannelKind::Kind::UBC: return f_ubc_counts(c, code, kind.t);
    }
    throw std::invalid_argument("channel_counts: unknown channel");
}

inline Rational f_usc(const Word& c, const Code& code, int t) { return f_usc_counts(c, code, t).f(); }
inline Rational f_uic(const Word& c, const Code& code, int t) { return f_uic_counts(c, code, t).f(); }
inline Rational f_udc(const Word& c, const Code& code, int t) { return f_udc_counts(c, code, t).f(); }
inline Rational f_ubc(const Word& c, const Code& code, int t) { return f_ubc_counts(c, code, t).f(); }

// Per-codeword f values plus W = min f and U = (sum f) / M, all exact.
inline DecodingReport report(const Code& code, ChannelKind kind) {
    if (kind.is_deletion() && kind.t > static_cast<int>(code.n()))
        throw std::domain_error("report: t exceeds code length for a deletion channel");
    DecodingReport result;
    Rational sum = 0;
    for (const Word& c : code.words()) {
        ChannelCounts counts = channel_counts(c, code, kind);
        const Rational f = counts.f();
        sum += f;
        if (result.per_codeword.empty() || f < result.W) result.W = f;
        result.per_codeword.push_back({c, std::move(counts.favorable), std::move(counts.total), f});
    }
    result.U = sum / static_cast<long long>(code.M());
    return result;
}

namespace detail {

// Exactly uniform draw from [0, k) via rejection sampling; deterministic for
// a given generator state.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t k) {
    const std::uint64_t rem = ((std::numeric_limits<std::uint64_t>::max() % k) + 1) % k;  // 2^64 mod k
    if (rem == 0) return gen() % k;
    const std::uint64_t limit = 0 - rem;  // largest multiple of k representable
    std::uint64_t v = gen();
    while (v >= limit) v = gen();
    return v % k;
}

}  // namespace detail

// Stochastic estimate of f_UIC or f_UDC from `trials` sampled histories.
// USC/UBC are rejected: their uniformity is over distinct outputs, which we
// only realize by enumeration.
inline Rational monte_carlo_f(const Word& c, const Code& code, ChannelKind kind,
                              std::uint64_t trials, std::uint64_t seed) {
    detail::require_member(c, code, "monte_carlo_f");
    if (trials < 1) throw std::invalid_argument("monte_carlo_f: trials must be >= 1");
    const bool insertion = kind.kind == ChannelKind::Kind::UIC;
    if (!insertion && kind.kind != ChannelKind::Kind::UDC)
        throw std::invalid_argument("monte_carlo_f: only uic and udc can be sampled");
    const int n = static_cast<int>(c.size());
    const int t = kind.t;
    if (!insertion && t > n) throw std::domain_error("monte_carlo_f: t exceeds codeword length");

    detail::UniquenessMemo memo(c, code, /*deletion_side=*/!insertion);
    std::mt19937_64 gen(seed);
    std::uint64_t successes = 0;
    std::vector<Symbol> buffer;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        buffer = c.symbols();
        for (int step = 0; step < t; ++step) {
            if (insertion) {
                const auto pos = detail::uniform_below(gen, buffer.size() + 1);
                const auto sym = detail::uniform_below(gen, static_cast<std::uint64_t>(c.q()));
                buffer.insert(buffer.begin() + pos, static_cast<Symbol>(sym));
            } else {
                const auto pos = detail::uniform_below(gen, buffer.size());
                buffer.erase(buffer.begin() + pos);
            }
        }
        if (memo.unique(buffer)) ++successes;
    }
    return Rational(Integer(successes), Integer(trials));
}

// Codeword whose rightmost run is longest (ties broken lexicographically);
// duplicating its last symbol t times yields a unique t-supersequence, which
// is verified before returning. Consequently U_K(C) > 0 for the insertion
// channels.
inline Word has_unique_supersequence_witness(const Code& code, int t) {
    if (t < 0) throw std::invalid_argument("has_unique_supersequence_witness: t must be >= 0");
    const Word* best = nullptr;
    int best_run = -1;
    for (const Word& c : code.words()) {
        const int rr = c.empty() ? 0 : runs(c).back().second;
        if (rr > best_run) {
            best = &c;
            best_run = rr;
        }
    }
    const Word& witness = *best;
    std::vector<Symbol> symbols = witness.symbols();
    const Symbol last = symbols.empty() ? Symbol{0} : symbols.back();
    symbols.insert(symbols.end(), static_cast<std::size_t>(t), last);
    const Word supersequence(std::move(symbols), witness.alphabet());
    for (const Word& other : code.words()) {
        if (other == witness) continue;
        if (is_subsequence(other, supersequence))
            throw std::logic_error("has_unique_supersequence_witness: witness not unique");
    }
    return witness;
}

}  // namespace indel

#endif
