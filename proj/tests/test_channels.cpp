#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "indel/bounds.hpp"
#include "indel/channels.hpp"
#include "indel/vt.hpp"
#include "test_util.hpp"

using namespace indel;
using test_util::all_words;
using test_util::constant;
using test_util::word;

namespace {

// Number of index subsets of s whose removal yields c (distinct-subsequence
// embedding count), used by the history-counting cross-oracle.
Integer embedding_count(const Word& s, const Word& c) {
    std::vector<Integer> dp(c.size() + 1, 0);
    dp[0] = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = c.size(); j >= 1; --j)
            if (c[j - 1] == s[i]) dp[j] += dp[j - 1];
    return dp[c.size()];
}

// f_UIC through the identity: each (inserted-position set, symbols) trace is
// realized by exactly t! histories.
Rational f_uic_by_embeddings(const Word& c, const Code& code, int t) {
    const long long n = static_cast<long long>(c.size());
    Integer favorable = 0;
    for (const Word& s : enumerate_insertion_ball(c, t)) {
        bool unique = true;
        for (const Word& other : code.words())
            if (!(other == c) && is_subsequence(other, s)) {
                unique = false;
                break;
            }
        if (unique) favorable += embedding_count(s, c);
    }
    return Rational(favorable, binomial(n + t, t) * int_pow(c.q(), t));
}

std::vector<Code> random_binary_codes(int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Code> codes;
    while (static_cast<int>(codes.size()) < count) {
        const int n = 2 + static_cast<int>(gen() % 3);  // 2..4
        const std::size_t m = std::min<std::size_t>(2 + gen() % 4, std::size_t{1} << n);
        std::set<Word> words;
        while (words.size() < m) {
            std::vector<Symbol> symbols(n);
            for (auto& s : symbols) s = static_cast<Symbol>(gen() % 2);
            words.insert(Word(symbols, Alphabet(2)));
        }
        codes.emplace_back(std::vector<Word>(words.begin(), words.end()));
    }
    return codes;
}

}  // namespace

TEST_CASE("f_usc") {
    const Code pair({word("0"), word("1")});
    CHECK(f_usc(word("0"), pair, 1) == Rational(1, 3));
    CHECK(f_usc(word("0"), Code({word("0")}), 3) == 1);
    const Code constants({constant(0, 3), constant(1, 3)});
    CHECK(f_usc(constant(0, 3), constants, 1) == 1);  // balls disjoint at t < n
    CHECK_THROWS_AS(f_usc(word("1"), Code({word("0")}), 1), std::invalid_argument);
}

TEST_CASE("f_uic") {
    const Code constants({word("00"), word("11")});
    CHECK(f_uic(word("00"), constants, 2) == Rational(3, 4));
    CHECK(f_uic(word("00"), Code({word("00")}), 2) == 1);
    CHECK(f_uic(word("00"), constants, 1) == 1);
}

TEST_CASE("f_udc") {
    const Code code({word("10"), word("00")});
    CHECK(f_udc(word("10"), code, 1) == Rational(1, 2));
    CHECK(f_udc(word("10"), Code({word("10")}), 1) == 1);
    CHECK(f_udc(word("10"), code, 2) == 0);  // t = n, shared empty word
    CHECK_THROWS_AS(f_udc(word("10"), code, 3), std::domain_error);
}

TEST_CASE("f_ubc") {
    const Code code({word("10"), word("00")});
    CHECK(f_ubc(word("10"), code, 1) == Rational(1, 2));
    CHECK(f_ubc(word("10"), Code({word("10")}), 1) == 1);

    // denominator at t = 1 is the run count
    for (const Word& x : all_words(5, 2)) {
        if (run_count(x) == 0) continue;
        const Code solo({x});
        CHECK(f_ubc_counts(x, solo, 1).total == run_count(x));
    }
}

TEST_CASE("report") {
    const Code pair({word("0"), word("1")});
    const DecodingReport rep = report(pair, ChannelKind(ChannelKind::Kind::USC, 1));
    CHECK(rep.per_codeword.size() == 2);
    CHECK(rep.per_codeword[0].f == rep.per_codeword[1].f);  // relabeling symmetry
    CHECK(rep.W == rep.U);

    // tightness witness: U equals the UIC bound on {0_n, 1_n}
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t <= 3; ++t) {
            const Code constants({constant(0, n), constant(1, n)});
            const DecodingReport r = report(constants, ChannelKind(ChannelKind::Kind::UIC, t));
            CHECK(r.U == bound_uic(n, 2, t));
        }

    CHECK_THROWS_AS(report(pair, ChannelKind(ChannelKind::Kind::UDC, 2)), std::domain_error);
}

TEST_CASE("report on VT_0(6) for UBC_2 vanishes") {
    const DecodingReport rep = report(vt_code(VTParams(6, 0)), ChannelKind(ChannelKind::Kind::UBC, 2));
    for (const CodewordStats& row : rep.per_codeword) CHECK(row.f == 0);
    CHECK(rep.W == 0);
    CHECK(rep.U == 0);
}

TEST_CASE("UIC-reachable words are exactly the insertion ball") {
    for (const Word& c : all_words(3, 2)) {
        for (int t = 0; t <= 2; ++t) {
            std::set<Word> reachable;
            std::vector<Symbol> buffer = c.symbols();
            const std::function<void(int)> visit = [&](int step) {
                if (step == t) {
                    reachable.insert(Word(buffer, c.alphabet()));
                    return;
                }
                for (std::size_t pos = 0; pos <= buffer.size(); ++pos)
                    for (int s = 0; s < 2; ++s) {
                        buffer.insert(buffer.begin() + pos, static_cast<Symbol>(s));
                        visit(step + 1);
                        buffer.erase(buffer.begin() + pos);
                    }
            };
            visit(0);
            CHECK(reachable == enumerate_insertion_ball(c, t));
        }
    }
}

TEST_CASE("f_uic agrees with the embedding-count route") {
    const Code constants({word("00"), word("11")});
    CHECK(f_uic(word("00"), constants, 2) == f_uic_by_embeddings(word("00"), constants, 2));
    for (const Code& code : random_binary_codes(10, 99)) {
        for (const Word& c : code.words())
            for (int t = 0; t <= 3; ++t)
                CHECK(f_uic(c, code, t) == f_uic_by_embeddings(c, code, t));
    }
}

TEST_CASE("bounds dominate exact values on random codes") {
    for (const Code& code : random_binary_codes(12, 2024)) {
        const int n = static_cast<int>(code.n());
        for (const Word& c : code.words()) {
            int min_dist = 0;
            for (const Word& other : code.words())
                if (!(other == c)) {
                    const int d = indel_distance(c, other);
                    if (min_dist == 0 || d < min_dist) min_dist = d;
                }
            for (int t = 1; t <= 3; ++t) {
                CHECK(f_usc(c, code, t) <= bound_usc(n, 2, t));
                CHECK(f_uic(c, code, t) <= bound_uic(n, 2, t));
                if (t <= n) CHECK(f_udc(c, code, t) <= bound_udc(n, 2, t, min_dist / 2));
            }
        }
    }
}

TEST_CASE("codewords beside the constant words decode to zero at t = n-1") {
    // binary codes with {0_n, 1_n} and |C| >= 3
    for (int n : {3, 4}) {
        const Code code({constant(0, n), constant(1, n),
                         word(std::string(1, '1') + std::string(n - 1, '0'))});
        const int t = n - 1;
        Rational u_usc = 0;
        for (const Word& c : code.words()) {
            const Rational fu = f_usc(c, code, t);
            u_usc += fu;
            if (!(c == constant(0, n)) && !(c == constant(1, n))) {
                CHECK(fu == 0);
                CHECK(f_uic(c, code, t) == 0);
            }
        }
        CHECK(report(code, ChannelKind(ChannelKind::Kind::USC, t)).W == 0);
        CHECK(u_usc / 3 <= Rational(1, 3));
    }
}

TEST_CASE("unique supersequence witness") {
    const Code pair({word("01"), word("10")});
    CHECK(has_unique_supersequence_witness(pair, 3) == word("01"));
    CHECK(has_unique_supersequence_witness(Code({word("0110")}), 2) == word("0110"));
    const Code vt6 = vt_code(VTParams(6, 0));
    for (int t = 1; t <= 4; ++t) {
        const Word witness = has_unique_supersequence_witness(vt6, t);  // throws if not unique
        std::vector<Symbol> symbols = witness.symbols();
        symbols.insert(symbols.end(), t, symbols.back());
        const Word supersequence(symbols, witness.alphabet());
        for (const Word& other : vt6.words())
            if (!(other == witness)) CHECK_FALSE(is_subsequence(other, supersequence));
    }
}

TEST_CASE("monte carlo") {
    const Code constants({word("00"), word("11")});
    const ChannelKind uic2(ChannelKind::Kind::UIC, 2);
    const Rational estimate = monte_carlo_f(word("00"), constants, uic2, 100000, 42);
    CHECK(boost::multiprecision::abs(estimate - Rational(3, 4)) < Rational(1, 100));
    CHECK(estimate == monte_carlo_f(word("00"), constants, uic2, 100000, 42));  // deterministic

    const Code del({word("10"), word("00")});
    const Rational udc_est =
        monte_carlo_f(word("10"), del, ChannelKind(ChannelKind::Kind::UDC, 1), 100000, 7);
    CHECK(boost::multiprecision::abs(udc_est - Rational(1, 2)) < Rational(1, 100));

    CHECK(monte_carlo_f(word("00"), Code({word("00")}), uic2, 1000, 3) == 1);
    CHECK_THROWS_AS(monte_carlo_f(word("00"), constants, ChannelKind(ChannelKind::Kind::USC, 2),
                                  1000, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo_f(word("00"), constants, ChannelKind(ChannelKind::Kind::UBC, 1),
                                  1000, 3),
                    std::invalid_argument);
}
