#ifndef INDEL_CODEFILE_HPP
#define INDEL_CODEFILE_HPP

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "indel/word.hpp"

namespace indel {

// Code file format: line 1 is `q=<int> n=<int>`; each subsequent non-empty
// line is one codeword as n base-q digits. Duplicate lines are an error.
inline Code parse_code_file(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("code file line 1: missing header");
    const auto trim = [](std::string s) {
        const auto first = s.find_first_not_of(" \t\r");
        const auto last = s.find_last_not_of(" \t\r");
        return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
    };

    long long q = 0, n = -1;
    {
        const auto parse_int = [](const std::string& text) {
            std::size_t consumed = 0;
            const long long value = std::stoll(text, &consumed);
            if (consumed != text.size()) throw std::invalid_argument("trailing characters");
            return value;
        };
        std::istringstream header(trim(line));
        std::string token;
        bool have_q = false, have_n = false;
        while (header >> token) {
            try {
                if (token.rfind("q=", 0) == 0) {
                    q = parse_int(token.substr(2));
                    have_q = true;
                } else if (token.rfind("n=", 0) == 0) {
                    n = parse_int(token.substr(2));
                    have_n = true;
                } else {
                    throw std::invalid_argument("");
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("code file line 1: expected header `q=<int> n=<int>`");
            }
        }
        if (!have_q || !have_n)
            throw std::invalid_argument("code file line 1: expected header `q=<int> n=<int>`");
    }
    if (q < 2 || q > 10)
        throw std::invalid_argument("code file line 1: q must be in [2, 10] for digit form");
    if (n < 1) throw std::invalid_argument("code file line 1: n must be >= 1");

    const Alphabet alphabet(static_cast<int>(q));
    std::vector<Word> words;
    std::set<std::string> seen;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string digits = trim(line);
        if (digits.empty()) continue;
        if (static_cast<long long>(digits.size()) != n)
            throw std::invalid_argument("code file line " + std::to_string(line_no) +
                                        ": codeword length " + std::to_string(digits.size()) +
                                        ", expected " + std::to_string(n));
        if (!seen.insert(digits).second)
            throw std::invalid_argument("code file line " + std::to_string(line_no) +
                                        ": duplicate codeword " + digits);
        try {
            words.push_back(Word::from_digits(digits, alphabet));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("code file line " + std::to_string(line_no) + ": " +
                                        e.what());
        }
    }
    if (words.empty()) throw std::invalid_argument("code file: no codewords");
    return Code(std::move(words));
}

inline Code load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file: " + path);
    return parse_code_file(in);
}

}  // namespace indel

#endif
