#pragma once
/**
 * Braid words.
 *
 * A braid word on b strands is a sequence of signed generator indices:
 * letter +i is the positive crossing of strands i and i+1, letter -i its
 * inverse (1 <= i < b).  Words are read top to bottom; strand positions are
 * numbered left to right starting at 1.
 */

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace homfly {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }
};

struct BraidParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Parse a whitespace-separated list of signed generator indices, e.g.
 * "1 1 1" or "1 -2".  The strand count is 1 + max|index| (minimum 1); the
 * empty word is the trivial one-strand braid (an unknot), not an error.
 */
inline BraidWord parse_braid(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string tok;
    int max_index = 0;
    while (in >> tok) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw BraidParseError("braid word: not an integer: '" + tok + "'");
        }
        if (pos != tok.size())
            throw BraidParseError("braid word: not an integer: '" + tok + "'");
        if (v == 0)
            throw BraidParseError("braid word: generator index 0 is invalid");
        w.letters.push_back(v);
        max_index = std::max(max_index, v < 0 ? -v : v);
    }
    w.strands = 1 + max_index;
    if (w.letters.empty()) w.strands = 1;
    return w;
}

inline std::string braid_to_string(const BraidWord& w) {
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w.letters[i]);
    }
    return s;
}

/// The mirror word: every crossing sign flipped.
inline BraidWord mirror_word(BraidWord w) {
    for (int& l : w.letters) l = -l;
    return w;
}

/// Conjugation w -> g w g^{-1} by one generator, used for invariance tests.
inline BraidWord conjugate_word(const BraidWord& w, int generator) {
    BraidWord c = w;
    c.letters.insert(c.letters.begin(), generator);
    c.letters.push_back(-generator);
    c.strands = std::max(c.strands, 1 + std::abs(generator));
    return c;
}

/// Positive Markov stabilization: append sigma_b on a fresh strand.
inline BraidWord stabilize_word(const BraidWord& w) {
    BraidWord s = w;
    s.letters.push_back(s.strands);
    s.strands += 1;
    return s;
}

}  // namespace homfly
