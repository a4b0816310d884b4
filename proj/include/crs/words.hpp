#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace crs {

using Letter = std::int32_t;

// A word is a sequence of letter ids of some Alphabet. The empty vector is
// the empty word.
using Word = std::vector<Letter>;

// Finite ordered token set with positive integer weights. The declaration
// order is the alphabet order; letter ids are positions in that order.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::vector<std::string> tokens, std::vector<std::int64_t> weights);

    Letter size() const { return static_cast<Letter>(tokens_.size()); }
    const std::string& token(Letter a) const { return tokens_[static_cast<std::size_t>(a)]; }
    std::int64_t weight(Letter a) const { return weights_[static_cast<std::size_t>(a)]; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }

    // -1 if the token is not declared.
    Letter find(const std::string& token) const;

    std::int64_t max_weight() const;
    std::int64_t min_weight() const;

    bool operator==(const Alphabet& other) const {
        return tokens_ == other.tokens_ && weights_ == other.weights_;
    }

private:
    std::vector<std::string> tokens_;
    std::vector<std::int64_t> weights_;
    std::unordered_map<std::string, Letter> index_;
};

std::int64_t word_weight(const Alphabet& alphabet, const Word& w);

// Renders a word with the alphabet's tokens. Single-character tokens are
// concatenated, longer tokens joined with '.'; the empty word prints "eps".
std::string format_word(const Alphabet& alphabet, const Word& w);

bool is_factor(const Word& needle, const Word& haystack);
bool is_prefix(const Word& prefix, const Word& w);
bool is_suffix(const Word& suffix, const Word& w);
Word concat(const Word& u, const Word& v);
Word word_power(const Word& w, std::size_t n);

// (length, lexicographic by letter id) order; ties cannot occur for distinct words.
bool length_lex_less(const Word& u, const Word& v);

// True iff w is not a proper power. Rejects the empty word.
bool is_primitive(const Word& w);

struct PrimitiveRoot {
    Word root;
    int exponent = 0;
};

// Shortest r and maximal e with r^e = w. Rejects the empty word.
PrimitiveRoot primitive_root(const Word& w);

// True iff u = pq and v = qp for some p, q.
bool are_conjugate(const Word& u, const Word& v);

// True iff letters at distance m agree; vacuously true when m >= |w|.
bool has_period(const Word& w, std::size_t m);

// True iff u occurs in delta^n for some n. Rejects empty delta.
bool is_factor_of_power(const Word& u, const Word& delta);

// The unique minimal set J with K*JK* = K* \ {factors of delta^+}: no element
// of J is a factor of any delta^+, every non-factor contains a J element, and
// J is an antichain under the factor relation. All inputs must be nonempty
// words of length <= n over letters 0..num_letters-1; members of J have
// length <= 2n. Output in length-lex order.
std::vector<Word> minimal_nonfactors(const std::vector<Word>& deltas,
                                     Letter num_letters,
                                     std::size_t n);

// All words of weight <= max_weight in length-lex order.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::int64_t max_weight);

} // namespace crs
