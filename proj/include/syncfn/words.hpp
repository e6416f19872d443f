#pragma once

#include <string>
#include <vector>

namespace syncfn {

/// A digit in some base; machines carry the base, words are plain digit vectors.
using Digit = int;
using Word = std::vector<Digit>;

/// Pair (input word, output word) of a transducer relation.
using WordPair = std::pair<Word, Word>;

inline Word word_reverse(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline Word word_concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Digit words print as plain digit strings for bases up to 10 ("423"),
/// comma-separated above ("12,0,31"). The empty word prints as "".
std::string word_to_string(const Word& w, int base);

/// Inverse of word_to_string; accepts both forms for any base.
Word word_from_string(const std::string& s, int base);

/// Display form used by CLIs and DOT labels: empty word shown as epsilon.
std::string word_display(const Word& w, int base, bool epsilon_as_zero = false);

void check_digits(const Word& w, int base);

} // namespace syncfn
