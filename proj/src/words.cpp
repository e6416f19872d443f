#include "syncfn/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace syncfn {

std::string word_to_string(const Word& w, int base) {
    std::ostringstream out;
    if (base <= 10) {
        for (Digit d : w) out << d;
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << ',';
            out << w[i];
        }
    }
    return out.str();
}

Word word_from_string(const std::string& s, int base) {
    Word w;
    if (s.empty()) return w;
    if (base > 10 || s.find(',') != std::string::npos) {
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty digit in word '" + s + "'");
            w.push_back(std::stoi(tok));
        }
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit character in word '" + s + "'");
            w.push_back(c - '0');
        }
    }
    check_digits(w, base);
    return w;
}

std::string word_display(const Word& w, int base, bool epsilon_as_zero) {
    if (w.empty()) return epsilon_as_zero ? "0" : "ε";
    return word_to_string(w, base);
}

void check_digits(const Word& w, int base) {
    for (Digit d : w)
        if (d < 0 || d >= base)
            throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                        std::to_string(base));
}

} // namespace syncfn
