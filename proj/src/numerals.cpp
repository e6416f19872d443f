#include "syncfn/numerals.hpp"

#include <algorithm>
#include <stdexcept>

namespace syncfn {

namespace {
void check_base(int base) {
    if (base <= 1) throw std::invalid_argument("numeral base must be > 1");
}
} // namespace

Word encode_msd(const Integer& n, int base) {
    check_base(base);
    if (n < 0) throw std::invalid_argument("cannot encode a negative integer");
    Word w;
    Integer rest = n;
    while (rest > 0) {
        Integer q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), base);
        w.push_back(static_cast<Digit>(r.get_ui()));
        rest = q;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Integer decode_msd(const Word& u, int base) {
    check_base(base);
    check_digits(u, base);
    Integer n = 0;
    for (Digit d : u) {
        n *= base;
        n += d;
    }
    return n;
}

Word encode_lsd(const Integer& n, int base) {
    return word_reverse(encode_msd(n, base));
}

Integer decode_lsd(const Word& u, int base) {
    return decode_msd(word_reverse(u), base);
}

Word encode(const Integer& n, int base, DigitOrder order) {
    return order == DigitOrder::msd_first ? encode_msd(n, base) : encode_lsd(n, base);
}

Integer decode(const Word& u, int base, DigitOrder order) {
    return order == DigitOrder::msd_first ? decode_msd(u, base) : decode_lsd(u, base);
}

std::set<std::pair<Integer, Integer>> lift_relation(const std::set<WordPair>& word_pairs, int base,
                                                    DigitOrder order) {
    std::set<std::pair<Integer, Integer>> lifted;
    for (const auto& [u, v] : word_pairs) lifted.emplace(decode(u, base, order), decode(v, base, order));
    return lifted;
}

} // namespace syncfn
