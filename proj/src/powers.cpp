#include "syncfn/powers.hpp"

#include <stdexcept>
#include <string>

namespace syncfn {

namespace {

// Length-n reverse (least significant digit first) base-d name of k.
std::string section_state_name(std::uint64_t k, int d, int n) {
    if (n == 0) return "ε";
    Word w(n, 0);
    for (int i = 0; i < n; ++i) {
        w[i] = static_cast<Digit>(k % d);
        k /= d;
    }
    return word_to_string(w, d);
}

// Zero-pads the canonical word of `value` on the left to `len` digits;
// throws if the canonical form is already longer (that would falsify the
// terminal-word length law).
Word padded_terminal(const Integer& value, int base, int len) {
    Word w = encode_msd(value, base);
    if (static_cast<int>(w.size()) > len)
        throw std::logic_error("terminal word longer than its counter: " + word_to_string(w, base) +
                               " does not fit in " + std::to_string(len) + " digits");
    Word padded(len - w.size(), 0);
    return word_concat(std::move(padded), w);
}

} // namespace

int eta(int a, int b, int n, const Integer& q) {
    Integer v = q;
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (v % 2 != 0) ++count;
        v = oracle_f_accel(a, b, v);
    }
    return count;
}

int mu(const FabdParams& params, int n, const Integer& q) {
    Integer v = q;
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (v % params.d != 0) ++count;
        v = oracle_f(params, v);
    }
    return count;
}

std::size_t checked_power_size(int d, int n, std::size_t state_limit) {
    if (d < 1 || n < 0) throw std::invalid_argument("need d > 0 and n >= 0");
    std::size_t size = 1;
    for (int i = 0; i < n; ++i) {
        if (size > state_limit / d)
            throw std::invalid_argument("power section needs " + std::to_string(d) + "^" +
                                        std::to_string(n) + " states, above the limit of " +
                                        std::to_string(state_limit));
        size *= d;
    }
    if (size > state_limit)
        throw std::invalid_argument("power section exceeds the state limit");
    return size;
}

SequentialTransducer division_power(int a, int d, int n, std::size_t state_limit) {
    if (a <= 1) throw std::invalid_argument("division needs base a > 1");
    const std::uint64_t size = checked_power_size(d, n, state_limit);
    std::vector<std::string> names;
    names.reserve(size);
    for (std::uint64_t k = 0; k < size; ++k) names.push_back(section_state_name(k, d, n));

    std::vector<SeqTransition> moves;
    moves.reserve(size * a);
    for (std::uint64_t k = 0; k < size; ++k)
        for (Digit b = 0; b < a; ++b) {
            std::uint64_t value = k * static_cast<std::uint64_t>(a) + b;
            moves.push_back({static_cast<StateId>(k), b, {static_cast<Digit>(value / size)},
                             static_cast<StateId>(value % size)});
        }
    return SequentialTransducer::make(a, a, std::move(names), 0, {{0, {}}}, std::move(moves));
}

PrefixSeq explicit_power_accel(int a, int b, int n, std::size_t state_limit) {
    require_accel_params(a, b);
    SequentialTransducer div = division_power(a, 2, n, state_limit);
    std::map<StateId, Word> terminal;
    for (StateId i = 0; i < div.num_states(); ++i) {
        Integer value(static_cast<unsigned long>(i));
        terminal[i] = padded_terminal(oracle_f_accel_iter(a, b, value, n), a, eta(a, b, n, value));
    }
    return PrefixSeq::make(SequentialTransducer::make(a, a, div.state_names(), 0,
                                                      std::move(terminal), div.transitions()));
}

PrefixSeq explicit_power(const FabdParams& params, int n, std::size_t state_limit) {
    require_prefix_params(params);
    const int base = params.a * params.d;
    SequentialTransducer div = division_power(base, params.d, n, state_limit);
    std::map<StateId, Word> terminal;
    for (StateId i = 0; i < div.num_states(); ++i) {
        Integer value(static_cast<unsigned long>(i));
        terminal[i] =
            padded_terminal(oracle_f_iter(params, value, n), base, mu(params, n, value));
    }
    return PrefixSeq::make(SequentialTransducer::make(base, base, div.state_names(), 0,
                                                      std::move(terminal), div.transitions()));
}

PrefixSeq composed_power(const FabdParams& params, int n) {
    PrefixSeq acc = prefix_identity(params.a * params.d);
    for (int i = 0; i < n; ++i) acc = prefix_compose(acc, prefix_fabd(params));
    return acc;
}

PrefixSeq composed_power_accel(int a, int b, int n) {
    PrefixSeq acc = prefix_identity(a);
    for (int i = 0; i < n; ++i) acc = prefix_compose(acc, prefix_accel(a, b));
    return acc;
}

namespace {

template <typename Iterate>
PowerEquivalenceReport sweep(const PrefixSeq& explicit_machine, const PrefixSeq& composed_machine,
                             int base, int n, const Integer& bound, Iterate iterate) {
    PowerEquivalenceReport report;
    report.n = n;
    report.bound = bound;
    for (Integer k = 0; k < bound; ++k) {
        Word u = encode_msd(k, base);
        auto via_explicit = apply_prefix(explicit_machine, u);
        auto via_composed = apply_prefix(composed_machine, u);
        Integer expected = iterate(k);
        Integer got_explicit = via_explicit ? decode_msd(*via_explicit, base) : Integer(-1);
        Integer got_composed = via_composed ? decode_msd(*via_composed, base) : Integer(-1);
        if (got_explicit != expected || got_composed != expected)
            report.mismatches.push_back({k, expected, got_explicit, got_composed});
    }
    return report;
}

} // namespace

PowerEquivalenceReport check_power_equivalence(const FabdParams& params, int n, const Integer& bound,
                                               std::size_t state_limit) {
    return sweep(explicit_power(params, n, state_limit), composed_power(params, n),
                 params.a * params.d, n, bound,
                 [&](const Integer& k) { return oracle_f_iter(params, k, n); });
}

PowerEquivalenceReport check_power_equivalence_accel(int a, int b, int n, const Integer& bound,
                                                     std::size_t state_limit) {
    return sweep(explicit_power_accel(a, b, n, state_limit), composed_power_accel(a, b, n), a, n,
                 bound, [&](const Integer& k) { return oracle_f_accel_iter(a, b, k, n); });
}

} // namespace syncfn
