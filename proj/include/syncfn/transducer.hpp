#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syncfn/words.hpp"

namespace syncfn {

using StateId = std::size_t;

/// Transition label letter: a digit or the empty symbol.
using OptLetter = std::optional<Digit>;

struct Transition {
    StateId src;
    OptLetter in;
    OptLetter out;
    StateId dst;

    auto operator<=>(const Transition&) const = default;
};

/// A finite 2-automaton: transitions labeled by pairs of optional letters,
/// several initial and final states. Realizes a binary word relation.
/// Alphabets are contiguous digit ranges 0..base-1.
///
/// Values are immutable after construction; all operations return new
/// machines and may run concurrently on shared inputs.
struct Transducer {
    int input_base = 2;
    int output_base = 2;
    std::vector<std::string> state_names; // index is the StateId
    std::vector<StateId> initial;
    std::vector<StateId> final;
    std::vector<Transition> transitions;

    std::size_t num_states() const { return state_names.size(); }

    bool operator==(const Transducer&) const = default;

    /// Checks bases, id ranges, letter ranges and display-name uniqueness.
    void validate() const;
};

/// One state "0", initial and final, loops a/a for every digit: the identity
/// relation on words over the base.
Transducer identity_transducer(int base);

/// All pairs (u, v) with |u| <= max_input_len, |v| <= max_output_len labeling
/// an accepting path. Breadth-first search over (state, consumed input,
/// produced output) configurations; both tapes are bounded independently
/// because epsilon transitions decouple the lengths.
std::set<WordPair> enumerate_relation(const Transducer& t, std::size_t max_input_len,
                                      std::size_t max_output_len);

/// Swaps input and output of every transition: realizes the converse relation.
Transducer inverse(const Transducer& t);

/// Swaps initial and final states and reverses every transition: realizes the
/// componentwise word-reversal of the relation.
Transducer mirror(const Transducer& t);

/// Product machine over Q x Q' with the three transition families: t moves
/// alone on epsilon-output, t2 moves alone on epsilon-input, and both move
/// on a shared middle letter. Requires t.output_base == t2.input_base.
Transducer compose(const Transducer& t, const Transducer& t2);

/// n-fold relational composition. power(t, 0) is the one-state identity
/// machine; states of power(t, n) carry flattened tuple display names.
/// Requires input and output base equal and n >= 0.
Transducer power(const Transducer& t, int n);

/// Disjoint union (states renamed apart as needed): the union of the two
/// relations. Requires equal bases.
Transducer union_of(const Transducer& t, const Transducer& t2);

/// Finite automaton over output digits: the words producible from one state
/// through epsilon-input transitions into a final state. Queried only for
/// membership and bounded enumeration.
struct TerminalLanguage {
    int base = 2;
    std::size_t num_states = 0;
    StateId start = 0;
    std::vector<bool> final;
    std::vector<std::tuple<StateId, OptLetter, StateId>> edges;

    bool empty() const;
    bool contains(const Word& v) const;
    std::set<Word> enumerate(std::size_t max_len) const;
};

/// Terminal-form machine: no epsilon-input transitions, word outputs, and a
/// terminal language per final state appended at acceptance.
struct TerminalFormTransducer {
    int input_base = 2;
    int output_base = 2;
    std::vector<std::string> state_names;
    std::vector<StateId> initial;
    std::vector<std::tuple<StateId, Digit, Word, StateId>> transitions;
    std::vector<std::optional<TerminalLanguage>> terminal; // per state; nullopt = non-final
};

/// Conversion to terminal form: letter transitions absorb the epsilon-input
/// output words that precede them, and the terminal language of q collects
/// every word leading from q to a final state by epsilon-input moves. The
/// realized relation is unchanged.
///
/// Throws if an epsilon-input cycle produces output on the way into a letter
/// transition (the absorbed word set would be infinite).
TerminalFormTransducer to_terminal_form(const Transducer& t);

std::set<WordPair> enumerate_relation(const TerminalFormTransducer& t, std::size_t max_input_len,
                                      std::size_t max_output_len);

} // namespace syncfn
