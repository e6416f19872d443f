#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syncfn/transducer.hpp"
#include "syncfn/words.hpp"

namespace syncfn {

struct SeqTransition {
    StateId src;
    Digit in;
    Word out;
    StateId dst;

    auto operator<=>(const SeqTransition&) const = default;
};

/// Deterministic-on-input transducer with a unique initial state and a
/// partial word-valued terminal function: the terminal word is appended when
/// the run ends in its domain. Construction rejects non-deterministic
/// transition sets; machines are immutable afterwards, so concurrent
/// evaluation is safe.
class SequentialTransducer {
  public:
    static SequentialTransducer make(int input_base, int output_base,
                                     std::vector<std::string> state_names, StateId initial,
                                     std::map<StateId, Word> terminal,
                                     std::vector<SeqTransition> transitions);

    int input_base() const { return input_base_; }
    int output_base() const { return output_base_; }
    std::size_t num_states() const { return state_names_.size(); }
    const std::vector<std::string>& state_names() const { return state_names_; }
    StateId initial() const { return initial_; }
    const std::map<StateId, Word>& terminal() const { return terminal_; }
    const std::vector<SeqTransition>& transitions() const { return transitions_; }

    /// The unique transition from `s` on letter `a`, if any.
    const SeqTransition* step(StateId s, Digit a) const;

    /// Runs a word from `from`; empty if the run dies.
    std::optional<std::pair<StateId, Word>> run(StateId from, const Word& u) const;

  private:
    SequentialTransducer() = default;

    int input_base_ = 2;
    int output_base_ = 2;
    std::vector<std::string> state_names_;
    StateId initial_ = 0;
    std::map<StateId, Word> terminal_;
    std::vector<SeqTransition> transitions_;
    std::vector<std::int64_t> step_index_; // (state * input_base + digit) -> transition or -1
};

/// Runs the unique input path from the initial state: the concatenated
/// outputs extended by the terminal word of the end state. Absent when the
/// run dies or ends outside dom(terminal).
std::optional<Word> apply(const SequentialTransducer& s, const Word& u);

/// Sequential composition: transition outputs of `s` replay through `s2`,
/// and terminal words of `s` replay through `s2` before appending the
/// terminal word of `s2`. apply(result, u) = apply(s2, apply(s, u)).
SequentialTransducer compose_sequential(const SequentialTransducer& s,
                                        const SequentialTransducer& s2);

/// At most one transition per (state, input letter).
bool check_input_deterministic(const std::vector<SeqTransition>& transitions);

/// At least one transition per (state, input letter), over all states below
/// `num_states`.
bool check_input_complete(const std::vector<SeqTransition>& transitions, int base,
                          std::size_t num_states);

bool check_input_complete(const SequentialTransducer& s);

/// General transducer with the same relation: word outputs expand to chains
/// and terminal words become epsilon-input paths into a fresh final state.
Transducer to_core(const SequentialTransducer& s);

} // namespace syncfn
