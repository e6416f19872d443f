#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syncfn/sequential.hpp"
#include "syncfn/transducer.hpp"

namespace syncfn {

/// Letter-to-letter sequential transducer plus terminal words: realizes a
/// length-increasing function (|output| = |input| + |terminal word|).
class PrefixSeq {
  public:
    static PrefixSeq make(SequentialTransducer m);

    const SequentialTransducer& machine() const { return m_; }

  private:
    explicit PrefixSeq(SequentialTransducer m) : m_(std::move(m)) {}
    SequentialTransducer m_;
};

struct SuffixTransition {
    StateId src;
    Digit in;
    OptLetter out;
    StateId dst;

    auto operator<=>(const SuffixTransition&) const = default;
};

/// Input-deterministic machine whose epsilon-output transitions occur only at
/// the start of paths (a letter output is never followed by an epsilon
/// output): realizes a length-decreasing function. The terminal function is
/// reduced to a final state set.
class SuffixSeq {
  public:
    static SuffixSeq make(int input_base, int output_base, std::vector<std::string> state_names,
                          StateId initial, std::vector<StateId> final,
                          std::vector<SuffixTransition> transitions);

    int input_base() const { return input_base_; }
    int output_base() const { return output_base_; }
    std::size_t num_states() const { return state_names_.size(); }
    const std::vector<std::string>& state_names() const { return state_names_; }
    StateId initial() const { return initial_; }
    const std::vector<StateId>& final() const { return final_; }
    bool is_final(StateId s) const;
    const std::vector<SuffixTransition>& transitions() const { return transitions_; }

    const SuffixTransition* step(StateId s, Digit a) const;

  private:
    SuffixSeq() = default;

    int input_base_ = 2;
    int output_base_ = 2;
    std::vector<std::string> state_names_;
    StateId initial_ = 0;
    std::vector<StateId> final_;
    std::vector<SuffixTransition> transitions_;
    std::vector<std::int64_t> step_index_;
};

/// One-state identity machines, neutral for the compositions below.
PrefixSeq prefix_identity(int base);
SuffixSeq suffix_identity(int base);

/// Pairwise product through a shared middle letter; the terminal word of a
/// pair replays the left terminal word through the right machine. Quadratic.
PrefixSeq prefix_compose(const PrefixSeq& p, const PrefixSeq& p2);

/// Synchronization product keeping transitions with identical labels;
/// terminal defined where the terminal words agree. Realizes set
/// intersection of the relations.
PrefixSeq prefix_intersect(const PrefixSeq& p, const PrefixSeq& p2);

/// State set Q + QxQ': the pair part tracks both machines while labels
/// agree, escape transitions jump to the plain copy of Q as soon as the
/// right machine cannot follow. Realizes set difference. Unreachable states
/// are kept so state counts match the construction.
PrefixSeq prefix_difference(const PrefixSeq& p, const PrefixSeq& p2);

SuffixSeq suffix_compose(const SuffixSeq& s, const SuffixSeq& s2);
SuffixSeq suffix_intersect(const SuffixSeq& s, const SuffixSeq& s2);
SuffixSeq suffix_difference(const SuffixSeq& s, const SuffixSeq& s2);

/// Drops states unreachable from the initial state and compacts ids. The
/// constructions above keep unreachable states so their sizes match the
/// construction formulas; pruning is strictly opt-in.
SequentialTransducer prune_unreachable(const SequentialTransducer& s);
PrefixSeq prune_unreachable(const PrefixSeq& p);
SuffixSeq prune_unreachable(const SuffixSeq& s);

std::optional<Word> apply_prefix(const PrefixSeq& p, const Word& u);

/// Deterministic run; a run ending non-final retries with up to `pad_limit`
/// trailing zero digits appended to the input (reverse representations
/// tolerate trailing zeros). Absent if never final.
std::optional<Word> apply_suffix(const SuffixSeq& s, const Word& u, int pad_limit);

/// Pad digits needed to flush a multiply-by-a carry in base d.
int default_pad_limit(int a, int d);

Transducer to_core(const PrefixSeq& p);
Transducer to_core(const SuffixSeq& s);

} // namespace syncfn
