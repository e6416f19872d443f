#pragma once

#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "syncfn/powers.hpp"

namespace syncfn {

struct CycleWitness {
    Word prefix;         // u: input word up to the rotation point
    Word terminal_word;  // v: terminal word of the end state, also the input suffix
    Word machine_output; // 0^|v| u, the output along the path
};

struct CycleHit {
    Integer value;
    std::vector<Integer> orbit; // value, f(value), ..., f^n(value) = value
    std::optional<CycleWitness> witness;
};

/// The infinite input-deterministic prefix transducer realizing every power
/// of the map at once: states are digit words below d, section n (words of
/// length n) is the division by d^n in base a*d, and the terminal function
/// is defined by recurrence on the word length. Nothing is materialized up
/// front; transitions cascade digit by digit through the layers, so no
/// arithmetic ever involves d^n.
///
/// step and eval are pure; the terminal memo is a mutex-guarded LRU cache,
/// so concurrent evaluation is safe (duplicate recomputation possible).
class ClosureMachine {
  public:
    /// Sections divide by d^n in base a*d; requires 0 <= b < a != 1, d > 0.
    static ClosureMachine fabd(const FabdParams& params);

    /// Accelerated variant: sections divide by 2^n in base a.
    static ClosureMachine accel(int a, int b);

    int base() const { return base_; }
    int section_arity() const { return d_; }

    /// One letter of input through the section of the state's length:
    /// at each layer solve digit*base + carry_in = carry_out*d + next_digit,
    /// feeding the carry to the next layer. Total on (state, input digit).
    std::pair<Digit, Word> step(const Word& state, Digit input) const;

    /// Terminal word by length recurrence: strip leading zeros; otherwise
    /// feed the probe digit through step, whose successor must start with 0,
    /// prepend the emitted digit and recurse on the shortened state. Memoized.
    Word terminal(const Word& state) const;

    /// Runs u from the all-zero state of section n and appends the terminal
    /// word: the word form of the n-th iterate.
    Word eval_iterations(const Word& u, int n) const;

    /// encode, run, decode: equals the n-th iterate of the underlying map.
    Integer eval_integer(const Integer& k, int n) const;

    /// Section n as a finite prefix machine (states in value order, names the
    /// length-n digit words).
    PrefixSeq section_machine(int n, std::size_t state_limit = kDefaultStateLimit) const;

    /// Section n plus its terminal transitions into section n-1: the edge
    /// 0u -> u is unlabeled (epsilon) and iu -> v carries the digit emitted
    /// by the recurrence. Rendering form of the cone picture.
    Transducer section_export(int n, std::size_t state_limit = kDefaultStateLimit) const;

    /// Every k < bound fixed by the n-th iterate, with its orbit; each hit
    /// carries the path-form witness (input u v mapping to 0^|v| u with v
    /// the terminal word of the end state) when the input word fits the
    /// length limit and the path condition checks out.
    std::vector<CycleHit> find_cycles(int n, const Integer& bound,
                                      std::size_t witness_max_len = 256) const;

    std::size_t memo_budget() const;
    void set_memo_budget(std::size_t entries);

  private:
    ClosureMachine(int base, int d, Digit probe, FabdParams params, bool accel);

    Integer iterate(const Integer& k, int n) const;

    int base_;   // a*d, or a for the accelerated form
    int d_;      // section arity: d, or 2
    Digit probe_; // input digit of the terminal recurrence: b*d, or b
    FabdParams params_;
    bool accel_;

    // LRU memo for terminal words, guarded by a mutex: lookups and inserts
    // are atomic, computation happens outside the lock.
    struct Memo {
        std::mutex mutex;
        std::size_t budget = 1u << 20;
        std::list<Word> order;
        std::unordered_map<std::string, std::pair<Word, std::list<Word>::iterator>> entries;
    };
    std::unique_ptr<Memo> memo_;

    std::optional<Word> memo_lookup(const Word& state) const;
    void memo_store(const Word& state, const Word& value) const;
};

} // namespace syncfn
