#include "syncfn/closure.hpp"

#include <stdexcept>

namespace syncfn {

namespace {

std::string memo_key(const Word& w) {
    std::string key;
    key.reserve(w.size());
    for (Digit d : w) key.push_back(static_cast<char>('0' + d));
    return key;
}

} // namespace

ClosureMachine::ClosureMachine(int base, int d, Digit probe, FabdParams params, bool accel)
    : base_(base), d_(d), probe_(probe), params_(params), accel_(accel),
      memo_(std::make_unique<Memo>()) {}

ClosureMachine ClosureMachine::fabd(const FabdParams& params) {
    require_prefix_params(params);
    return ClosureMachine(params.a * params.d, params.d, params.b * params.d, params, false);
}

ClosureMachine ClosureMachine::accel(int a, int b) {
    require_accel_params(a, b);
    return ClosureMachine(a, 2, b, {a, b, 2}, true);
}

std::pair<Digit, Word> ClosureMachine::step(const Word& state, Digit input) const {
    if (input < 0 || input >= base_) throw std::invalid_argument("input digit out of range");
    Word next(state.size(), 0);
    Digit carry = input;
    for (std::size_t layer = 0; layer < state.size(); ++layer) {
        int value = state[layer] * base_ + carry;
        carry = value / d_;
        next[layer] = value % d_;
    }
    return {carry, std::move(next)};
}

std::optional<Word> ClosureMachine::memo_lookup(const Word& state) const {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->entries.find(memo_key(state));
    if (it == memo_->entries.end()) return std::nullopt;
    memo_->order.splice(memo_->order.begin(), memo_->order, it->second.second);
    return it->second.first;
}

void ClosureMachine::memo_store(const Word& state, const Word& value) const {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    std::string key = memo_key(state);
    if (memo_->entries.count(key)) return;
    memo_->order.push_front(state);
    memo_->entries.emplace(std::move(key), std::pair{value, memo_->order.begin()});
    while (memo_->entries.size() > memo_->budget) {
        memo_->entries.erase(memo_key(memo_->order.back()));
        memo_->order.pop_back();
    }
}

std::size_t ClosureMachine::memo_budget() const {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    return memo_->budget;
}

void ClosureMachine::set_memo_budget(std::size_t entries) {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->budget = entries == 0 ? 1 : entries;
    while (memo_->entries.size() > memo_->budget) {
        memo_->entries.erase(memo_key(memo_->order.back()));
        memo_->order.pop_back();
    }
}

Word ClosureMachine::terminal(const Word& state) const {
    check_digits(state, d_);

    // Unfold the recurrence iteratively: each round strips a leading zero or
    // emits one digit and shortens the state, until the empty word or a memo
    // hit. `emitted` collects the digits in order.
    Word emitted;
    std::vector<std::pair<Word, std::size_t>> trail; // (visited state, digits emitted before it)
    Word cur = state;
    Word tail;
    while (true) {
        if (cur.empty()) break;
        if (auto hit = memo_lookup(cur)) {
            tail = std::move(*hit);
            break;
        }
        trail.emplace_back(cur, emitted.size());
        if (cur.front() == 0) {
            cur.erase(cur.begin());
        } else {
            auto [digit, successor] = step(cur, probe_);
            if (successor.front() != 0)
                throw std::logic_error("terminal recurrence violated: probe successor of " +
                                       word_to_string(cur, d_) + " does not start with 0");
            emitted.push_back(digit);
            cur.assign(successor.begin() + 1, successor.end());
        }
    }

    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        Word value(emitted.begin() + it->second, emitted.end());
        value = word_concat(std::move(value), tail);
        memo_store(it->first, value);
    }
    Word result = std::move(emitted);
    return word_concat(std::move(result), tail);
}

Word ClosureMachine::eval_iterations(const Word& u, int n) const {
    if (n < 0) throw std::invalid_argument("iteration count must be nonnegative");
    Word state(n, 0);
    Word out;
    out.reserve(u.size());
    for (Digit a : u) {
        auto [digit, next] = step(state, a);
        out.push_back(digit);
        state = std::move(next);
    }
    return word_concat(std::move(out), terminal(state));
}

Integer ClosureMachine::eval_integer(const Integer& k, int n) const {
    return decode_msd(eval_iterations(encode_msd(k, base_), n), base_);
}

PrefixSeq ClosureMachine::section_machine(int n, std::size_t state_limit) const {
    const std::uint64_t size = checked_power_size(d_, n, state_limit);
    std::vector<std::string> names;
    names.reserve(size);
    std::vector<Word> words;
    words.reserve(size);
    for (std::uint64_t k = 0; k < size; ++k) {
        Word w = encode_lsd(Integer(static_cast<unsigned long>(k)), std::max(d_, 2));
        w.resize(n, 0);
        words.push_back(w);
        names.push_back(n == 0 ? "ε" : word_to_string(w, d_));
    }

    std::vector<SeqTransition> moves;
    std::map<StateId, Word> terminal_map;
    for (std::uint64_t k = 0; k < size; ++k) {
        for (Digit b = 0; b < base_; ++b) {
            auto [digit, next] = step(words[k], b);
            std::uint64_t target = decode_lsd(next, std::max(d_, 2)).get_ui();
            moves.push_back({static_cast<StateId>(k), b, {digit}, static_cast<StateId>(target)});
        }
        terminal_map[static_cast<StateId>(k)] = terminal(words[k]);
    }
    return PrefixSeq::make(SequentialTransducer::make(base_, base_, std::move(names), 0,
                                                      std::move(terminal_map), std::move(moves)));
}

Transducer ClosureMachine::section_export(int n, std::size_t state_limit) const {
    const std::uint64_t size = checked_power_size(d_, n, state_limit);
    Transducer t;
    t.input_base = t.output_base = base_;

    std::vector<Word> words;
    words.reserve(size);
    for (std::uint64_t k = 0; k < size; ++k) {
        Word w = encode_lsd(Integer(static_cast<unsigned long>(k)), std::max(d_, 2));
        w.resize(n, 0);
        words.push_back(w);
        t.state_names.push_back(n == 0 ? "ε" : word_to_string(w, d_));
    }
    // Targets of the terminal transitions live in the adjacent smaller
    // section.
    const std::uint64_t below = n == 0 ? 0 : size / d_;
    for (std::uint64_t k = 0; k < below; ++k) {
        Word w = encode_lsd(Integer(static_cast<unsigned long>(k)), std::max(d_, 2));
        w.resize(n - 1, 0);
        t.state_names.push_back(n - 1 == 0 ? "ε" : word_to_string(w, d_));
    }
    auto lower_id = [&](const Word& w) {
        return static_cast<StateId>(size + decode_lsd(w, std::max(d_, 2)).get_ui());
    };

    t.initial = {0};
    for (std::uint64_t k = 0; k < size; ++k) {
        for (Digit b = 0; b < base_; ++b) {
            auto [digit, next] = step(words[k], b);
            std::uint64_t target = decode_lsd(next, std::max(d_, 2)).get_ui();
            t.transitions.push_back(
                {static_cast<StateId>(k), b, digit, static_cast<StateId>(target)});
        }
        if (n == 0) continue;
        const Word& w = words[k];
        Word tail(w.begin() + 1, w.end());
        if (w.front() == 0) {
            t.transitions.push_back({static_cast<StateId>(k), std::nullopt, std::nullopt, lower_id(tail)});
        } else {
            auto [digit, successor] = step(w, probe_);
            Word lower(successor.begin() + 1, successor.end());
            t.transitions.push_back({static_cast<StateId>(k), std::nullopt, digit, lower_id(lower)});
        }
    }
    return t;
}

Integer ClosureMachine::iterate(const Integer& k, int n) const {
    return accel_ ? oracle_f_accel_iter(params_.a, params_.b, k, n)
                  : oracle_f_iter(params_, k, n);
}

std::vector<CycleHit> ClosureMachine::find_cycles(int n, const Integer& bound,
                                                  std::size_t witness_max_len) const {
    if (n < 1 || bound < 1) throw std::invalid_argument("need n >= 1 and bound >= 1");
    std::vector<CycleHit> hits;
    for (Integer k = 0; k < bound; ++k) {
        if (eval_integer(k, n) != k) continue;
        CycleHit hit;
        hit.value = k;
        Integer v = k;
        hit.orbit.push_back(v);
        for (int i = 0; i < n; ++i) {
            v = iterate(v, 1);
            hit.orbit.push_back(v);
        }

        // Path-form witness: input uv, output 0^|v| u, v the terminal word
        // of the end state.
        Word input = encode_msd(k, base_);
        if (input.size() <= witness_max_len) {
            Word state(n, 0);
            Word output;
            for (Digit a : input) {
                auto [digit, next] = step(state, a);
                output.push_back(digit);
                state = std::move(next);
            }
            Word v_word = terminal(state);
            if (v_word.size() <= input.size()) {
                Word u_word(input.begin(), input.end() - v_word.size());
                bool suffix_matches =
                    std::equal(v_word.begin(), v_word.end(), input.end() - v_word.size());
                Word rotated(v_word.size(), 0);
                rotated = word_concat(std::move(rotated), u_word);
                if (suffix_matches && output == rotated)
                    hit.witness = CycleWitness{std::move(u_word), std::move(v_word), std::move(output)};
            }
        }
        hits.push_back(std::move(hit));
    }
    return hits;
}

} // namespace syncfn
