#include "syncfn/sequential.hpp"

#include <stdexcept>

namespace syncfn {

SequentialTransducer SequentialTransducer::make(int input_base, int output_base,
                                                std::vector<std::string> state_names,
                                                StateId initial, std::map<StateId, Word> terminal,
                                                std::vector<SeqTransition> transitions) {
    if (input_base < 1 || output_base < 1) throw std::invalid_argument("base must be positive");
    SequentialTransducer m;
    m.input_base_ = input_base;
    m.output_base_ = output_base;
    m.state_names_ = std::move(state_names);
    m.initial_ = initial;
    m.terminal_ = std::move(terminal);
    m.transitions_ = std::move(transitions);

    const std::size_t n = m.state_names_.size();
    if (initial >= n) throw std::invalid_argument("initial state out of range");
    for (const auto& [q, w] : m.terminal_) {
        if (q >= n) throw std::invalid_argument("terminal state out of range");
        check_digits(w, output_base);
    }
    m.step_index_.assign(n * input_base, -1);
    for (std::size_t i = 0; i < m.transitions_.size(); ++i) {
        const SeqTransition& tr = m.transitions_[i];
        if (tr.src >= n || tr.dst >= n) throw std::invalid_argument("transition endpoint out of range");
        if (tr.in < 0 || tr.in >= input_base) throw std::invalid_argument("input letter out of range");
        check_digits(tr.out, output_base);
        auto& slot = m.step_index_[tr.src * input_base + tr.in];
        if (slot != -1) {
            const SeqTransition& other = m.transitions_[slot];
            if (other.out != tr.out || other.dst != tr.dst)
                throw std::invalid_argument("transition set is not input-deterministic");
            continue; // duplicate of an identical transition
        }
        slot = static_cast<std::int64_t>(i);
    }
    return m;
}

const SeqTransition* SequentialTransducer::step(StateId s, Digit a) const {
    if (a < 0 || a >= input_base_) return nullptr;
    auto idx = step_index_[s * input_base_ + a];
    return idx < 0 ? nullptr : &transitions_[idx];
}

std::optional<std::pair<StateId, Word>> SequentialTransducer::run(StateId from, const Word& u) const {
    StateId s = from;
    Word out;
    for (Digit a : u) {
        const SeqTransition* tr = step(s, a);
        if (!tr) return std::nullopt;
        out = word_concat(std::move(out), tr->out);
        s = tr->dst;
    }
    return std::pair{s, std::move(out)};
}

std::optional<Word> apply(const SequentialTransducer& s, const Word& u) {
    auto end = s.run(s.initial(), u);
    if (!end) return std::nullopt;
    auto it = s.terminal().find(end->first);
    if (it == s.terminal().end()) return std::nullopt;
    return word_concat(std::move(end->second), it->second);
}

SequentialTransducer compose_sequential(const SequentialTransducer& s,
                                        const SequentialTransducer& s2) {
    if (s.output_base() != s2.input_base()) throw std::invalid_argument("incompatible alphabets");
    const std::size_t n2 = s2.num_states();
    auto pair_id = [n2](StateId p, StateId q) { return p * n2 + q; };

    std::vector<std::string> names;
    names.reserve(s.num_states() * n2);
    for (const auto& a : s.state_names())
        for (const auto& b : s2.state_names()) names.push_back("(" + a + "," + b + ")");

    std::vector<SeqTransition> moves;
    for (const auto& tr : s.transitions())
        for (StateId p2 = 0; p2 < n2; ++p2)
            if (auto end = s2.run(p2, tr.out))
                moves.push_back({pair_id(tr.src, p2), tr.in, end->second, pair_id(tr.dst, end->first)});

    std::map<StateId, Word> terminal;
    for (const auto& [q, w] : s.terminal())
        for (StateId p2 = 0; p2 < n2; ++p2)
            if (auto end = s2.run(p2, w)) {
                auto it = s2.terminal().find(end->first);
                if (it != s2.terminal().end())
                    terminal[pair_id(q, p2)] = word_concat(end->second, it->second);
            }

    return SequentialTransducer::make(s.input_base(), s2.output_base(), std::move(names),
                                      pair_id(s.initial(), s2.initial()), std::move(terminal),
                                      std::move(moves));
}

bool check_input_deterministic(const std::vector<SeqTransition>& transitions) {
    std::map<std::pair<StateId, Digit>, const SeqTransition*> seen;
    for (const auto& tr : transitions) {
        auto [it, fresh] = seen.try_emplace({tr.src, tr.in}, &tr);
        if (!fresh && (it->second->out != tr.out || it->second->dst != tr.dst)) return false;
    }
    return true;
}

bool check_input_complete(const std::vector<SeqTransition>& transitions, int base,
                          std::size_t num_states) {
    std::vector<bool> covered(num_states * base, false);
    for (const auto& tr : transitions)
        if (tr.src < num_states && tr.in >= 0 && tr.in < base) covered[tr.src * base + tr.in] = true;
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool check_input_complete(const SequentialTransducer& s) {
    return check_input_complete(s.transitions(), s.input_base(), s.num_states());
}

Transducer to_core(const SequentialTransducer& s) {
    Transducer t;
    t.input_base = s.input_base();
    t.output_base = s.output_base();
    t.state_names = s.state_names();
    t.initial = {s.initial()};

    auto fresh = [&t]() {
        t.state_names.push_back("#" + std::to_string(t.state_names.size()));
        return t.state_names.size() - 1;
    };
    auto chain = [&](StateId from, OptLetter in, const Word& out, StateId to) {
        // One transition carrying `in`, then epsilon-input steps for the rest
        // of the output word.
        if (out.size() <= 1) {
            t.transitions.push_back({from, in, out.empty() ? OptLetter{} : OptLetter{out[0]}, to});
            return;
        }
        StateId cur = from;
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            StateId next = fresh();
            t.transitions.push_back({cur, i == 0 ? in : OptLetter{}, out[i], next});
            cur = next;
        }
        t.transitions.push_back({cur, std::nullopt, out.back(), to});
    };

    for (const auto& tr : s.transitions()) chain(tr.src, tr.in, tr.out, tr.dst);

    StateId accept = fresh();
    t.final = {accept};
    for (const auto& [q, w] : s.terminal()) chain(q, std::nullopt, w, accept);
    return t;
}

} // namespace syncfn
