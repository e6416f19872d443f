#include "syncfn/synchronized.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace syncfn {

namespace {

void dedupe_names(std::vector<std::string>& names) {
    std::set<std::string> used;
    for (auto& nm : names) {
        while (used.count(nm)) nm += "'";
        used.insert(nm);
    }
}

std::vector<std::string> pair_names(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> names;
    names.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) names.push_back("(" + x + "," + y + ")");
    return names;
}

} // namespace

PrefixSeq PrefixSeq::make(SequentialTransducer m) {
    for (const auto& tr : m.transitions())
        if (tr.out.size() != 1)
            throw std::invalid_argument("prefix machine requires letter-to-letter transitions");
    return PrefixSeq(std::move(m));
}

SuffixSeq SuffixSeq::make(int input_base, int output_base, std::vector<std::string> state_names,
                          StateId initial, std::vector<StateId> final,
                          std::vector<SuffixTransition> transitions) {
    if (input_base < 1 || output_base < 1) throw std::invalid_argument("base must be positive");
    SuffixSeq m;
    m.input_base_ = input_base;
    m.output_base_ = output_base;
    m.state_names_ = std::move(state_names);
    m.initial_ = initial;
    m.final_ = std::move(final);
    m.transitions_ = std::move(transitions);

    const std::size_t n = m.state_names_.size();
    if (initial >= n) throw std::invalid_argument("initial state out of range");
    for (StateId f : m.final_)
        if (f >= n) throw std::invalid_argument("final state out of range");

    m.step_index_.assign(n * input_base, -1);
    for (std::size_t i = 0; i < m.transitions_.size(); ++i) {
        const SuffixTransition& tr = m.transitions_[i];
        if (tr.src >= n || tr.dst >= n) throw std::invalid_argument("transition endpoint out of range");
        if (tr.in < 0 || tr.in >= input_base) throw std::invalid_argument("input letter out of range");
        if (tr.out && (*tr.out < 0 || *tr.out >= output_base))
            throw std::invalid_argument("output letter out of range");
        auto& slot = m.step_index_[tr.src * input_base + tr.in];
        if (slot != -1) {
            const SuffixTransition& other = m.transitions_[slot];
            if (other.out != tr.out || other.dst != tr.dst)
                throw std::invalid_argument("transition set is not input-deterministic");
            continue;
        }
        slot = static_cast<std::int64_t>(i);
    }

    // Initial epsilon-output: a letter output is never followed by an
    // epsilon output.
    for (const auto& t2 : m.transitions_)
        if (!t2.out)
            for (const auto& t1 : m.transitions_)
                if (t1.dst == t2.src && t1.out)
                    throw std::invalid_argument(
                        "suffix machine violates the initial epsilon-output condition");
    return m;
}

bool SuffixSeq::is_final(StateId s) const {
    return std::find(final_.begin(), final_.end(), s) != final_.end();
}

const SuffixTransition* SuffixSeq::step(StateId s, Digit a) const {
    if (a < 0 || a >= input_base_) return nullptr;
    auto idx = step_index_[s * input_base_ + a];
    return idx < 0 ? nullptr : &transitions_[idx];
}

PrefixSeq prefix_identity(int base) {
    std::vector<SeqTransition> moves;
    for (Digit a = 0; a < base; ++a) moves.push_back({0, a, {a}, 0});
    return PrefixSeq::make(
        SequentialTransducer::make(base, base, {"ε"}, 0, {{0, {}}}, std::move(moves)));
}

SuffixSeq suffix_identity(int base) {
    std::vector<SuffixTransition> moves;
    for (Digit a = 0; a < base; ++a) moves.push_back({0, a, a, 0});
    return SuffixSeq::make(base, base, {"ε"}, 0, {0}, std::move(moves));
}

PrefixSeq prefix_compose(const PrefixSeq& p, const PrefixSeq& p2) {
    const SequentialTransducer& t = p.machine();
    const SequentialTransducer& t2 = p2.machine();
    if (t.output_base() != t2.input_base()) throw std::invalid_argument("incompatible alphabets");
    const std::size_t n2 = t2.num_states();
    auto pair_id = [n2](StateId a, StateId b) { return a * n2 + b; };

    std::vector<SeqTransition> moves;
    for (const auto& tr : t.transitions())
        for (StateId q2 = 0; q2 < n2; ++q2)
            if (const SeqTransition* tr2 = t2.step(q2, tr.out[0]))
                moves.push_back({pair_id(tr.src, q2), tr.in, tr2->out, pair_id(tr.dst, tr2->dst)});

    std::map<StateId, Word> terminal;
    for (const auto& [q, w] : t.terminal())
        for (StateId q2 = 0; q2 < n2; ++q2)
            if (auto end = t2.run(q2, w)) {
                auto it = t2.terminal().find(end->first);
                if (it != t2.terminal().end())
                    terminal[pair_id(q, q2)] = word_concat(end->second, it->second);
            }

    return PrefixSeq::make(SequentialTransducer::make(
        t.input_base(), t2.output_base(), pair_names(t.state_names(), t2.state_names()),
        pair_id(t.initial(), t2.initial()), std::move(terminal), std::move(moves)));
}

PrefixSeq prefix_intersect(const PrefixSeq& p, const PrefixSeq& p2) {
    const SequentialTransducer& t = p.machine();
    const SequentialTransducer& t2 = p2.machine();
    if (t.input_base() != t2.input_base() || t.output_base() != t2.output_base())
        throw std::invalid_argument("incompatible alphabets");
    const std::size_t n2 = t2.num_states();
    auto pair_id = [n2](StateId a, StateId b) { return a * n2 + b; };

    std::vector<SeqTransition> moves;
    for (const auto& tr : t.transitions())
        for (const auto& tr2 : t2.transitions())
            if (tr.in == tr2.in && tr.out == tr2.out)
                moves.push_back({pair_id(tr.src, tr2.src), tr.in, tr.out, pair_id(tr.dst, tr2.dst)});

    std::map<StateId, Word> terminal;
    for (const auto& [q, w] : t.terminal())
        for (const auto& [q2, w2] : t2.terminal())
            if (w == w2) terminal[pair_id(q, q2)] = w;

    return PrefixSeq::make(SequentialTransducer::make(
        t.input_base(), t.output_base(), pair_names(t.state_names(), t2.state_names()),
        pair_id(t.initial(), t2.initial()), std::move(terminal), std::move(moves)));
}

PrefixSeq prefix_difference(const PrefixSeq& p, const PrefixSeq& p2) {
    const SequentialTransducer& t = p.machine();
    const SequentialTransducer& t2 = p2.machine();
    if (t.input_base() != t2.input_base() || t.output_base() != t2.output_base())
        throw std::invalid_argument("incompatible alphabets");
    const std::size_t n1 = t.num_states(), n2 = t2.num_states();
    auto pair_id = [n2](StateId a, StateId b) { return a * n2 + b; };
    auto copy_id = [n1, n2](StateId a) { return n1 * n2 + a; };

    std::vector<std::string> names = pair_names(t.state_names(), t2.state_names());
    names.insert(names.end(), t.state_names().begin(), t.state_names().end());
    dedupe_names(names);

    std::vector<SeqTransition> moves;
    for (const auto& tr : t.transitions()) {
        for (StateId q2 = 0; q2 < n2; ++q2) {
            const SeqTransition* tr2 = t2.step(q2, tr.in);
            if (tr2 && tr2->out == tr.out)
                moves.push_back({pair_id(tr.src, q2), tr.in, tr.out, pair_id(tr.dst, tr2->dst)});
            else
                moves.push_back({pair_id(tr.src, q2), tr.in, tr.out, copy_id(tr.dst)});
        }
        moves.push_back({copy_id(tr.src), tr.in, tr.out, copy_id(tr.dst)});
    }

    std::map<StateId, Word> terminal;
    for (const auto& [q, w] : t.terminal()) {
        terminal[copy_id(q)] = w;
        for (StateId q2 = 0; q2 < n2; ++q2) {
            auto it = t2.terminal().find(q2);
            if (it == t2.terminal().end() || it->second != w) terminal[pair_id(q, q2)] = w;
        }
    }

    return PrefixSeq::make(SequentialTransducer::make(
        t.input_base(), t.output_base(), std::move(names), pair_id(t.initial(), t2.initial()),
        std::move(terminal), std::move(moves)));
}

SuffixSeq suffix_compose(const SuffixSeq& s, const SuffixSeq& s2) {
    if (s.output_base() != s2.input_base()) throw std::invalid_argument("incompatible alphabets");
    const std::size_t n2 = s2.num_states();
    auto pair_id = [n2](StateId a, StateId b) { return a * n2 + b; };

    std::vector<SuffixTransition> moves;
    for (const auto& tr : s.transitions()) {
        if (!tr.out) {
            for (StateId q2 = 0; q2 < n2; ++q2)
                moves.push_back({pair_id(tr.src, q2), tr.in, std::nullopt, pair_id(tr.dst, q2)});
        } else {
            for (StateId q2 = 0; q2 < n2; ++q2)
                if (const SuffixTransition* tr2 = s2.step(q2, *tr.out))
                    moves.push_back({pair_id(tr.src, q2), tr.in, tr2->out, pair_id(tr.dst, tr2->dst)});
        }
    }

    std::vector<StateId> final;
    for (StateId f : s.final())
        for (StateId f2 : s2.final()) final.push_back(pair_id(f, f2));

    // make() re-checks the initial epsilon-output condition the construction
    // is proved to preserve.
    return SuffixSeq::make(s.input_base(), s2.output_base(),
                           pair_names(s.state_names(), s2.state_names()),
                           pair_id(s.initial(), s2.initial()), std::move(final), std::move(moves));
}

SuffixSeq suffix_intersect(const SuffixSeq& s, const SuffixSeq& s2) {
    if (s.input_base() != s2.input_base() || s.output_base() != s2.output_base())
        throw std::invalid_argument("incompatible alphabets");
    const std::size_t n2 = s2.num_states();
    auto pair_id = [n2](StateId a, StateId b) { return a * n2 + b; };

    std::vector<SuffixTransition> moves;
    for (const auto& tr : s.transitions())
        for (const auto& tr2 : s2.transitions())
            if (tr.in == tr2.in && tr.out == tr2.out)
                moves.push_back({pair_id(tr.src, tr2.src), tr.in, tr.out, pair_id(tr.dst, tr2.dst)});

    std::vector<StateId> final;
    for (StateId f : s.final())
        for (StateId f2 : s2.final()) final.push_back(pair_id(f, f2));

    return SuffixSeq::make(s.input_base(), s.output_base(),
                           pair_names(s.state_names(), s2.state_names()),
                           pair_id(s.initial(), s2.initial()), std::move(final), std::move(moves));
}

SuffixSeq suffix_difference(const SuffixSeq& s, const SuffixSeq& s2) {
    if (s.input_base() != s2.input_base() || s.output_base() != s2.output_base())
        throw std::invalid_argument("incompatible alphabets");
    const std::size_t n1 = s.num_states(), n2 = s2.num_states();
    auto pair_id = [n2](StateId a, StateId b) { return a * n2 + b; };
    auto copy_id = [n1, n2](StateId a) { return n1 * n2 + a; };

    std::vector<std::string> names = pair_names(s.state_names(), s2.state_names());
    names.insert(names.end(), s.state_names().begin(), s.state_names().end());
    dedupe_names(names);

    std::vector<SuffixTransition> moves;
    for (const auto& tr : s.transitions()) {
        for (StateId q2 = 0; q2 < n2; ++q2) {
            const SuffixTransition* tr2 = s2.step(q2, tr.in);
            if (tr2 && tr2->out == tr.out)
                moves.push_back({pair_id(tr.src, q2), tr.in, tr.out, pair_id(tr.dst, tr2->dst)});
            else
                moves.push_back({pair_id(tr.src, q2), tr.in, tr.out, copy_id(tr.dst)});
        }
        moves.push_back({copy_id(tr.src), tr.in, tr.out, copy_id(tr.dst)});
    }

    // F + (F x (Q' - F')).
    std::vector<StateId> final;
    for (StateId f : s.final()) {
        final.push_back(copy_id(f));
        for (StateId q2 = 0; q2 < n2; ++q2)
            if (!s2.is_final(q2)) final.push_back(pair_id(f, q2));
    }

    return SuffixSeq::make(s.input_base(), s.output_base(), std::move(names),
                           pair_id(s.initial(), s2.initial()), std::move(final), std::move(moves));
}

namespace {

std::vector<std::int64_t> reachable_ids(std::size_t num_states, StateId initial,
                                        const std::vector<std::pair<StateId, StateId>>& edges) {
    std::vector<bool> seen(num_states, false);
    std::vector<StateId> stack{initial};
    seen[initial] = true;
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        for (const auto& [from, to] : edges)
            if (from == s && !seen[to]) {
                seen[to] = true;
                stack.push_back(to);
            }
    }
    std::vector<std::int64_t> remap(num_states, -1);
    std::int64_t next = 0;
    for (StateId s = 0; s < num_states; ++s)
        if (seen[s]) remap[s] = next++;
    return remap;
}

} // namespace

SequentialTransducer prune_unreachable(const SequentialTransducer& s) {
    std::vector<std::pair<StateId, StateId>> edges;
    for (const auto& tr : s.transitions()) edges.push_back({tr.src, tr.dst});
    auto remap = reachable_ids(s.num_states(), s.initial(), edges);

    std::vector<std::string> names;
    for (StateId q = 0; q < s.num_states(); ++q)
        if (remap[q] >= 0) names.push_back(s.state_names()[q]);
    std::map<StateId, Word> terminal;
    for (const auto& [q, w] : s.terminal())
        if (remap[q] >= 0) terminal[static_cast<StateId>(remap[q])] = w;
    std::vector<SeqTransition> moves;
    for (const auto& tr : s.transitions())
        if (remap[tr.src] >= 0)
            moves.push_back({static_cast<StateId>(remap[tr.src]), tr.in, tr.out,
                             static_cast<StateId>(remap[tr.dst])});
    return SequentialTransducer::make(s.input_base(), s.output_base(), std::move(names),
                                      static_cast<StateId>(remap[s.initial()]),
                                      std::move(terminal), std::move(moves));
}

PrefixSeq prune_unreachable(const PrefixSeq& p) {
    return PrefixSeq::make(prune_unreachable(p.machine()));
}

SuffixSeq prune_unreachable(const SuffixSeq& s) {
    std::vector<std::pair<StateId, StateId>> edges;
    for (const auto& tr : s.transitions()) edges.push_back({tr.src, tr.dst});
    auto remap = reachable_ids(s.num_states(), s.initial(), edges);

    std::vector<std::string> names;
    for (StateId q = 0; q < s.num_states(); ++q)
        if (remap[q] >= 0) names.push_back(s.state_names()[q]);
    std::vector<StateId> final;
    for (StateId f : s.final())
        if (remap[f] >= 0) final.push_back(static_cast<StateId>(remap[f]));
    std::vector<SuffixTransition> moves;
    for (const auto& tr : s.transitions())
        if (remap[tr.src] >= 0)
            moves.push_back({static_cast<StateId>(remap[tr.src]), tr.in, tr.out,
                             static_cast<StateId>(remap[tr.dst])});
    return SuffixSeq::make(s.input_base(), s.output_base(), std::move(names),
                           static_cast<StateId>(remap[s.initial()]), std::move(final),
                           std::move(moves));
}

std::optional<Word> apply_prefix(const PrefixSeq& p, const Word& u) {
    return apply(p.machine(), u);
}

std::optional<Word> apply_suffix(const SuffixSeq& s, const Word& u, int pad_limit) {
    StateId state = s.initial();
    Word out;
    auto consume = [&](Digit a) {
        const SuffixTransition* tr = s.step(state, a);
        if (!tr) return false;
        if (tr->out) out.push_back(*tr->out);
        state = tr->dst;
        return true;
    };
    for (Digit a : u)
        if (!consume(a)) return std::nullopt;
    for (int pads = 0; !s.is_final(state); ++pads) {
        if (pads == pad_limit) return std::nullopt;
        if (!consume(0)) return std::nullopt;
    }
    return out;
}

int default_pad_limit(int a, int d) {
    if (d < 2) throw std::invalid_argument("pad limit needs base >= 2");
    int k = 0; // ceil(log_d(a))
    for (long long p = 1; p < a; p *= d) ++k;
    return k + 2;
}

Transducer to_core(const PrefixSeq& p) {
    return to_core(p.machine());
}

Transducer to_core(const SuffixSeq& s) {
    Transducer t;
    t.input_base = s.input_base();
    t.output_base = s.output_base();
    t.state_names = s.state_names();
    t.initial = {s.initial()};
    t.final = s.final();
    for (const auto& tr : s.transitions()) t.transitions.push_back({tr.src, tr.in, tr.out, tr.dst});
    return t;
}

} // namespace syncfn
