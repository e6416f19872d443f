#include "syncfn/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace syncfn {

namespace {

void check_letter(const OptLetter& l, int base, const char* side) {
    if (l && (*l < 0 || *l >= base))
        throw std::invalid_argument(std::string(side) + " letter " + std::to_string(*l) +
                                    " out of range for base " + std::to_string(base));
}

std::vector<std::vector<std::size_t>> index_by_source(const Transducer& t) {
    std::vector<std::vector<std::size_t>> by_src(t.num_states());
    for (std::size_t i = 0; i < t.transitions.size(); ++i) by_src[t.transitions[i].src].push_back(i);
    return by_src;
}

std::string tuple_name(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

// Powers name product states by concatenation, dropping the empty tuple, so
// power states of digit machines read as digit words.
std::string flat_name(const std::string& a, const std::string& b) {
    std::string r;
    if (a != "ε") r += a;
    if (b != "ε") r += b;
    return r.empty() ? "ε" : r;
}

Transducer compose_impl(const Transducer& t, const Transducer& t2,
                        std::string (*name)(const std::string&, const std::string&)) {
    if (t.output_base != t2.input_base) throw std::invalid_argument("incompatible alphabets");

    Transducer r;
    r.input_base = t.input_base;
    r.output_base = t2.output_base;
    const std::size_t n2 = t2.num_states();
    auto pair_id = [n2](StateId p, StateId q) { return p * n2 + q; };

    r.state_names.reserve(t.num_states() * n2);
    for (const auto& a : t.state_names)
        for (const auto& b : t2.state_names) r.state_names.push_back(name(a, b));
    for (StateId p : t.initial)
        for (StateId q : t2.initial) r.initial.push_back(pair_id(p, q));
    for (StateId p : t.final)
        for (StateId q : t2.final) r.final.push_back(pair_id(p, q));

    std::set<Transition> moves;
    for (const auto& tr : t.transitions)
        if (!tr.out)
            for (StateId q = 0; q < n2; ++q)
                moves.insert({pair_id(tr.src, q), tr.in, std::nullopt, pair_id(tr.dst, q)});
    for (const auto& tr2 : t2.transitions)
        if (!tr2.in)
            for (StateId p = 0; p < t.num_states(); ++p)
                moves.insert({pair_id(p, tr2.src), std::nullopt, tr2.out, pair_id(p, tr2.dst)});
    for (const auto& tr : t.transitions) {
        if (!tr.out) continue;
        for (const auto& tr2 : t2.transitions)
            if (tr2.in && *tr2.in == *tr.out)
                moves.insert({pair_id(tr.src, tr2.src), tr.in, tr2.out, pair_id(tr.dst, tr2.dst)});
    }
    r.transitions.assign(moves.begin(), moves.end());
    return r;
}

} // namespace

void Transducer::validate() const {
    if (input_base < 1 || output_base < 1) throw std::invalid_argument("base must be positive");
    for (StateId s : initial)
        if (s >= num_states()) throw std::invalid_argument("initial state out of range");
    for (StateId s : final)
        if (s >= num_states()) throw std::invalid_argument("final state out of range");
    for (const auto& tr : transitions) {
        if (tr.src >= num_states() || tr.dst >= num_states())
            throw std::invalid_argument("transition endpoint out of range");
        check_letter(tr.in, input_base, "input");
        check_letter(tr.out, output_base, "output");
    }
    std::set<std::string> seen(state_names.begin(), state_names.end());
    if (seen.size() != state_names.size())
        throw std::invalid_argument("state display names must be unique");
}

Transducer identity_transducer(int base) {
    Transducer t;
    t.input_base = t.output_base = base;
    t.state_names = {"ε"};
    t.initial = {0};
    t.final = {0};
    for (Digit a = 0; a < base; ++a) t.transitions.push_back({0, a, a, 0});
    return t;
}

std::set<WordPair> enumerate_relation(const Transducer& t, std::size_t max_input_len,
                                      std::size_t max_output_len) {
    std::set<WordPair> rel;
    auto by_src = index_by_source(t);
    std::vector<bool> is_final(t.num_states(), false);
    for (StateId f : t.final) is_final[f] = true;

    using Config = std::tuple<StateId, Word, Word>;
    std::set<Config> seen;
    std::deque<Config> queue;
    for (StateId i : t.initial)
        if (seen.insert({i, {}, {}}).second) queue.push_back({i, {}, {}});

    while (!queue.empty()) {
        auto [s, u, v] = queue.front();
        queue.pop_front();
        if (is_final[s]) rel.insert({u, v});
        for (std::size_t ti : by_src[s]) {
            const Transition& tr = t.transitions[ti];
            Word u2 = u, v2 = v;
            if (tr.in) {
                if (u2.size() == max_input_len) continue;
                u2.push_back(*tr.in);
            }
            if (tr.out) {
                if (v2.size() == max_output_len) continue;
                v2.push_back(*tr.out);
            }
            Config c{tr.dst, std::move(u2), std::move(v2)};
            if (seen.insert(c).second) queue.push_back(std::move(c));
        }
    }
    return rel;
}

Transducer inverse(const Transducer& t) {
    Transducer r = t;
    std::swap(r.input_base, r.output_base);
    for (auto& tr : r.transitions) std::swap(tr.in, tr.out);
    return r;
}

Transducer mirror(const Transducer& t) {
    Transducer r = t;
    std::swap(r.initial, r.final);
    for (auto& tr : r.transitions) std::swap(tr.src, tr.dst);
    return r;
}

Transducer compose(const Transducer& t, const Transducer& t2) {
    return compose_impl(t, t2, tuple_name);
}

Transducer power(const Transducer& t, int n) {
    if (n < 0) throw std::invalid_argument("power exponent must be nonnegative");
    if (t.input_base != t.output_base)
        throw std::invalid_argument("power requires equal input and output bases");
    Transducer acc = identity_transducer(t.input_base);
    for (int k = 0; k < n; ++k) acc = compose_impl(acc, t, flat_name);
    return acc;
}

Transducer union_of(const Transducer& t, const Transducer& t2) {
    if (t.input_base != t2.input_base || t.output_base != t2.output_base)
        throw std::invalid_argument("incompatible alphabets");
    Transducer r = t;
    const StateId offset = t.num_states();
    std::set<std::string> used(t.state_names.begin(), t.state_names.end());
    for (const auto& nm : t2.state_names) {
        std::string fresh = nm;
        while (used.count(fresh)) fresh += "'";
        used.insert(fresh);
        r.state_names.push_back(fresh);
    }
    for (StateId s : t2.initial) r.initial.push_back(s + offset);
    for (StateId s : t2.final) r.final.push_back(s + offset);
    for (const auto& tr : t2.transitions)
        r.transitions.push_back({tr.src + offset, tr.in, tr.out, tr.dst + offset});
    return r;
}

bool TerminalLanguage::empty() const {
    std::vector<bool> seen(num_states, false);
    std::deque<StateId> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        if (final[s]) return false;
        for (const auto& [p, l, q] : edges)
            if (p == s && !seen[q]) {
                seen[q] = true;
                queue.push_back(q);
            }
    }
    return true;
}

bool TerminalLanguage::contains(const Word& v) const {
    // NFA simulation; edges with empty letter are epsilon moves.
    auto closure = [&](std::set<StateId> states) {
        std::deque<StateId> queue(states.begin(), states.end());
        while (!queue.empty()) {
            StateId s = queue.front();
            queue.pop_front();
            for (const auto& [p, l, q] : edges)
                if (p == s && !l && states.insert(q).second) queue.push_back(q);
        }
        return states;
    };
    std::set<StateId> cur = closure({start});
    for (Digit d : v) {
        std::set<StateId> next;
        for (StateId s : cur)
            for (const auto& [p, l, q] : edges)
                if (p == s && l && *l == d) next.insert(q);
        cur = closure(std::move(next));
        if (cur.empty()) return false;
    }
    return std::any_of(cur.begin(), cur.end(), [&](StateId s) { return final[s]; });
}

std::set<Word> TerminalLanguage::enumerate(std::size_t max_len) const {
    std::set<Word> words;
    using Config = std::pair<StateId, Word>;
    std::set<Config> seen{{start, {}}};
    std::deque<Config> queue{{start, {}}};
    while (!queue.empty()) {
        auto [s, w] = queue.front();
        queue.pop_front();
        if (final[s]) words.insert(w);
        for (const auto& [p, l, q] : edges) {
            if (p != s) continue;
            Word w2 = w;
            if (l) {
                if (w2.size() == max_len) continue;
                w2.push_back(*l);
            }
            Config c{q, std::move(w2)};
            if (seen.insert(c).second) queue.push_back(std::move(c));
        }
    }
    return words;
}

TerminalFormTransducer to_terminal_form(const Transducer& t) {
    TerminalFormTransducer r;
    r.input_base = t.input_base;
    r.output_base = t.output_base;
    r.state_names = t.state_names;
    r.initial = t.initial;

    auto by_src = index_by_source(t);

    // States from which an epsilon-input walk can still hit a letter
    // transition; only their closure words end up on transitions, so only
    // they can make the conversion infinite.
    std::vector<bool> feeds_letter(t.num_states(), false);
    {
        std::deque<StateId> queue;
        for (const auto& tr : t.transitions)
            if (tr.in && !feeds_letter[tr.src]) {
                feeds_letter[tr.src] = true;
                queue.push_back(tr.src);
            }
        while (!queue.empty()) {
            StateId s = queue.front();
            queue.pop_front();
            for (const auto& tr : t.transitions)
                if (!tr.in && tr.dst == s && !feeds_letter[tr.src]) {
                    feeds_letter[tr.src] = true;
                    queue.push_back(tr.src);
                }
        }
    }

    // Epsilon-input closure of each state: the pairs (reached state, output
    // emitted on the way). Without an output-producing epsilon cycle every
    // closure word is shorter than |Q|, so a word of length |Q| bound for a
    // letter transition certifies an infinite transition set.
    const std::size_t cap = t.num_states();
    std::vector<std::vector<std::pair<StateId, Word>>> closure(t.num_states());
    for (StateId p = 0; p < t.num_states(); ++p) {
        std::set<std::pair<StateId, Word>> seen{{p, {}}};
        std::deque<std::pair<StateId, Word>> queue{{p, {}}};
        while (!queue.empty()) {
            auto [s, w] = queue.front();
            queue.pop_front();
            closure[p].push_back({s, w});
            for (std::size_t ti : by_src[s]) {
                const Transition& tr = t.transitions[ti];
                if (tr.in) continue;
                Word w2 = w;
                if (tr.out) {
                    if (w2.size() >= cap) {
                        if (feeds_letter[tr.dst])
                            throw std::runtime_error(
                                "terminal form undefined: epsilon-input cycle with output");
                        continue; // only the terminal language sees this branch
                    }
                    w2.push_back(*tr.out);
                }
                std::pair<StateId, Word> c{tr.dst, std::move(w2)};
                if (seen.insert(c).second) queue.push_back(std::move(c));
            }
        }
    }

    std::set<std::tuple<StateId, Digit, Word, StateId>> moves;
    for (StateId p = 0; p < t.num_states(); ++p)
        for (const auto& [mid, w] : closure[p])
            for (std::size_t ti : by_src[mid]) {
                const Transition& tr = t.transitions[ti];
                if (!tr.in) continue;
                Word out = w;
                if (tr.out) out.push_back(*tr.out);
                moves.insert({p, *tr.in, std::move(out), tr.dst});
            }
    r.transitions.assign(moves.begin(), moves.end());

    std::vector<bool> is_final(t.num_states(), false);
    for (StateId f : t.final) is_final[f] = true;
    r.terminal.resize(t.num_states());
    for (StateId q = 0; q < t.num_states(); ++q) {
        TerminalLanguage lang;
        lang.base = t.output_base;
        lang.num_states = t.num_states();
        lang.start = q;
        lang.final.assign(is_final.begin(), is_final.end());
        for (const auto& tr : t.transitions)
            if (!tr.in) lang.edges.push_back({tr.src, tr.out, tr.dst});
        if (!lang.empty()) r.terminal[q] = std::move(lang);
    }
    return r;
}

std::set<WordPair> enumerate_relation(const TerminalFormTransducer& t, std::size_t max_input_len,
                                      std::size_t max_output_len) {
    std::set<WordPair> rel;
    using Config = std::tuple<StateId, Word, Word>;
    std::set<Config> seen;
    std::deque<Config> queue;
    for (StateId i : t.initial)
        if (seen.insert({i, {}, {}}).second) queue.push_back({i, {}, {}});

    while (!queue.empty()) {
        auto [s, u, v] = queue.front();
        queue.pop_front();
        if (t.terminal[s])
            for (const Word& w : t.terminal[s]->enumerate(max_output_len - v.size()))
                rel.insert({u, word_concat(v, w)});
        for (const auto& [src, in, out, dst] : t.transitions) {
            if (src != s) continue;
            if (u.size() == max_input_len || v.size() + out.size() > max_output_len) continue;
            Word u2 = u;
            u2.push_back(in);
            Config c{dst, std::move(u2), word_concat(v, out)};
            if (seen.insert(c).second) queue.push_back(std::move(c));
        }
    }
    return rel;
}

} // namespace syncfn
