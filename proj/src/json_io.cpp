#include "syncfn/json_io.hpp"

#include <map>
#include <stdexcept>

namespace syncfn {

using nlohmann::json;

namespace {

json letter_to_json(const OptLetter& l) {
    return l ? json(*l) : json(nullptr);
}

OptLetter letter_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<Digit>();
}

std::map<std::string, StateId> name_index(const std::vector<std::string>& names) {
    std::map<std::string, StateId> index;
    for (StateId i = 0; i < names.size(); ++i)
        if (!index.emplace(names[i], i).second)
            throw std::invalid_argument("duplicate state name '" + names[i] + "'");
    return index;
}

StateId lookup(const std::map<std::string, StateId>& index, const json& j) {
    auto it = index.find(j.get<std::string>());
    if (it == index.end())
        throw std::invalid_argument("unknown state '" + j.get<std::string>() + "'");
    return it->second;
}

void expect_kind(const json& j, const std::string& kind) {
    if (j.value("kind", kind) != kind)
        throw std::invalid_argument("expected kind '" + kind + "', got '" +
                                    j.value("kind", "?") + "'");
}

} // namespace

json to_json(const Transducer& t) {
    json j;
    j["kind"] = "transducer";
    j["input_base"] = t.input_base;
    j["output_base"] = t.output_base;
    j["states"] = t.state_names;
    json initial = json::array(), final = json::array();
    for (StateId s : t.initial) initial.push_back(t.state_names[s]);
    for (StateId s : t.final) final.push_back(t.state_names[s]);
    j["initial"] = std::move(initial);
    j["final"] = std::move(final);
    json moves = json::array();
    for (const auto& tr : t.transitions)
        moves.push_back({t.state_names[tr.src], letter_to_json(tr.in), letter_to_json(tr.out),
                         t.state_names[tr.dst]});
    j["transitions"] = std::move(moves);
    return j;
}

Transducer transducer_from_json(const json& j) {
    expect_kind(j, "transducer");
    Transducer t;
    t.input_base = j.at("input_base").get<int>();
    t.output_base = j.at("output_base").get<int>();
    t.state_names = j.at("states").get<std::vector<std::string>>();
    auto index = name_index(t.state_names);
    for (const auto& s : j.at("initial")) t.initial.push_back(lookup(index, s));
    for (const auto& s : j.at("final")) t.final.push_back(lookup(index, s));
    for (const auto& m : j.at("transitions")) {
        if (!m.is_array() || m.size() != 4)
            throw std::invalid_argument("transition must be [src, in, out, dst]");
        t.transitions.push_back(
            {lookup(index, m[0]), letter_from_json(m[1]), letter_from_json(m[2]), lookup(index, m[3])});
    }
    t.validate();
    return t;
}

json to_json(const SequentialTransducer& s) {
    json j;
    j["kind"] = "sequential";
    j["input_base"] = s.input_base();
    j["output_base"] = s.output_base();
    j["states"] = s.state_names();
    j["initial"] = s.state_names()[s.initial()];
    json terminal = json::object();
    for (const auto& [q, w] : s.terminal())
        terminal[s.state_names()[q]] = word_to_string(w, s.output_base());
    j["terminal"] = std::move(terminal);
    json moves = json::array();
    for (const auto& tr : s.transitions())
        moves.push_back({s.state_names()[tr.src], tr.in, word_to_string(tr.out, s.output_base()),
                         s.state_names()[tr.dst]});
    j["transitions"] = std::move(moves);
    return j;
}

namespace {

SequentialTransducer sequential_from_json_impl(const json& j) {
    int input_base = j.at("input_base").get<int>();
    int output_base = j.at("output_base").get<int>();
    auto names = j.at("states").get<std::vector<std::string>>();
    auto index = name_index(names);
    StateId initial = lookup(index, j.at("initial"));
    std::map<StateId, Word> terminal;
    for (const auto& [name, w] : j.at("terminal").items())
        terminal[lookup(index, json(name))] = word_from_string(w.get<std::string>(), output_base);
    std::vector<SeqTransition> moves;
    for (const auto& m : j.at("transitions")) {
        if (!m.is_array() || m.size() != 4)
            throw std::invalid_argument("transition must be [src, in, out, dst]");
        moves.push_back({lookup(index, m[0]), m[1].get<Digit>(),
                         word_from_string(m[2].get<std::string>(), output_base),
                         lookup(index, m[3])});
    }
    return SequentialTransducer::make(input_base, output_base, std::move(names), initial,
                                      std::move(terminal), std::move(moves));
}

} // namespace

SequentialTransducer sequential_from_json(const json& j) {
    expect_kind(j, "sequential");
    return sequential_from_json_impl(j);
}

json to_json(const PrefixSeq& p) {
    json j = to_json(p.machine());
    j["kind"] = "prefix";
    return j;
}

PrefixSeq prefix_from_json(const json& j) {
    expect_kind(j, "prefix");
    return PrefixSeq::make(sequential_from_json_impl(j));
}

json to_json(const SuffixSeq& s) {
    json j;
    j["kind"] = "suffix";
    j["input_base"] = s.input_base();
    j["output_base"] = s.output_base();
    j["states"] = s.state_names();
    j["initial"] = s.state_names()[s.initial()];
    json final = json::array();
    for (StateId f : s.final()) final.push_back(s.state_names()[f]);
    j["final"] = std::move(final);
    json moves = json::array();
    for (const auto& tr : s.transitions())
        moves.push_back(
            {s.state_names()[tr.src], tr.in, letter_to_json(tr.out), s.state_names()[tr.dst]});
    j["transitions"] = std::move(moves);
    return j;
}

SuffixSeq suffix_from_json(const json& j) {
    expect_kind(j, "suffix");
    int input_base = j.at("input_base").get<int>();
    int output_base = j.at("output_base").get<int>();
    auto names = j.at("states").get<std::vector<std::string>>();
    auto index = name_index(names);
    StateId initial = lookup(index, j.at("initial"));
    std::vector<StateId> final;
    for (const auto& s : j.at("final")) final.push_back(lookup(index, s));
    std::vector<SuffixTransition> moves;
    for (const auto& m : j.at("transitions")) {
        if (!m.is_array() || m.size() != 4)
            throw std::invalid_argument("transition must be [src, in, out, dst]");
        moves.push_back(
            {lookup(index, m[0]), m[1].get<Digit>(), letter_from_json(m[2]), lookup(index, m[3])});
    }
    return SuffixSeq::make(input_base, output_base, std::move(names), initial, std::move(final),
                           std::move(moves));
}

} // namespace syncfn
