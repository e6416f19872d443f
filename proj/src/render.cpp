#include "syncfn/render.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace syncfn {

namespace {

constexpr double kPi = std::numbers::pi;

struct Point {
    double x = 0;
    double y = 0;
};

std::string fmt(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    out << v;
    std::string s = out.str();
    return s == "-0.0" ? "0.0" : s;
}

std::string quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') q += '\\';
        q += c;
    }
    return q + "\"";
}

double ring_radius(int count, double scale) {
    return scale * (30.0 + 14.0 * count);
}

// Writer shared by every machine kind: nodes with optional pinned positions,
// plain edges, and the initial/terminal arrow convention (incoming arrow to
// each initial state, outgoing arrow from each final state labeled by its
// terminal word, unlabeled when the word is empty).
class DotWriter {
  public:
    explicit DotWriter(const RenderSpec& spec) : spec_(spec) {
        out_ << "digraph machine {\n";
        out_ << "  rankdir=LR;\n";
        out_ << "  node [shape=circle, fontsize=11];\n";
    }

    void node(const std::string& name, const Point* pos) {
        out_ << "  " << quote(name);
        if (pos) out_ << " [pos=" << quote(fmt(pos->x) + "," + fmt(pos->y) + "!") << "]";
        out_ << ";\n";
    }

    void edge(const std::string& from, const std::string& to, const std::string& label) {
        out_ << "  " << quote(from) << " -> " << quote(to);
        if (!label.empty()) out_ << " [label=" << quote(label) << "]";
        out_ << ";\n";
    }

    void initial_arrow(const std::string& name, const Point* pos) {
        std::string anchor = "__start_" + std::to_string(marks_++);
        out_ << "  " << quote(anchor) << " [shape=point, style=invis";
        if (pos) out_ << ", pos=" << quote(fmt(pos->x) + "," + fmt(pos->y) + "!");
        out_ << "];\n";
        out_ << "  " << quote(anchor) << " -> " << quote(name) << ";\n";
    }

    void terminal_arrow(const std::string& name, const std::string& label, const Point* pos) {
        std::string anchor = "__accept_" + std::to_string(marks_++);
        out_ << "  " << quote(anchor) << " [shape=point, style=invis";
        if (pos) out_ << ", pos=" << quote(fmt(pos->x) + "," + fmt(pos->y) + "!");
        out_ << "];\n";
        out_ << "  " << quote(name) << " -> " << quote(anchor);
        if (!label.empty() && spec_.show_terminal_labels) out_ << " [label=" << quote(label) << "]";
        out_ << ";\n";
    }

    std::string finish() {
        out_ << "}\n";
        return out_.str();
    }

  private:
    const RenderSpec& spec_;
    std::ostringstream out_;
    int marks_ = 0;
};

// One edge per transition, in stored (deterministic) order.
template <typename EdgeRange>
void write_edges(DotWriter& w, const std::vector<std::string>& names, const EdgeRange& edges) {
    for (const auto& [src, dst, label] : edges) w.edge(names[src], names[dst], label);
}

std::string letter_label(const OptLetter& l) {
    return l ? std::to_string(*l) : "ε";
}

std::vector<Point> circular_positions(std::size_t count, double scale) {
    std::vector<Point> pos(count);
    double r = ring_radius(static_cast<int>(count), scale);
    for (std::size_t k = 0; k < count; ++k) {
        double angle = circular_angle(static_cast<int>(k), static_cast<int>(count));
        pos[k] = {r * std::cos(angle), r * std::sin(angle)};
    }
    return pos;
}

Point outward(const Point& p, double factor = 1.35) {
    if (p.x == 0 && p.y == 0) return {0, 18.0};
    return {p.x * factor, p.y * factor};
}

std::vector<Point> layout_positions(const RenderSpec& spec, std::size_t count) {
    if (spec.layout == Layout::circular) return circular_positions(count, spec.radius_scale);
    return {};
}

} // namespace

double circular_angle(int k, int d) {
    // 0 at the top right, the 0 to d-1 chord horizontal; indices advance
    // clockwise so that d-1 lands mirrored across the vertical axis.
    return kPi / 2 - kPi / d - 2 * kPi * k / d;
}

std::string to_dot(const Transducer& t, const RenderSpec& spec) {
    DotWriter w(spec);
    auto pos = layout_positions(spec, t.num_states());
    for (StateId s = 0; s < t.num_states(); ++s)
        w.node(t.state_names[s], pos.empty() ? nullptr : &pos[s]);
    std::vector<std::tuple<StateId, StateId, std::string>> edges;
    for (const auto& tr : t.transitions)
        edges.push_back({tr.src, tr.dst, letter_label(tr.in) + "/" + letter_label(tr.out)});
    write_edges(w, t.state_names, edges);
    for (StateId s : t.initial) {
        Point p = pos.empty() ? Point{} : outward(pos[s]);
        w.initial_arrow(t.state_names[s], pos.empty() ? nullptr : &p);
    }
    for (StateId s : t.final) {
        Point p = pos.empty() ? Point{} : outward(pos[s]);
        w.terminal_arrow(t.state_names[s], "", pos.empty() ? nullptr : &p);
    }
    return w.finish();
}

std::string to_dot(const SequentialTransducer& s, const RenderSpec& spec) {
    DotWriter w(spec);
    auto pos = layout_positions(spec, s.num_states());
    for (StateId q = 0; q < s.num_states(); ++q)
        w.node(s.state_names()[q], pos.empty() ? nullptr : &pos[q]);
    std::vector<std::tuple<StateId, StateId, std::string>> edges;
    for (const auto& tr : s.transitions())
        edges.push_back(
            {tr.src, tr.dst,
             std::to_string(tr.in) + "/" + word_display(tr.out, s.output_base(), spec.epsilon_as_zero)});
    write_edges(w, s.state_names(), edges);
    {
        Point p = pos.empty() ? Point{} : outward(pos[s.initial()]);
        w.initial_arrow(s.state_names()[s.initial()], pos.empty() ? nullptr : &p);
    }
    for (const auto& [q, word] : s.terminal()) {
        Point p = pos.empty() ? Point{} : outward(pos[q]);
        w.terminal_arrow(s.state_names()[q],
                         word.empty() ? "" : word_to_string(word, s.output_base()),
                         pos.empty() ? nullptr : &p);
    }
    return w.finish();
}

std::string to_dot(const PrefixSeq& p, const RenderSpec& spec) {
    return to_dot(p.machine(), spec);
}

std::string to_dot(const SuffixSeq& s, const RenderSpec& spec) {
    DotWriter w(spec);
    auto pos = layout_positions(spec, s.num_states());
    for (StateId q = 0; q < s.num_states(); ++q)
        w.node(s.state_names()[q], pos.empty() ? nullptr : &pos[q]);
    std::vector<std::tuple<StateId, StateId, std::string>> edges;
    for (const auto& tr : s.transitions())
        edges.push_back({tr.src, tr.dst, std::to_string(tr.in) + "/" + letter_label(tr.out)});
    write_edges(w, s.state_names(), edges);
    {
        Point p = pos.empty() ? Point{} : outward(pos[s.initial()]);
        w.initial_arrow(s.state_names()[s.initial()], pos.empty() ? nullptr : &p);
    }
    for (StateId f : s.final()) {
        Point p = pos.empty() ? Point{} : outward(pos[f]);
        w.terminal_arrow(s.state_names()[f], "", pos.empty() ? nullptr : &p);
    }
    return w.finish();
}

std::string cone_dot(const ClosureMachine& m, int max_section, const RenderSpec& spec,
                     std::size_t state_limit) {
    DotWriter w(spec);
    const int d = m.section_arity();

    // Section n sits on the ring of radius proportional to n; the tip is the
    // empty word at the origin.
    for (int n = 0; n <= max_section; ++n) {
        Transducer section = m.section_export(n, state_limit);
        std::size_t count = checked_power_size(d, n, state_limit);
        double radius = spec.radius_scale * 60.0 * n;
        for (std::size_t k = 0; k < count; ++k) {
            double angle = circular_angle(static_cast<int>(k), static_cast<int>(count));
            Point p{radius * std::cos(angle), radius * std::sin(angle)};
            w.node(section.state_names[k], &p);
        }
    }
    for (int n = 0; n <= max_section; ++n) {
        Transducer section = m.section_export(n, state_limit);
        for (const auto& tr : section.transitions) {
            if (tr.in) {
                w.edge(section.state_names[tr.src], section.state_names[tr.dst],
                       letter_label(tr.in) + "/" + letter_label(tr.out));
            } else {
                // terminal transition into the smaller section
                std::string label = tr.out && spec.show_terminal_labels ? std::to_string(*tr.out) : "";
                w.edge(section.state_names[tr.src], section.state_names[tr.dst], label);
            }
        }
    }
    return w.finish();
}

} // namespace syncfn
