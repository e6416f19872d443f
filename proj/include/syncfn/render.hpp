#pragma once

#include <string>

#include "syncfn/closure.hpp"
#include "syncfn/synchronized.hpp"
#include "syncfn/transducer.hpp"

namespace syncfn {

enum class Layout { circular, cone, layered };

/// Node positions are computed here and pinned in the DOT output, so the
/// drawn geometry is independent of the graphviz engine. Circular layout
/// places the d states of a division machine equidistant on a circle with
/// state 0 at the top right and the 0 to d-1 chord horizontal; cone layout
/// stacks circular sections around the tip.
struct RenderSpec {
    Layout layout = Layout::circular;
    double radius_scale = 1.0;
    bool show_terminal_labels = true; // empty terminal words always render as unlabeled arrows
    bool epsilon_as_zero = false;
};

/// Angle (radians, y axis up) of state k among d equidistant states.
double circular_angle(int k, int d);

std::string to_dot(const Transducer& t, const RenderSpec& spec);
std::string to_dot(const SequentialTransducer& s, const RenderSpec& spec);
std::string to_dot(const PrefixSeq& p, const RenderSpec& spec);
std::string to_dot(const SuffixSeq& s, const RenderSpec& spec);

/// Sections 0..max_section of the closure machine as concentric circular
/// sections with the terminal transitions running inward.
std::string cone_dot(const ClosureMachine& m, int max_section, const RenderSpec& spec,
                     std::size_t state_limit = kDefaultStateLimit);

} // namespace syncfn
