// syncfn: build, evaluate, verify and render the digit-serial transducers
// for the maps n -> n/d | a*n + b and their powers.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "syncfn/json_io.hpp"
#include "syncfn/render.hpp"
#include "syncfn/verify.hpp"

using namespace syncfn;

namespace {

std::size_t state_limit_from_env() {
    const char* env = std::getenv("SYNCFN_STATE_LIMIT");
    if (!env || !*env) return kDefaultStateLimit;
    return static_cast<std::size_t>(std::stoull(env));
}

struct Options {
    int a = 3, b = 1, d = 2, r = 0;
    int n = 1;
    long k = 0;
    long bound = 10000;
    int steps = 10;
    int sections = 3;
    bool accel = false;
    bool json = false;
    bool dot = false;
    bool table = false;
    bool epsilon_as_zero = false;
    std::string kind;
    std::string layout = "circular";
};

RenderSpec render_spec(const Options& opt) {
    RenderSpec spec;
    spec.epsilon_as_zero = opt.epsilon_as_zero;
    if (opt.layout == "layered") spec.layout = Layout::layered;
    else if (opt.layout == "cone") spec.layout = Layout::cone;
    else spec.layout = Layout::circular;
    return spec;
}

void add_param_flags(CLI::App* cmd, Options& opt, bool with_r = false) {
    cmd->add_option("--a", opt.a, "multiplier a");
    cmd->add_option("--b", opt.b, "added constant b");
    cmd->add_option("--d", opt.d, "divisor d");
    if (with_r) cmd->add_option("--r", opt.r, "remainder r");
    cmd->add_flag("--accel", opt.accel, "use the accelerated map (odd branch halved)");
    cmd->add_flag("--epsilon-as-zero", opt.epsilon_as_zero, "print the empty word as 0");
}

// Machine construction shared by build, eval and render.
enum class MachineKind { mult, multadd, div, suffix_f, prefix_f, prefix_accel, prefix_id };

MachineKind parse_kind(const std::string& kind) {
    if (kind == "mult") return MachineKind::mult;
    if (kind == "multadd") return MachineKind::multadd;
    if (kind == "div") return MachineKind::div;
    if (kind == "suffix-f") return MachineKind::suffix_f;
    if (kind == "prefix-f") return MachineKind::prefix_f;
    if (kind == "prefix-accel") return MachineKind::prefix_accel;
    if (kind == "prefix-id") return MachineKind::prefix_id;
    throw CLI::ValidationError("unknown machine kind '" + kind + "'");
}

int emit_machine(const Options& opt) {
    MachineKind kind = parse_kind(opt.kind);
    RenderSpec spec = render_spec(opt);
    auto emit = [&](const auto& machine) {
        if (opt.dot) std::cout << to_dot(machine, spec);
        else std::cout << to_json(machine).dump(2) << "\n";
    };
    switch (kind) {
        case MachineKind::mult: emit(mult_sync(opt.d, opt.a)); break;
        case MachineKind::multadd: emit(mult_add_sync(opt.d, opt.a, opt.b)); break;
        case MachineKind::div: emit(division_sync(opt.a, opt.d, opt.r)); break;
        case MachineKind::suffix_f: emit(suffix_fabd({opt.a, opt.b, opt.d})); break;
        case MachineKind::prefix_f: emit(prefix_fabd({opt.a, opt.b, opt.d})); break;
        case MachineKind::prefix_accel: emit(prefix_accel(opt.a, opt.b)); break;
        case MachineKind::prefix_id: emit(prefix_identity_case(opt.d)); break;
    }
    return 0;
}

int run_eval(const Options& opt) {
    MachineKind kind = parse_kind(opt.kind);
    Integer k(opt.k);
    auto print = [&](const Word& in, const Word& out, int base, const char* how) {
        std::cout << "input  " << k.get_str() << " = " << word_display(in, base, opt.epsilon_as_zero)
                  << " (" << how << " " << base << ")\n";
        std::cout << "output " << decode(out, base,
                                          std::string(how) == "base" ? DigitOrder::msd_first
                                                                     : DigitOrder::lsd_first)
                         .get_str()
                  << " = " << word_display(out, base, opt.epsilon_as_zero) << "\n";
    };
    switch (kind) {
        case MachineKind::prefix_f: {
            PrefixSeq g = prefix_fabd({opt.a, opt.b, opt.d});
            Word in = encode_msd(k, opt.a * opt.d);
            print(in, *apply_prefix(g, in), opt.a * opt.d, "base");
            return 0;
        }
        case MachineKind::prefix_accel: {
            PrefixSeq g = prefix_accel(opt.a, opt.b);
            Word in = encode_msd(k, opt.a);
            print(in, *apply_prefix(g, in), opt.a, "base");
            return 0;
        }
        case MachineKind::prefix_id: {
            PrefixSeq g = prefix_identity_case(opt.d);
            Word in = encode_msd(k, opt.d);
            print(in, *apply_prefix(g, in), opt.d, "base");
            return 0;
        }
        case MachineKind::suffix_f: {
            SuffixSeq s = suffix_fabd({opt.a, opt.b, opt.d});
            Word in = encode_lsd(k, opt.d);
            auto out = apply_suffix(s, in, default_pad_limit(std::max(opt.a, 1), opt.d) + 4);
            if (!out) throw std::runtime_error("evaluation did not reach a final state");
            print(in, *out, opt.d, "reverse base");
            return 0;
        }
        default:
            throw CLI::ValidationError("eval supports prefix-f, prefix-accel, suffix-f, prefix-id");
    }
}

int run_power(const Options& opt, std::size_t limit) {
    PrefixSeq g = opt.accel ? explicit_power_accel(opt.a, opt.b, opt.n, limit)
                            : explicit_power({opt.a, opt.b, opt.d}, opt.n, limit);
    const int base = opt.accel ? opt.a : opt.a * opt.d;

    if (opt.bound > 0) {
        VerifyReport report =
            opt.accel ? verify_power_accel(opt.a, opt.b, opt.n, Integer(opt.bound), limit)
                      : verify_power({opt.a, opt.b, opt.d}, opt.n, Integer(opt.bound), limit);
        std::cerr << format_report(report) << "\n";
        if (!report.pass()) return 1;
    }

    if (opt.table) {
        const SequentialTransducer& m = g.machine();
        std::cout << "state\ti\tf^n(i)\t|omega|\tomega\n";
        for (StateId s = 0; s < m.num_states(); ++s) {
            const Word& w = m.terminal().at(s);
            std::cout << m.state_names()[s] << "\t" << s << "\t" << decode_msd(w, base).get_str()
                      << "\t" << w.size() << "\t" << word_display(w, base, opt.epsilon_as_zero)
                      << "\n";
        }
    } else if (opt.dot) {
        std::cout << to_dot(g, render_spec(opt));
    } else {
        std::cout << to_json(g).dump(2) << "\n";
    }
    return 0;
}

ClosureMachine make_closure(const Options& opt) {
    return opt.accel ? ClosureMachine::accel(opt.a, opt.b)
                     : ClosureMachine::fabd({opt.a, opt.b, opt.d});
}

int run_verify(const Options& opt, std::size_t limit) {
    VerifyReport report;
    Integer bound(opt.bound);
    if (opt.kind == "prefix")
        report = opt.accel ? verify_prefix_accel(opt.a, opt.b, bound)
                           : verify_prefix({opt.a, opt.b, opt.d}, bound);
    else if (opt.kind == "suffix")
        report = verify_suffix({opt.a, opt.b, opt.d}, bound);
    else if (opt.kind == "power")
        report = opt.accel ? verify_power_accel(opt.a, opt.b, opt.n, bound, limit)
                           : verify_power({opt.a, opt.b, opt.d}, opt.n, bound, limit);
    else if (opt.kind == "closure")
        report = opt.accel ? verify_closure_accel(opt.a, opt.b, opt.n, bound)
                           : verify_closure({opt.a, opt.b, opt.d}, opt.n, bound);
    else
        throw CLI::ValidationError("verify supports prefix, suffix, power, closure");
    std::cout << format_report(report) << "\n";
    return report.pass() ? 0 : 1;
}

int run_orbit(const Options& opt) {
    Integer value(opt.k);
    std::cout << (opt.accel ? "step\tvalue\tparity\teta\n" : "step\tvalue\tmod d\tmu\n");
    int counter = 0;
    for (int i = 0; i <= opt.steps; ++i) {
        std::cout << i << "\t" << value.get_str();
        if (i < opt.steps) {
            bool moves = opt.accel ? value % 2 != 0 : value % opt.d != 0;
            if (moves) ++counter;
            std::cout << "\t" << (opt.accel ? (value % 2 != 0 ? "odd" : "even")
                                            : (value % opt.d == 0 ? "multiple" : "non-multiple"))
                      << "\t" << counter;
            value = opt.accel ? oracle_f_accel(opt.a, opt.b, value)
                              : oracle_f({opt.a, opt.b, opt.d}, value);
        }
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"digit-serial transducers for the maps n -> n/d | a*n + b"};
    app.require_subcommand(1);
    Options opt;
    const std::size_t limit = state_limit_from_env();

    CLI::App* build = app.add_subcommand("build", "construct a machine and print it");
    build->add_option("kind", opt.kind,
                      "mult | multadd | div | suffix-f | prefix-f | prefix-accel | prefix-id")
        ->required();
    add_param_flags(build, opt, true);
    build->add_flag("--json", opt.json, "JSON output (default)");
    build->add_flag("--dot", opt.dot, "DOT output");
    build->add_option("--layout", opt.layout, "circular | layered");

    CLI::App* eval = app.add_subcommand("eval", "evaluate one machine on an integer");
    eval->add_option("kind", opt.kind, "prefix-f | prefix-accel | suffix-f | prefix-id")->required();
    add_param_flags(eval, opt);
    eval->add_option("--k", opt.k, "input integer")->required();

    CLI::App* power = app.add_subcommand("power", "explicit n-th power of the prefix machine");
    add_param_flags(power, opt);
    power->add_option("--n", opt.n, "power")->required();
    power->add_option("--verify-bound", opt.bound, "sweep bound before printing (0 skips)");
    power->add_flag("--json", opt.json, "JSON output (default)");
    power->add_flag("--dot", opt.dot, "DOT output");
    power->add_flag("--table", opt.table, "print i, f^n(i), counter, terminal word");

    CLI::App* closure = app.add_subcommand("closure", "the lazy machine for all powers at once");
    add_param_flags(closure, opt);
    closure->require_subcommand(1);
    CLI::App* closure_eval = closure->add_subcommand("eval", "run f^n(k) through the machine");
    closure_eval->add_option("--k", opt.k, "input integer")->required();
    closure_eval->add_option("--n", opt.n, "iterations")->required();
    CLI::App* closure_section = closure->add_subcommand("section", "materialize section n");
    closure_section->add_option("--n", opt.n, "section")->required();
    closure_section->add_flag("--dot", opt.dot, "DOT output");
    closure_section->add_flag("--json", opt.json, "JSON output (default)");
    CLI::App* closure_cycles = closure->add_subcommand("cycles", "fixed points of f^n below a bound");
    closure_cycles->add_option("--n", opt.n, "iterations")->required();
    closure_cycles->add_option("--bound", opt.bound, "search bound")->required();

    CLI::App* verify = app.add_subcommand("verify", "sweep a machine against the oracle");
    verify->add_option("kind", opt.kind, "prefix | suffix | power | closure")->required();
    add_param_flags(verify, opt);
    verify->add_option("--n", opt.n, "power / iterations");
    verify->add_option("--bound", opt.bound, "sweep bound");

    CLI::App* render = app.add_subcommand("render", "DOT with pinned geometry");
    render->add_option("kind", opt.kind,
                       "machine kind as in build, or 'cone' for stacked closure sections")
        ->required();
    add_param_flags(render, opt, true);
    render->add_option("--layout", opt.layout, "circular | layered | cone");
    render->add_option("--sections", opt.sections, "cone: largest section");

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "orbit table with running counters");
    add_param_flags(orbit_cmd, opt);
    orbit_cmd->add_option("--k", opt.k, "start value")->required();
    orbit_cmd->add_option("--steps", opt.steps, "steps to take");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*build) return emit_machine(opt);
        if (*eval) return run_eval(opt);
        if (*power) return run_power(opt, limit);
        if (*closure) {
            ClosureMachine m = make_closure(opt);
            if (*closure_eval) {
                Integer k(opt.k);
                Word in = encode_msd(k, m.base());
                Word out = m.eval_iterations(in, opt.n);
                std::cout << "f^" << opt.n << "(" << k.get_str()
                          << ") = " << m.eval_integer(k, opt.n).get_str() << "  ["
                          << word_display(in, m.base(), opt.epsilon_as_zero) << " -> "
                          << word_display(out, m.base(), opt.epsilon_as_zero) << " in base "
                          << m.base() << "]\n";
                return 0;
            }
            if (*closure_section) {
                if (opt.dot) std::cout << to_dot(m.section_export(opt.n, limit), render_spec(opt));
                else std::cout << to_json(m.section_machine(opt.n, limit)).dump(2) << "\n";
                return 0;
            }
            auto hits = m.find_cycles(opt.n, Integer(opt.bound));
            for (const auto& hit : hits) {
                std::cout << hit.value.get_str() << ": orbit";
                for (const auto& v : hit.orbit) std::cout << " " << v.get_str();
                if (hit.witness) {
                    std::cout << "  witness u="
                              << word_display(hit.witness->prefix, m.base(), opt.epsilon_as_zero)
                              << " v="
                              << word_display(hit.witness->terminal_word, m.base(),
                                              opt.epsilon_as_zero)
                              << " output="
                              << word_display(hit.witness->machine_output, m.base(),
                                              opt.epsilon_as_zero);
                }
                std::cout << "\n";
            }
            std::cout << hits.size() << " fixed point(s) below " << opt.bound << "\n";
            return 0;
        }
        if (*verify) return run_verify(opt, limit);
        if (*render) {
            if (opt.kind == "cone") {
                Options cone_opt = opt;
                cone_opt.layout = "cone";
                std::cout << cone_dot(make_closure(opt), opt.sections, render_spec(cone_opt), limit);
                return 0;
            }
            Options dot_opt = opt;
            dot_opt.dot = true;
            return emit_machine(dot_opt);
        }
        if (*orbit_cmd) return run_orbit(opt);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
