#include "syncfn/verify.hpp"

#include <chrono>
#include <sstream>

namespace syncfn {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Eval, typename Oracle>
VerifyReport sweep(std::string kind, const FabdParams& params, bool accel, int n,
                   const Integer& bound, Eval eval, Oracle oracle) {
    VerifyReport report;
    report.kind = std::move(kind);
    report.params = params;
    report.accel = accel;
    report.n = n;
    report.bound = bound;
    auto start = Clock::now();
    for (Integer k = 0; k < bound; ++k) {
        Integer expected = oracle(k);
        Integer got = eval(k);
        if (got != expected) report.mismatches.push_back({k, expected, got});
    }
    report.elapsed_sec = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

} // namespace

VerifyReport verify_prefix(const FabdParams& params, const Integer& bound) {
    PrefixSeq machine = prefix_fabd(params);
    const int base = params.a * params.d;
    return sweep(
        "prefix", params, false, 1, bound,
        [&](const Integer& k) {
            auto out = apply_prefix(machine, encode_msd(k, base));
            return out ? decode_msd(*out, base) : Integer(-1);
        },
        [&](const Integer& k) { return oracle_f(params, k); });
}

VerifyReport verify_prefix_accel(int a, int b, const Integer& bound) {
    PrefixSeq machine = prefix_accel(a, b);
    return sweep(
        "prefix", {a, b, 2}, true, 1, bound,
        [&](const Integer& k) {
            auto out = apply_prefix(machine, encode_msd(k, a));
            return out ? decode_msd(*out, a) : Integer(-1);
        },
        [&](const Integer& k) { return oracle_f_accel(a, b, k); });
}

VerifyReport verify_suffix(const FabdParams& params, const Integer& bound) {
    SuffixSeq machine = suffix_fabd(params);
    const int pad = default_pad_limit(params.a, params.d);
    return sweep(
        "suffix", params, false, 1, bound,
        [&](const Integer& k) {
            auto out = apply_suffix(machine, encode_lsd(k, params.d), pad);
            return out ? decode_lsd(*out, params.d) : Integer(-1);
        },
        [&](const Integer& k) { return oracle_f(params, k); });
}

VerifyReport verify_power(const FabdParams& params, int n, const Integer& bound,
                          std::size_t state_limit) {
    PrefixSeq machine = explicit_power(params, n, state_limit);
    const int base = params.a * params.d;
    return sweep(
        "power", params, false, n, bound,
        [&](const Integer& k) {
            auto out = apply_prefix(machine, encode_msd(k, base));
            return out ? decode_msd(*out, base) : Integer(-1);
        },
        [&](const Integer& k) { return oracle_f_iter(params, k, n); });
}

VerifyReport verify_power_accel(int a, int b, int n, const Integer& bound,
                                std::size_t state_limit) {
    PrefixSeq machine = explicit_power_accel(a, b, n, state_limit);
    return sweep(
        "power", {a, b, 2}, true, n, bound,
        [&](const Integer& k) {
            auto out = apply_prefix(machine, encode_msd(k, a));
            return out ? decode_msd(*out, a) : Integer(-1);
        },
        [&](const Integer& k) { return oracle_f_accel_iter(a, b, k, n); });
}

VerifyReport verify_closure(const FabdParams& params, int n, const Integer& bound) {
    ClosureMachine machine = ClosureMachine::fabd(params);
    return sweep(
        "closure", params, false, n, bound,
        [&](const Integer& k) { return machine.eval_integer(k, n); },
        [&](const Integer& k) { return oracle_f_iter(params, k, n); });
}

VerifyReport verify_closure_accel(int a, int b, int n, const Integer& bound) {
    ClosureMachine machine = ClosureMachine::accel(a, b);
    return sweep(
        "closure", {a, b, 2}, true, n, bound,
        [&](const Integer& k) { return machine.eval_integer(k, n); },
        [&](const Integer& k) { return oracle_f_accel_iter(a, b, k, n); });
}

std::string format_report(const VerifyReport& report, std::size_t max_mismatches) {
    std::ostringstream out;
    out << (report.pass() ? "PASS" : "FAIL") << " verify " << report.kind << " a=" << report.params.a
        << " b=" << report.params.b;
    if (!report.accel) out << " d=" << report.params.d;
    if (report.accel) out << " (accelerated)";
    if (report.kind == "power" || report.kind == "closure") out << " n=" << report.n;
    out << " bound=" << report.bound.get_str() << " elapsed=" << report.elapsed_sec << "s";
    if (!report.pass()) {
        out << " mismatches=" << report.mismatches.size();
        for (std::size_t i = 0; i < report.mismatches.size() && i < max_mismatches; ++i) {
            const Mismatch& m = report.mismatches[i];
            out << "\n  input " << m.input.get_str() << ": expected " << m.expected.get_str()
                << ", got " << m.got.get_str();
        }
    }
    return out.str();
}

} // namespace syncfn
