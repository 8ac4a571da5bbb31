#include "enumfpt/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "enumfpt/backdoors.hpp"
#include "enumfpt/chordal.hpp"
#include "enumfpt/closest_string.hpp"
#include "enumfpt/cluster_editing.hpp"
#include "enumfpt/error.hpp"
#include "enumfpt/io.hpp"
#include "enumfpt/minones.hpp"
#include "enumfpt/oracle.hpp"
#include "enumfpt/triangle_deletion.hpp"

namespace enumfpt::cli {

namespace {

using Clock = std::chrono::steady_clock;

int require_parameter(const RunConfig& cfg) {
    if (!cfg.parameter) throw Error("config-error", "missing -k for " + cfg.problem);
    if (*cfg.parameter < 0) throw Error("config-error", "parameter must be >= 0");
    return *cfg.parameter;
}

void validate(const RunConfig& cfg) {
    if (cfg.limit && *cfg.limit < 1) throw Error("config-error", "--limit must be >= 1");
    if (cfg.parameter && *cfg.parameter < 0)
        throw Error("config-error", "parameter must be >= 0");
}

void print_report(const DelayReport& report, std::ostream& err) {
    err << "# solutions " << report.solutions << "\n";
    err << "# max-delay-us " << report.max_delay.count() << "\n";
    err << "# delays-us";
    for (auto d : report.delays) err << ' ' << d.count();
    err << "\n";
}

template <class Sol, class Inst, class Contract, class Nbf, class MinEnum, class Fmt>
int stream_problem(const RunConfig& cfg, const Inst& x, const Contract& contract, Nbf&& nbf,
                   MinEnum&& min_enum, Fmt&& fmt, std::ostream& out, std::ostream& err) {
    std::optional<OracleResult<Sol>> oracle;
    if (cfg.oracle_check) oracle = brute_force(contract, x);
    const std::vector<Sol>* expected =
        oracle ? (cfg.mode == Mode::All ? &oracle->all : &oracle->minimal) : nullptr;

    DelayReport report;
    const auto start = Clock::now();
    auto prev = start;
    std::uint64_t count = 0;
    bool diverged = false;

    auto emit = [&](const Sol& s) -> bool {
        if (expected && (count >= expected->size() || (*expected)[count] != s)) {
            err << "oracle divergence at solution index " << count << "\n";
            diverged = true;
            return false;
        }
        const auto now = Clock::now();
        report.delays.push_back(std::chrono::duration_cast<std::chrono::microseconds>(now - prev));
        prev = now;
        out << fmt(s) << "\n";
        ++count;
        return !(cfg.limit && count >= *cfg.limit);
    };

    if (cfg.mode == Mode::All) {
        enumerate_ordered<Sol>(x, nbf, emit);
    } else {
        for (const Sol& s : min_enum(x))
            if (!emit(s)) break;
    }

    const auto end = Clock::now();
    report.delays.push_back(std::chrono::duration_cast<std::chrono::microseconds>(end - prev));
    report.solutions = count;
    report.max_delay = *std::max_element(report.delays.begin(), report.delays.end());

    if (!diverged && expected && !cfg.limit && count != expected->size()) {
        err << "oracle divergence: enumerated " << count << " solutions, oracle has "
            << expected->size() << "\n";
        diverged = true;
    }
    if (cfg.stats) print_report(report, err);
    return diverged ? 1 : 0;
}

std::function<std::string(const OperationSet&)> graph_formatter(Format format) {
    if (format == Format::Text)
        return [](const OperationSet& s) { return format_ops_text(s); };
    return [](const OperationSet& s) { return format_ops_json(s); };
}

std::function<std::string(const std::vector<int>&)> int_formatter(Format format,
                                                                  std::string op_name) {
    if (format == Format::Text)
        return [op_name](const std::vector<int>& s) { return format_ints_text(s, op_name); };
    return [op_name](const std::vector<int>& s) { return format_ints_json(s, op_name); };
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.problem == "cluster-editing") {
        ClusterInstance x{load_graph(cfg.input_path), require_parameter(cfg)};
        return stream_problem<OperationSet>(
            cfg, x, ClusterEditingContract{},
            [](const ClusterInstance& y, const NbInput<OperationSet>& in) {
                return ce_neighbourhood(y, in);
            },
            [](const ClusterInstance& y) { return min_cluster_edit(y); },
            graph_formatter(cfg.format), out, err);
    }
    if (cfg.problem == "chordal-completion") {
        ChordalInstance x{load_graph(cfg.input_path), require_parameter(cfg)};
        return stream_problem<OperationSet>(
            cfg, x, ChordalCompletionContract{},
            [](const ChordalInstance& y, const NbInput<OperationSet>& in) {
                return cc_neighbourhood(y, in);
            },
            [](const ChordalInstance& y) { return min_k_triangulations(y.graph, y.k); },
            graph_formatter(cfg.format), out, err);
    }
    if (cfg.problem == "triangle-deletion") {
        TriangleDeletionInstance x{load_graph(cfg.input_path), require_parameter(cfg)};
        return stream_problem<OperationSet>(
            cfg, x, TriangleDeletionContract{},
            [](const TriangleDeletionInstance& y, const NbInput<OperationSet>& in) {
                return td_neighbourhood(y, in);
            },
            [](const TriangleDeletionInstance& y) {
                return min_triangle_deletion(y.graph, y.k);
            },
            graph_formatter(cfg.format), out, err);
    }
    if (cfg.problem == "closest-string") {
        StringInstance x = load_strings(cfg.input_path);
        if (cfg.parameter) {
            if (*cfg.parameter < 0) throw Error("config-error", "parameter must be >= 0");
            x.d = *cfg.parameter;
        }
        return stream_problem<FlipSet>(
            cfg, x, ClosestStringContract{},
            [](const StringInstance& y, const NbInput<FlipSet>& in) {
                return cs_neighbourhood(y, in);
            },
            [](const StringInstance& y) { return min_closest_string(y); },
            int_formatter(cfg.format, "flip"), out, err);
    }
    if (cfg.problem == "weak-backdoor" || cfg.problem == "strong-backdoor") {
        const bool weak = cfg.problem == "weak-backdoor";
        BackdoorInstance x{load_cnf(cfg.input_path, 3), require_parameter(cfg),
                           &base_class_by_name(cfg.base_class)};
        auto nbf = [weak](const BackdoorInstance& y, const NbInput<VarSet>& in) {
            return weak ? weak_neighbourhood(y, in) : strong_neighbourhood(y, in);
        };
        auto min_enum = [weak](const BackdoorInstance& y) {
            return weak ? min_weak_backdoors(y.phi, y.k, *y.base)
                        : min_strong_backdoors(y.phi, y.k, *y.base);
        };
        if (weak)
            return stream_problem<VarSet>(cfg, x, WeakBackdoorContract{}, nbf, min_enum,
                                          int_formatter(cfg.format, "var"), out, err);
        return stream_problem<VarSet>(cfg, x, StrongBackdoorContract{}, nbf, min_enum,
                                      int_formatter(cfg.format, "var"), out, err);
    }
    if (cfg.problem == "minones") {
        MinOnesInstance x{load_cnf(cfg.input_path), require_parameter(cfg)};
        return stream_problem<VarSet>(
            cfg, x, MinOnesContract{},
            [](const MinOnesInstance& y, const NbInput<VarSet>& in) {
                return minones_neighbourhood(y, in);
            },
            [](const MinOnesInstance& y) { return min_minones(y.phi, y.k); },
            int_formatter(cfg.format, "setTrue"), out, err);
    }
    throw Error("config-error", "unknown problem '" + cfg.problem + "'");
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        return dispatch(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names{
        "cluster-editing", "chordal-completion", "triangle-deletion", "closest-string",
        "weak-backdoor",   "strong-backdoor",    "minones",
    };
    return names;
}

} // namespace enumfpt::cli
