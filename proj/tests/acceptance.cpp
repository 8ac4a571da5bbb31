// Acceptance suite: end-to-end checks of every enumeration pipeline against
// the brute-force oracle on randomized sweeps, plus search-tree bounds, delay
// scaling and hand-checked micro instances. Prints one pass/fail line per
// criterion and exits nonzero when any fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "enumfpt/backdoors.hpp"
#include "enumfpt/chordal.hpp"
#include "enumfpt/closest_string.hpp"
#include "enumfpt/cluster_editing.hpp"
#include "enumfpt/minones.hpp"
#include "enumfpt/oracle.hpp"
#include "enumfpt/triangle_deletion.hpp"
#include "test_support.hpp"

using namespace enumfpt;
using namespace enumfpt::testing;

namespace {

// Sweep size and seed are overridable for stress runs; the defaults are the
// pinned acceptance configuration.
int sweep_size() {
    if (const char* s = std::getenv("ENUMFPT_SWEEP")) return std::max(1, std::atoi(s));
    return 220;
}

std::uint32_t seed_base() {
    if (const char* s = std::getenv("ENUMFPT_SEED")) return static_cast<std::uint32_t>(std::atol(s));
    return 0;
}

const int kSweepSize = sweep_size();

template <class Contract>
struct Suite {
    using Inst = typename Contract::Instance;
    using Sol = typename Contract::Solution;

    std::string name;
    Contract contract;
    std::vector<Inst> instances;
    std::vector<OracleResult<Sol>> truths;

    void solve() {
        truths.reserve(instances.size());
        for (const Inst& x : instances) truths.push_back(brute_force(contract, x));
    }
};

Suite<ClusterEditingContract> make_ce_suite() {
    Suite<ClusterEditingContract> s{"cluster-editing", {}, {}, {}};
    std::mt19937 rng(seed_base() + 1001);
    for (int i = 0; i < kSweepSize; ++i)
        s.instances.push_back({random_graph(rng, rand_int(rng, 3, 8), rand_int(rng, 0, 100)),
                               rand_int(rng, 0, 4)});
    s.solve();
    return s;
}

Suite<ChordalCompletionContract> make_cc_suite() {
    Suite<ChordalCompletionContract> s{"chordal-completion", {}, {}, {}};
    std::mt19937 rng(seed_base() + 1002);
    for (int i = 0; i < kSweepSize; ++i)
        s.instances.push_back({random_graph(rng, rand_int(rng, 3, 8), rand_int(rng, 0, 100)),
                               rand_int(rng, 0, 4)});
    s.solve();
    return s;
}

Suite<TriangleDeletionContract> make_td_suite() {
    Suite<TriangleDeletionContract> s{"triangle-deletion", {}, {}, {}};
    std::mt19937 rng(seed_base() + 1003);
    for (int i = 0; i < kSweepSize; ++i)
        s.instances.push_back({random_graph(rng, rand_int(rng, 3, 8), rand_int(rng, 0, 100)),
                               rand_int(rng, 0, 4)});
    s.solve();
    return s;
}

Suite<ClosestStringContract> make_cs_suite() {
    Suite<ClosestStringContract> s{"closest-string", {}, {}, {}};
    std::mt19937 rng(seed_base() + 1004);
    for (int i = 0; i < kSweepSize; ++i)
        s.instances.push_back({random_strings(rng, rand_int(rng, 1, 4), rand_int(rng, 2, 8)),
                               rand_int(rng, 0, 3)});
    s.solve();
    return s;
}

std::vector<BackdoorInstance> backdoor_instances(std::uint32_t seed) {
    std::vector<BackdoorInstance> out;
    std::mt19937 rng(seed_base() + seed);
    for (int i = 0; i < kSweepSize; ++i)
        out.push_back({random_cnf(rng, rand_int(rng, 2, 6), rand_int(rng, 1, 6), 3),
                       rand_int(rng, 0, 3),
                       rand_int(rng, 0, 1) ? &horn_class() : &twocnf_class()});
    return out;
}

Suite<WeakBackdoorContract> make_weak_suite() {
    Suite<WeakBackdoorContract> s{"weak-backdoor", {}, backdoor_instances(1005), {}};
    s.solve();
    return s;
}

Suite<StrongBackdoorContract> make_strong_suite() {
    Suite<StrongBackdoorContract> s{"strong-backdoor", {}, backdoor_instances(1006), {}};
    s.solve();
    return s;
}

Suite<MinOnesContract> make_mo_suite() {
    Suite<MinOnesContract> s{"minones", {}, {}, {}};
    std::mt19937 rng(seed_base() + 1007);
    for (int i = 0; i < kSweepSize; ++i)
        s.instances.push_back({random_cnf(rng, rand_int(rng, 2, 6), rand_int(rng, 1, 6), 3),
                               rand_int(rng, 0, 3)});
    s.solve();
    return s;
}

struct Criterion {
    int number;
    std::string description;
    int failures = 0;
    std::vector<std::string> notes{};

    void note_failure(const std::string& what) {
        ++failures;
        if (notes.size() < 5) notes.push_back(what);
    }

    bool report(double seconds) const {
        std::cout << (failures == 0 ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
                  << description << " (" << seconds << " s)" << std::endl;
        for (const std::string& n : notes) std::cout << "       " << n << std::endl;
        return failures == 0;
    }
};

template <class Suite, class Nbf>
void check_all_mode(Criterion& c, const Suite& suite, Nbf&& nbf) {
    using Sol = typename Suite::Sol;
    for (std::size_t i = 0; i < suite.instances.size(); ++i) {
        auto stream = enumerate_to_vector<Sol>(suite.instances[i], nbf);
        if (stream != suite.truths[i].all)
            c.note_failure(suite.name + " instance " + std::to_string(i) + ": stream has " +
                           std::to_string(stream.size()) + " solutions, oracle " +
                           std::to_string(suite.truths[i].all.size()));
    }
}

template <class Suite, class MinEnum>
void check_min_mode(Criterion& c, const Suite& suite, MinEnum&& min_enum) {
    for (std::size_t i = 0; i < suite.instances.size(); ++i) {
        if (min_enum(suite.instances[i]) != suite.truths[i].minimal)
            c.note_failure(suite.name + " instance " + std::to_string(i) +
                           ": minimal family mismatch");
    }
}

template <class Suite, class Nbf>
void check_axioms(Criterion& c, const Suite& suite, Nbf&& nbf) {
    using Sol = typename Suite::Sol;
    for (std::size_t i = 0; i < suite.instances.size(); ++i) {
        if (!neighbourhood_axioms_hold<Sol>(suite.instances[i], nbf, suite.truths[i]))
            c.note_failure(suite.name + " instance " + std::to_string(i) +
                           ": neighbourhood axiom violated");
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Planted cluster graph: disjoint triangles (plus one smaller clique when n
// is not divisible by 3). With k = 2 the solution set is the empty edit plus
// one split per triangle, so its size grows linearly with n.
Graph planted_clusters(int n) {
    Graph g = Graph::with_vertices(n);
    int v = 1;
    while (v + 2 <= n) {
        g.add_edge(v, v + 1);
        g.add_edge(v, v + 2);
        g.add_edge(v + 1, v + 2);
        v += 3;
    }
    if (v + 1 <= n) g.add_edge(v, v + 1);
    return g;
}

long long max_delay_us(const ClusterInstance& x) {
    using Clock = std::chrono::steady_clock;
    auto nbf = [](const ClusterInstance& y, const NbInput<OperationSet>& in) {
        return ce_neighbourhood(y, in);
    };
    long long best = -1;
    for (int repeat = 0; repeat < 3; ++repeat) {
        long long max_us = 0;
        auto prev = Clock::now();
        enumerate_ordered<OperationSet>(x, nbf, [&](const OperationSet&) {
            auto now = Clock::now();
            auto us = std::chrono::duration_cast<std::chrono::microseconds>(now - prev).count();
            max_us = std::max(max_us, static_cast<long long>(us));
            prev = now;
            return true;
        });
        auto post =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - prev).count();
        max_us = std::max(max_us, static_cast<long long>(post));
        best = best < 0 ? max_us : std::min(best, max_us);
    }
    return std::max(best, 1ll);
}

} // namespace

int main() {
    std::cout << "building sweeps and oracle ground truth..." << std::endl;
    auto t0 = std::chrono::steady_clock::now();
    auto ce = make_ce_suite();
    auto cc = make_cc_suite();
    auto td = make_td_suite();
    auto cs = make_cs_suite();
    auto weak = make_weak_suite();
    auto strong = make_strong_suite();
    auto mo = make_mo_suite();
    std::cout << "sweeps ready (" << seconds_since(t0) << " s, " << 7 * kSweepSize
              << " instances)" << std::endl;

    auto ce_nbf = [](const ClusterInstance& y, const NbInput<OperationSet>& in) {
        return ce_neighbourhood(y, in);
    };
    auto cc_nbf = [](const ChordalInstance& y, const NbInput<OperationSet>& in) {
        return cc_neighbourhood(y, in);
    };
    auto td_nbf = [](const TriangleDeletionInstance& y, const NbInput<OperationSet>& in) {
        return td_neighbourhood(y, in);
    };
    auto cs_nbf = [](const StringInstance& y, const NbInput<FlipSet>& in) {
        return cs_neighbourhood(y, in);
    };
    auto weak_nbf = [](const BackdoorInstance& y, const NbInput<VarSet>& in) {
        return weak_neighbourhood(y, in);
    };
    auto strong_nbf = [](const BackdoorInstance& y, const NbInput<VarSet>& in) {
        return strong_neighbourhood(y, in);
    };
    auto mo_nbf = [](const MinOnesInstance& y, const NbInput<VarSet>& in) {
        return minones_neighbourhood(y, in);
    };

    int failed_criteria = 0;

    { // 1. all-mode oracle equivalence
        Criterion c{1, "all-mode enumeration equals the oracle stream exactly", 0, {}};
        auto t = std::chrono::steady_clock::now();
        check_all_mode(c, ce, ce_nbf);
        check_all_mode(c, cc, cc_nbf);
        check_all_mode(c, td, td_nbf);
        check_all_mode(c, cs, cs_nbf);
        check_all_mode(c, weak, weak_nbf);
        check_all_mode(c, strong, strong_nbf);
        check_all_mode(c, mo, mo_nbf);
        if (!c.report(seconds_since(t))) ++failed_criteria;
    }

    { // 2. min-mode oracle equivalence
        Criterion c{2, "min-mode enumeration equals the oracle's minimal family", 0, {}};
        auto t = std::chrono::steady_clock::now();
        check_min_mode(c, ce, [](const ClusterInstance& y) { return min_cluster_edit(y); });
        check_min_mode(c, cc,
                       [](const ChordalInstance& y) { return min_k_triangulations(y.graph, y.k); });
        check_min_mode(c, td, [](const TriangleDeletionInstance& y) {
            return min_triangle_deletion(y.graph, y.k);
        });
        check_min_mode(c, cs, [](const StringInstance& y) { return min_closest_string(y); });
        check_min_mode(c, weak, [](const BackdoorInstance& y) {
            return min_weak_backdoors(y.phi, y.k, *y.base);
        });
        check_min_mode(c, strong, [](const BackdoorInstance& y) {
            return min_strong_backdoors(y.phi, y.k, *y.base);
        });
        check_min_mode(c, mo, [](const MinOnesInstance& y) { return min_minones(y.phi, y.k); });
        if (!c.report(seconds_since(t))) ++failed_criteria;
    }

    { // 3. neighbourhood axioms
        Criterion c{3, "neighbourhood axioms: growth, coverage, seed emptiness", 0, {}};
        auto t = std::chrono::steady_clock::now();
        check_axioms(c, ce, ce_nbf);
        check_axioms(c, cc, cc_nbf);
        check_axioms(c, td, td_nbf);
        check_axioms(c, cs, cs_nbf);
        check_axioms(c, weak, weak_nbf);
        check_axioms(c, strong, strong_nbf);
        check_axioms(c, mo, mo_nbf);
        if (!c.report(seconds_since(t))) ++failed_criteria;
    }

    { // 4. search-tree bounds
        Criterion c{4, "search-tree bounds: 9^k calls (cluster editing), 3^k leaves (strong)", 0, {}};
        auto t = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < ce.instances.size(); ++i) {
            SearchStats stats;
            min_cluster_edit(ce.instances[i], &stats);
            std::uint64_t bound = 1;
            for (int j = 0; j < ce.instances[i].k; ++j) bound *= 9;
            if (stats.calls > bound)
                c.note_failure("cluster-editing instance " + std::to_string(i) + ": " +
                               std::to_string(stats.calls) + " calls > 9^k");
        }
        for (std::size_t i = 0; i < strong.instances.size(); ++i) {
            SearchStats stats;
            min_strong_backdoors(strong.instances[i].phi, strong.instances[i].k,
                                 *strong.instances[i].base, &stats);
            std::uint64_t bound = 1;
            for (int j = 0; j < strong.instances[i].k; ++j) bound *= 3;
            if (stats.leaves > bound)
                c.note_failure("strong-backdoor instance " + std::to_string(i) + ": " +
                               std::to_string(stats.leaves) + " leaves > 3^k");
        }
        if (!c.report(seconds_since(t))) ++failed_criteria;
    }

    { // 5. delay scaling
        Criterion c{5, "max delay for cluster editing (k=2) grows at most cubically in n", 0, {}};
        auto t = std::chrono::steady_clock::now();
        long long d50 = max_delay_us({planted_clusters(50), 2});
        long long d100 = max_delay_us({planted_clusters(100), 2});
        long long d200 = max_delay_us({planted_clusters(200), 2});
        double slope = std::log(static_cast<double>(d200) / static_cast<double>(d50)) /
                       std::log(200.0 / 50.0);
        c.notes.push_back("max delays us: n=50 -> " + std::to_string(d50) + ", n=100 -> " +
                          std::to_string(d100) + ", n=200 -> " + std::to_string(d200) +
                          ", log-log slope " + std::to_string(slope));
        if (!(slope <= 3.5)) c.note_failure("slope exceeds 3.5");
        if (!c.report(seconds_since(t))) ++failed_criteria;
    }

    { // 6. dual-path agreement for cluster editing
        Criterion c{6, "bespoke and generic cluster-editing enumerations agree", 0, {}};
        auto t = std::chrono::steady_clock::now();
        auto generic_nbf = [&](const ClusterInstance& y, const NbInput<OperationSet>& in) {
            return build_neighbourhood(
                ce.contract, y, [](const ClusterInstance& z) { return min_cluster_edit(z); },
                in);
        };
        for (std::size_t i = 0; i < ce.instances.size(); ++i) {
            auto bespoke = enumerate_to_vector<OperationSet>(ce.instances[i], ce_nbf);
            auto generic = enumerate_to_vector<OperationSet>(ce.instances[i], generic_nbf);
            if (bespoke != generic)
                c.note_failure("cluster-editing instance " + std::to_string(i) +
                               ": route disagreement");
        }
        if (!c.report(seconds_since(t))) ++failed_criteria;
    }

    { // 7. worked micro instances
        Criterion c{7, "worked micro instances match their hand-checked values", 0, {}};
        auto t = std::chrono::steady_clock::now();

        Graph p3 = Graph::with_vertices(3);
        p3.add_edge(1, 2);
        p3.add_edge(2, 3);
        auto p3_stream = enumerate_to_vector<OperationSet>(ClusterInstance{p3, 1}, ce_nbf);
        std::vector<OperationSet> p3_expected = normalize_family<GraphOp>({
            {GraphOp::delete_edge(1, 2)},
            {GraphOp::delete_edge(2, 3)},
            {GraphOp::add_edge(1, 3)},
        });
        if (p3_stream != p3_expected) c.note_failure("cluster editing on P3/k=1");

        Graph c4 = Graph::with_vertices(4);
        c4.add_edge(1, 2);
        c4.add_edge(2, 3);
        c4.add_edge(3, 4);
        c4.add_edge(1, 4);
        auto c4_stream = enumerate_to_vector<OperationSet>(ChordalInstance{c4, 2}, cc_nbf);
        std::vector<std::size_t> c4_sizes;
        for (const auto& s : c4_stream) c4_sizes.push_back(s.size());
        if (c4_sizes != std::vector<std::size_t>{1, 1, 2})
            c.note_failure("chordal completion on C4/k=2");

        Graph c5 = Graph::with_vertices(5);
        for (int v = 1; v < 5; ++v) c5.add_edge(v, v + 1);
        c5.add_edge(1, 5);
        if (min_k_triangulations(c5, 2).size() != 5)
            c.note_failure("chordal completion min-mode on C5/k=2");

        StringInstance pair{{"00", "11"}, 1};
        auto cs_stream = enumerate_to_vector<FlipSet>(pair, cs_nbf);
        if (cs_stream != std::vector<FlipSet>{{1}, {2}})
            c.note_failure("closest string 00/11 with d=1");

        CnfFormula xy;
        xy.clauses.push_back(make_clause({1, 2}));
        BackdoorInstance bd{xy, 1, &horn_class()};
        std::vector<VarSet> expected_bd{{1}, {2}};
        if (enumerate_to_vector<VarSet>(bd, weak_nbf) != expected_bd)
            c.note_failure("weak Horn backdoors of (x or y), k=1");
        if (enumerate_to_vector<VarSet>(bd, strong_nbf) != expected_bd)
            c.note_failure("strong Horn backdoors of (x or y), k=1");

        if (!c.report(seconds_since(t))) ++failed_criteria;
    }

    if (failed_criteria != 0) {
        std::cout << failed_criteria << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
