#include "chainbell/classical.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace chainbell {

namespace {

// Integer count of wrong-order events; cheap enough to call d^{2N} times.
long long strategy_score(int n, std::span<const int> a, std::span<const int> b) {
    long long v = a[static_cast<std::size_t>(n - 1)] >= b[0] ? 1 : 0;
    for (int i = 0; i < n; ++i)
        if (a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)]) ++v;
    for (int i = 0; i + 1 < n; ++i)
        if (b[static_cast<std::size_t>(i + 1)] < a[static_cast<std::size_t>(i)]) ++v;
    return v;
}

void decode(unsigned long long index, int n, int d, std::vector<int>& out) {
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            static_cast<int>(index % static_cast<unsigned long long>(d));
        index /= static_cast<unsigned long long>(d);
    }
}

struct Best {
    long long value = -1;
    unsigned long long alice = 0;
    unsigned long long bob = 0;

    bool beats(long long v, unsigned long long ai, unsigned long long bi) const {
        if (value < 0) return true;
        return std::tie(v, ai, bi) < std::tie(value, alice, bob);
    }
};

}  // namespace

double strategy_value(const Scenario& scenario, std::span<const int> alice,
                      std::span<const int> bob) {
    const int n = scenario.n_settings;
    const int d = scenario.n_outcomes;
    if (alice.size() != static_cast<std::size_t>(n) ||
        bob.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("strategy_value: one outcome per setting required");
    for (int v : alice)
        if (v < 0 || v >= d) throw std::invalid_argument("strategy_value: outcome out of range");
    for (int v : bob)
        if (v < 0 || v >= d) throw std::invalid_argument("strategy_value: outcome out of range");
    return static_cast<double>(strategy_score(n, alice, bob));
}

double strategy_value(const Scenario& scenario, const DeterministicStrategy& s) {
    return strategy_value(scenario, s.alice, s.bob);
}

ClassicalResult classical_min_bruteforce(const Scenario& scenario,
                                         unsigned long long cap, int workers) {
    const int n = scenario.n_settings;
    const int d = scenario.n_outcomes;

    unsigned long long per_party = 1;
    for (int i = 0; i < n; ++i) {
        if (per_party > cap / static_cast<unsigned long long>(d))
            throw std::invalid_argument("classical_min_bruteforce: d^{2N} exceeds cap");
        per_party *= static_cast<unsigned long long>(d);
    }
    if (per_party > cap / per_party)
        throw std::invalid_argument("classical_min_bruteforce: d^{2N} exceeds cap");
    const unsigned long long total = per_party * per_party;

    int nworkers = workers;
    if (nworkers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        nworkers = static_cast<int>(std::clamp<unsigned>(hw == 0 ? 1 : hw, 1u, 16u));
    }
    nworkers = static_cast<int>(
        std::min<unsigned long long>(static_cast<unsigned long long>(nworkers), per_party));

    std::vector<Best> bests(static_cast<std::size_t>(nworkers));
    auto scan = [&](int worker_id) {
        // Partition Alice's strategy space; each worker owns a contiguous range.
        const unsigned long long lo =
            per_party * static_cast<unsigned long long>(worker_id) /
            static_cast<unsigned long long>(nworkers);
        const unsigned long long hi =
            per_party * static_cast<unsigned long long>(worker_id + 1) /
            static_cast<unsigned long long>(nworkers);

        std::vector<int> a(static_cast<std::size_t>(n));
        std::vector<int> b(static_cast<std::size_t>(n));
        Best best;
        for (unsigned long long ai = lo; ai < hi; ++ai) {
            decode(ai, n, d, a);
            std::fill(b.begin(), b.end(), 0);
            for (unsigned long long bi = 0; bi < per_party; ++bi) {
                const long long v = strategy_score(n, a, b);
                if (best.beats(v, ai, bi)) best = Best{v, ai, bi};
                // Odometer step for Bob's outcome list.
                for (int pos = 0; pos < n; ++pos) {
                    if (++b[static_cast<std::size_t>(pos)] < d) break;
                    b[static_cast<std::size_t>(pos)] = 0;
                }
            }
        }
        bests[static_cast<std::size_t>(worker_id)] = best;
    };

    if (nworkers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }

    Best overall;
    for (const Best& b : bests)
        if (b.value >= 0 && overall.beats(b.value, b.alice, b.bob)) overall = b;

    ClassicalResult result;
    result.scenario = scenario;
    result.min_value = static_cast<double>(overall.value);
    result.alice.resize(static_cast<std::size_t>(n));
    result.bob.resize(static_cast<std::size_t>(n));
    decode(overall.alice, n, d, result.alice);
    decode(overall.bob, n, d, result.bob);
    result.strategy_pairs = total;
    return result;
}

}  // namespace chainbell
