#include "fusion/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace fusion {

std::vector<std::vector<int>> duality_candidates(int rank) {
    if (rank < 1) throw std::invalid_argument("duality_candidates: rank must be >= 1");
    std::vector<std::vector<int>> out;
    int max_cycles = (rank - 1) / 2;
    for (int c = 0; c <= max_cycles; ++c) {
        std::vector<int> d(rank);
        std::iota(d.begin(), d.end(), 0);
        for (int t = 0; t < c; ++t) std::swap(d[1 + 2 * t], d[2 + 2 * t]);
        out.push_back(std::move(d));
    }
    return out;
}

namespace {

struct Triple {
    int i, j, k;
    bool operator<(const Triple& o) const {
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return k < o.k;
    }
    bool operator==(const Triple& o) const { return i == o.i && j == o.j && k == o.k; }
};

struct SearchSpace {
    int r;
    std::vector<int> dual;
    // entry value per (i,j,k): 0,1 or 2 = undetermined
    std::vector<std::uint8_t> val;
    // orbit id per entry (-1 for predetermined)
    std::vector<int> orbit_of;
    std::vector<std::vector<Triple>> orbits; // ordered by fill order
    // associativity quadruples bucketed by the last-assigned orbit they await
    struct Quad { int i, j, k, l; };
    std::vector<std::vector<Quad>> quads_by_trigger;
    std::vector<Quad> quads_predetermined;

    int idx(int i, int j, int k) const { return (i * r + j) * r + k; }

    void build(int rank, const std::vector<int>& d) {
        r = rank;
        dual = d;
        val.assign((size_t)r * r * r, 2);
        orbit_of.assign((size_t)r * r * r, -1);
        // predetermined entries
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                val[idx(0, j, k)] = (j == k) ? 1 : 0;
                val[idx(j, 0, k)] = (j == k) ? 1 : 0;
            }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                val[idx(i, j, 0)] = (j == dual[i]) ? 1 : 0;
        // Frobenius orbits of undetermined entries
        std::vector<char> seen((size_t)r * r * r, 0);
        std::vector<std::pair<std::pair<int, Triple>, std::vector<Triple>>> collected;
        for (int i = 1; i < r; ++i)
            for (int j = 1; j < r; ++j)
                for (int k = 1; k < r; ++k) {
                    if (seen[idx(i, j, k)]) continue;
                    // BFS orbit under S,T,U
                    std::vector<Triple> orb;
                    std::vector<Triple> stack{{i, j, k}};
                    std::set<Triple> os;
                    while (!stack.empty()) {
                        Triple t = stack.back();
                        stack.pop_back();
                        if (os.count(t)) continue;
                        os.insert(t);
                        stack.push_back({dual[t.i], t.k, t.j});
                        stack.push_back({t.k, dual[t.j], t.i});
                        stack.push_back({dual[t.j], dual[t.i], dual[t.k]});
                    }
                    orb.assign(os.begin(), os.end());
                    int level = 0;
                    for (auto& t : orb) {
                        seen[idx(t.i, t.j, t.k)] = 1;
                        level = std::max({level, t.i, t.j, t.k});
                    }
                    collected.push_back({{level, orb.front()}, orb});
                }
        std::sort(collected.begin(), collected.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [key, orb] : collected) {
            int oid = (int)orbits.size();
            for (auto& t : orb) orbit_of[idx(t.i, t.j, t.k)] = oid;
            orbits.push_back(orb);
        }
        // bucket associativity quadruples by the latest orbit involved
        quads_by_trigger.assign(orbits.size(), {});
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k)
                    for (int l = 0; l < r; ++l) {
                        int latest = -1;
                        for (int m = 0; m < r; ++m) {
                            for (int e : {idx(i, j, m), idx(m, k, l), idx(j, k, m), idx(i, m, l)}) {
                                int o = orbit_of[e];
                                if (o > latest) latest = o;
                            }
                        }
                        Quad q{i, j, k, l};
                        if (latest < 0) quads_predetermined.push_back(q);
                        else quads_by_trigger[latest].push_back(q);
                    }
    }

};

struct QuadEval {
    static bool holds(const SearchSpace& S, const SearchSpace::Quad& q) {
        int s1 = 0, s2 = 0;
        for (int m = 0; m < S.r; ++m) {
            s1 += S.val[S.idx(q.i, q.j, m)] * S.val[S.idx(m, q.k, q.l)];
            s2 += S.val[S.idx(q.j, q.k, m)] * S.val[S.idx(q.i, m, q.l)];
        }
        return s1 == s2;
    }
};

void dfs(SearchSpace& S, size_t depth, std::vector<FusionRing>& out) {
    if (depth == S.orbits.size()) {
        std::vector<std::uint8_t> coef(S.val.begin(), S.val.end());
        out.emplace_back(S.r, S.dual, std::move(coef));
        return;
    }
    for (int v = 0; v <= 1; ++v) {
        for (auto& t : S.orbits[depth]) S.val[S.idx(t.i, t.j, t.k)] = (std::uint8_t)v;
        bool ok = true;
        for (const auto& q : S.quads_by_trigger[depth])
            if (!QuadEval::holds(S, q)) { ok = false; break; }
        if (ok) dfs(S, depth + 1, out);
    }
    for (auto& t : S.orbits[depth]) S.val[S.idx(t.i, t.j, t.k)] = 2;
}

} // namespace

std::vector<FusionRing> enumerate_rings(int rank, const EnumerateOptions& opt) {
    if (rank < 1) throw std::invalid_argument("enumerate_rings: rank must be >= 1");
    if (rank > 6 && !opt.allow_large_rank)
        throw std::domain_error("enumerate_rings: rank > 6 requires the explicit override");
    if (rank == 1) {
        std::vector<std::uint8_t> coef = {1};
        return {FusionRing(1, {0}, coef)};
    }
    std::vector<FusionRing> found;
    for (const auto& d : duality_candidates(rank)) {
        SearchSpace S;
        S.build(rank, d);
        for (const auto& q : S.quads_predetermined)
            if (!QuadEval::holds(S, q))
                throw std::logic_error("predetermined associativity violated");
        // parallelize over the top two orbit assignments
        unsigned nthreads = opt.threads > 0 ? (unsigned)opt.threads
                                            : std::max(1u, std::thread::hardware_concurrency());
        size_t split_depth = std::min<size_t>(S.orbits.size(), nthreads > 1 ? 3 : 0);
        if (split_depth == 0) {
            dfs(S, 0, found);
            continue;
        }
        // enumerate prefixes
        struct Prefix { std::vector<int> vals; };
        std::vector<Prefix> prefixes;
        std::vector<int> cur;
        std::function<void(SearchSpace&, size_t)> gen = [&](SearchSpace& SS, size_t depth) {
            if (depth == split_depth) {
                prefixes.push_back({cur});
                return;
            }
            for (int v = 0; v <= 1; ++v) {
                for (auto& t : SS.orbits[depth]) SS.val[SS.idx(t.i, t.j, t.k)] = (std::uint8_t)v;
                bool ok = true;
                for (const auto& q : SS.quads_by_trigger[depth])
                    if (!QuadEval::holds(SS, q)) { ok = false; break; }
                if (ok) {
                    cur.push_back(v);
                    gen(SS, depth + 1);
                    cur.pop_back();
                }
            }
            for (auto& t : SS.orbits[depth]) SS.val[SS.idx(t.i, t.j, t.k)] = 2;
        };
        gen(S, 0);
        std::vector<std::vector<FusionRing>> results(prefixes.size());
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t w = next.fetch_add(1);
                if (w >= prefixes.size()) break;
                SearchSpace SS;
                SS.build(rank, d);
                bool ok = true;
                for (size_t dpt = 0; dpt < prefixes[w].vals.size(); ++dpt) {
                    int v = prefixes[w].vals[dpt];
                    for (auto& t : SS.orbits[dpt]) SS.val[SS.idx(t.i, t.j, t.k)] = (std::uint8_t)v;
                    for (const auto& q : SS.quads_by_trigger[dpt])
                        if (!QuadEval::holds(SS, q)) { ok = false; break; }
                    if (!ok) break;
                }
                if (ok) dfs(SS, split_depth, results[w]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& rs : results)
            for (auto& ring : rs) found.push_back(std::move(ring));
    }
    // canonicalize + dedupe
    std::map<CanonicalForm, FusionRing> uniq;
    for (auto& ring : found) {
        CanonicalForm cf = canonical_form(ring);
        if (!uniq.count(cf)) uniq.emplace(std::move(cf), std::move(ring));
    }
    std::vector<FusionRing> out;
    out.reserve(uniq.size());
    for (auto& [cf, ring] : uniq) out.push_back(std::move(ring));
    return out;
}

} // namespace fusion
