#include "subdivlab/embedder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "subdivlab/numeric.hpp"
#include "subdivlab/paths.hpp"

namespace subdiv {

bool verify_certificate(const SimpleGraph& g, const EmbeddingCertificate& cert) {
    try {
        cert.spec.validate();
    } catch (const std::exception&) {
        return false;
    }
    const MultiGraph& f = cert.spec.pattern;
    const int n = g.vertex_count();
    if (static_cast<int>(cert.branch_map.size()) != f.vertex_count()) return false;
    std::vector<char> used(n, 0);
    for (int img : cert.branch_map) {
        if (img < 0 || img >= n || used[img]) return false;
        used[img] = 1;
    }
    if (static_cast<long long>(cert.paths.size()) != f.total_multiplicity()) return false;
    size_t idx = 0;
    for (const auto& e : f.edges()) {
        for (int copy = 0; copy < e.multiplicity; ++copy, ++idx) {
            const auto& p = cert.paths[idx];
            if (static_cast<int>(p.size()) != cert.spec.s + 2) return false;
            if (p.front() != cert.branch_map[e.u] || p.back() != cert.branch_map[e.v])
                return false;
            if (!is_path_in(g, p)) return false;
            for (size_t i = 1; i + 1 < p.size(); ++i) {
                if (used[p[i]]) return false;  // another path's internal, or a branch image
                used[p[i]] = 1;
            }
        }
    }
    return true;
}

namespace {

struct ExactEmbedder {
    const SimpleGraph& g;
    const SubdivisionSpec& spec;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::vector<int> pattern_order;                // pattern vertices, F-degree desc
    std::vector<int> host_order;                   // host vertices, degree desc
    std::vector<int> fdeg;                         // pattern degree with multiplicity
    std::vector<std::pair<int, int>> edge_copies;  // (u, v) per copy, sorted edge order
    std::vector<int> image;
    std::vector<char> used;
    std::vector<std::vector<int>> routed;

    explicit ExactEmbedder(const SimpleGraph& g_, const SubdivisionSpec& spec_,
                           std::uint64_t budget_)
        : g(g_), spec(spec_), budget(budget_) {
        const MultiGraph& f = spec.pattern;
        const int t = f.vertex_count();
        fdeg.assign(t, 0);
        for (const auto& e : f.edges()) {
            fdeg[e.u] += e.multiplicity;
            fdeg[e.v] += e.multiplicity;
            for (int c = 0; c < e.multiplicity; ++c) edge_copies.emplace_back(e.u, e.v);
        }
        pattern_order.resize(t);
        std::iota(pattern_order.begin(), pattern_order.end(), 0);
        std::stable_sort(pattern_order.begin(), pattern_order.end(),
                         [&](int a, int b) { return fdeg[a] > fdeg[b]; });
        host_order.resize(g.vertex_count());
        std::iota(host_order.begin(), host_order.end(), 0);
        std::stable_sort(host_order.begin(), host_order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        image.assign(t, -1);
        used.assign(g.vertex_count(), 0);
        routed.resize(edge_copies.size());
    }

    bool tick() {
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    bool assign(size_t pos) {
        if (pos == pattern_order.size()) return route(0);
        int pv = pattern_order[pos];
        for (int hv : host_order) {
            if (used[hv] || g.degree(hv) < fdeg[pv]) continue;
            if (!tick()) return false;
            image[pv] = hv;
            used[hv] = 1;
            bool found = assign(pos + 1);
            if (!found) {
                image[pv] = -1;
                used[hv] = 0;
            }
            if (found || budget_hit) return found;
        }
        return false;
    }

    bool route(size_t eidx) {
        if (eidx == edge_copies.size()) return true;
        std::vector<int> path{image[edge_copies[eidx].first]};
        return route_dfs(eidx, path, image[edge_copies[eidx].second]);
    }

    bool route_dfs(size_t eidx, std::vector<int>& path, int target) {
        int remaining = spec.s + 2 - static_cast<int>(path.size());
        if (remaining == 0) {
            routed[eidx] = path;
            if (route(eidx + 1)) return true;
            routed[eidx].clear();
            return false;
        }
        for (int nb : g.neighbors(path.back())) {
            if (remaining == 1) {
                if (nb != target) continue;
            } else if (nb == target || used[nb]) {
                continue;
            }
            if (!tick()) return false;
            if (remaining > 1) used[nb] = 1;
            path.push_back(nb);
            bool found = route_dfs(eidx, path, target);
            path.pop_back();
            if (remaining > 1) used[nb] = 0;
            if (found || budget_hit) return found;
        }
        return false;
    }
};

}  // namespace

SubdivisionSearchResult find_subdivision_exact(const SimpleGraph& g, const SubdivisionSpec& spec,
                                               std::uint64_t node_budget) {
    spec.validate();
    SubdivisionSearchResult result;
    if (spec.vertex_count() > g.vertex_count()) {
        result.status = SearchStatus::none_certified;
        return result;
    }
    ExactEmbedder search(g, spec, node_budget);
    bool found = search.assign(0);
    result.nodes = search.nodes;
    if (found) {
        EmbeddingCertificate cert{spec, search.image, search.routed};
        if (!verify_certificate(g, cert))
            throw std::logic_error("find_subdivision_exact: produced an invalid certificate");
        result.status = SearchStatus::found;
        result.certificate = std::move(cert);
    } else {
        result.status =
            search.budget_hit ? SearchStatus::budget_exhausted : SearchStatus::none_certified;
    }
    return result;
}

std::string starve_step_name(StarveStep step) {
    switch (step) {
        case StarveStep::s_too_small: return "S-too-small";
        case StarveStep::no_good_paths: return "no-good-paths";
        case StarveStep::no_pivot: return "no-pivot";
        case StarveStep::distant_filter_emptied: return "distant-filter-emptied";
    }
    return "?";
}

namespace {

// vertices on some walk of exactly gamma edges between a and b, then the
// radius-(4k-gamma-1) ball around them, for every gamma <= 4k-2
std::vector<char> near_walk_mask(const SimpleGraph& g, int a, int b, int k) {
    const int n = g.vertex_count();
    const int max_gamma = 4 * k - 2;
    auto reach_a = exact_length_reach(g, a, max_gamma);
    auto reach_b = exact_length_reach(g, b, max_gamma);
    std::vector<char> mask(n, 0);
    for (int gamma = 1; gamma <= max_gamma; ++gamma) {
        std::vector<int> on_walk;
        for (int w = 0; w < n; ++w) {
            for (int left = 0; left <= gamma; ++left)
                if (reach_a[left][w] && reach_b[gamma - left][w]) {
                    on_walk.push_back(w);
                    break;
                }
        }
        if (on_walk.empty()) continue;
        auto ball = bfs_ball(g, on_walk, 4 * k - gamma - 1);
        for (int w = 0; w < n; ++w)
            if (ball[w]) mask[w] = 1;
    }
    return mask;
}

}  // namespace

GuidedResult find_subdivision_guided(const SimpleGraph& g, int t, int k, double eps,
                                     const ThresholdFamily& family, std::uint64_t path_budget) {
    if (t < 1) throw std::invalid_argument("find_subdivision_guided: t must be >= 1");
    if (k < 1) throw std::invalid_argument("find_subdivision_guided: k must be >= 1");
    if (family.max_len() < 2 * k)
        throw std::invalid_argument("find_subdivision_guided: family must cover length 2k");

    GuidedResult result;
    GuidedState& state = result.state;
    state.k = k;
    state.t = t;
    state.eps = mpq_class(eps);
    state.L = family.L();
    mpq_class factor(3 * pow_integer(5, static_cast<unsigned long>(2 * k)) + 1);
    state.c.push_back(state.eps);
    for (int l = 0; l < t; ++l)
        state.c.push_back(factor * state.c.back() + mpq_class(2 * k) * state.eps);

    const int n = g.vertex_count();
    if (n == 0) {
        result.failure = FailureReport{0, StarveStep::s_too_small, 0, 0, 0, 0, 0};
        return result;
    }
    const mpq_class delta(degree_profile(g).min_degree);

    GoodnessTable table = classify_paths(g, family, 2 * k, path_budget);
    auto good_linked = [&](int u, int w) { return table.good_count(u, w, 2 * k) >= 1; };
    std::uint64_t global_good = 0;
    for (const auto& [pair, count] : table.pair_counts(2 * k))
        global_good += table.good_count(pair.first, pair.second, 2 * k);

    std::vector<int> S(n);
    std::iota(S.begin(), S.end(), 0);
    std::vector<int>& pivots = state.pivots;
    std::vector<char> copy_used(n, 0);  // branch images + path internals so far
    // copy_paths[stage][a] = path from pivots[a] to the pivot added at `stage`
    std::vector<std::vector<std::vector<int>>> copy_paths(t);

    // Lexicographically-first pairwise internally disjoint 2k-paths from
    // every current pivot to y, avoiding the existing copy except at the
    // pivots themselves. Backtracks across paths; null when impossible.
    auto route_to = [&](int y) -> std::optional<std::vector<std::vector<int>>> {
        std::vector<std::vector<int>> routed(pivots.size());
        if (pivots.empty()) return routed;
        std::vector<char> used = copy_used;
        used[y] = 1;
        std::uint64_t nodes = 0;
        const std::uint64_t route_budget = 4'000'000;
        auto dfs = [&](auto&& self, size_t idx, std::vector<int>& path) -> bool {
            int remaining = 2 * k + 1 - static_cast<int>(path.size());
            if (remaining == 0) {
                routed[idx] = path;
                if (idx + 1 == pivots.size()) return true;
                std::vector<int> next{pivots[idx + 1]};
                if (self(self, idx + 1, next)) return true;
                routed[idx].clear();
                return false;
            }
            for (int nb : g.neighbors(path.back())) {
                if (remaining == 1) {
                    if (nb != y) continue;
                } else if (nb == y || used[nb]) {
                    continue;
                }
                if (++nodes > route_budget) return false;
                if (remaining > 1) used[nb] = 1;
                path.push_back(nb);
                bool done = self(self, idx, path);
                path.pop_back();
                if (remaining > 1) used[nb] = 0;
                if (done) return true;
            }
            return false;
        };
        std::vector<int> first{pivots[0]};
        if (dfs(dfs, 0, first)) return routed;
        return std::nullopt;
    };

    for (int stage = 0; stage < t; ++stage) {
        GuidedStageLog log;
        log.stage = stage;
        log.s_size = S.size();
        if (S.empty()) {
            state.stages.push_back(log);
            result.failure = FailureReport{stage, StarveStep::s_too_small, S.size(), 0, 0, 0, 0};
            return result;
        }

        std::vector<char> in_y(n, 0), in_z(n, 0);
        for (size_t a = 0; a < pivots.size(); ++a)
            for (size_t b = a + 1; b < pivots.size(); ++b) {
                auto mask = near_walk_mask(g, pivots[a], pivots[b], k);
                for (int w = 0; w < n; ++w)
                    if (mask[w]) in_y[w] = 1;
            }
        for (int xi : pivots) {
            auto rows = walk_count_rows(g, xi, 4 * k - 2);
            for (int z : S) {
                if (z == xi || in_z[z]) continue;
                for (int i = 1; i <= 4 * k - 2; ++i)
                    if (!leq_half_power(rows[i][z], delta, 2L * i - 4L * k + 1)) {
                        in_z[z] = 1;
                        break;
                    }
            }
        }
        for (int v : S) {
            if (in_y[v]) ++log.y_size;
            if (in_z[v]) ++log.z_size;
        }

        // filter chain: spec filters, then drop Z, then everything off the
        // current copy; the router enforces disjointness in every case
        std::vector<int> s_prime;
        for (int level = 0; level <= 2 && s_prime.empty(); ++level) {
            log.fallback_level = level;
            for (int v : S) {
                if (copy_used[v]) continue;  // pivots and path internals
                if (level == 0 && (in_y[v] || in_z[v])) continue;
                if (level == 1 && in_y[v]) continue;
                s_prime.push_back(v);
            }
        }
        log.s_prime_size = s_prime.size();
        if (s_prime.empty()) {
            state.stages.push_back(log);
            result.failure = FailureReport{stage, StarveStep::distant_filter_emptied, S.size(),
                                           log.y_size, log.z_size, 0, 0};
            return result;
        }

        std::vector<std::uint64_t> score(s_prime.size(), 0);
        std::uint64_t pair_total = 0;
        for (size_t idx = 0; idx < s_prime.size(); ++idx) {
            for (int y : s_prime)
                if (y != s_prime[idx] && good_linked(s_prime[idx], y)) ++score[idx];
            pair_total += score[idx];
        }
        pair_total /= 2;

        std::vector<size_t> order(s_prime.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return score[a] > score[b]; });

        // a zero-score pivot is fine at the last stage only
        if (stage + 1 < t && score[order[0]] == 0) {
            state.stages.push_back(log);
            StarveStep step = global_good == 0 ? StarveStep::no_good_paths : StarveStep::no_pivot;
            result.failure = FailureReport{stage,      step,           S.size(), log.y_size,
                                           log.z_size, s_prime.size(), pair_total};
            return result;
        }

        int pivot = -1;
        std::vector<std::vector<int>> new_paths;
        for (size_t idx : order) {
            if (stage + 1 < t && score[idx] == 0) break;
            auto routed = route_to(s_prime[idx]);
            if (routed) {
                pivot = s_prime[idx];
                new_paths = std::move(*routed);
                log.pivot_score = score[idx];
                break;
            }
        }
        if (pivot == -1) {
            state.stages.push_back(log);
            result.failure = FailureReport{stage,      StarveStep::no_pivot, S.size(), log.y_size,
                                           log.z_size, s_prime.size(),       pair_total};
            return result;
        }
        log.pivot = pivot;

        copy_used[pivot] = 1;
        for (const auto& path : new_paths)
            for (size_t i = 1; i + 1 < path.size(); ++i) copy_used[path[i]] = 1;
        copy_paths[stage] = std::move(new_paths);
        pivots.push_back(pivot);

        std::vector<int> next_s;
        for (int y : s_prime)
            if (y != pivot && good_linked(pivot, y)) next_s.push_back(y);
        S = std::move(next_s);
        state.stages.push_back(log);
    }

    EmbeddingCertificate cert;
    cert.spec = SubdivisionSpec{MultiGraph::complete(t), 2 * k - 1};
    cert.branch_map = pivots;
    // sorted pattern-edge order; the path for (u, v) was stored when pivot v was added
    for (const auto& e : cert.spec.pattern.edges()) cert.paths.push_back(copy_paths[e.v][e.u]);
    if (!verify_certificate(g, cert))
        throw std::logic_error("guided: constructed certificate failed verification");
    result.certificate = std::move(cert);
    return result;
}

namespace {

std::vector<std::vector<int>> walk_sequences_from(const SimpleGraph& g, int start, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> stack{start};
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(stack.size()) == len + 1) {
            out.push_back(stack);
            return;
        }
        for (int nb : g.neighbors(stack.back())) {
            stack.push_back(nb);
            self(self);
            stack.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

}  // namespace

HarvestResult harvest_poor_tuples(const RichnessContext& ctx, const std::vector<int>& S,
                                  std::uint64_t tuple_budget) {
    const SimpleGraph& g = ctx.graph();
    const int n = g.vertex_count();
    const int k = ctx.k();
    std::vector<char> in_s(n, 0);
    for (int v : S) in_s[v] = 1;

    HarvestResult out;
    std::map<std::pair<int, int>, bool> poor_memo;
    auto poor_all = [&](int a, int b) {
        auto it = poor_memo.find({a, b});
        if (it != poor_memo.end()) return it->second;
        bool poor = ctx.is_poor_all(a, b);
        poor_memo.emplace(std::make_pair(a, b), poor);
        return poor;
    };

    for (int center = 0; center < n; ++center) {
        auto halves = walk_sequences_from(g, center, k);
        for (const auto& left : halves) {
            if (!in_s[left.back()]) continue;
            for (const auto& right : halves) {
                if (++out.examined > tuple_budget) {
                    out.complete = false;
                    std::sort(out.tuples.begin(), out.tuples.end());
                    return out;
                }
                if (!in_s[right.back()]) continue;
                if (std::equal(left.begin() + 1, left.end(), right.begin() + 1)) continue;
                bool poor = true;
                for (int l = 1; l <= k && poor; ++l) poor = poor_all(left[l], right[l]);
                if (!poor) continue;
                std::vector<int> tuple(left.rbegin(), left.rend());
                tuple.insert(tuple.end(), right.begin() + 1, right.end());
                out.tuples.push_back(std::move(tuple));
            }
        }
    }
    std::sort(out.tuples.begin(), out.tuples.end());
    return out;
}

bool check_poor_tuple(const RichnessContext& ctx, const std::vector<int>& S,
                      const std::vector<int>& tuple) {
    const int k = ctx.k();
    if (static_cast<int>(tuple.size()) != 2 * k + 1) return false;
    std::vector<char> in_s(ctx.graph().vertex_count(), 0);
    for (int v : S) in_s[v] = 1;
    if (!in_s[tuple.front()] || !in_s[tuple.back()]) return false;
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (!ctx.graph().has_edge(tuple[i], tuple[i + 1])) return false;
    bool halves_differ = false;
    for (int l = 1; l <= k; ++l)
        if (tuple[k - l] != tuple[k + l]) halves_differ = true;
    if (!halves_differ) return false;
    for (int l = 1; l <= k; ++l)
        if (!ctx.is_poor_all(tuple[k - l], tuple[k + l])) return false;
    return true;
}

std::string certificate_to_json(const EmbeddingCertificate& cert) {
    nlohmann::ordered_json j;
    j["branch_map"] = cert.branch_map;
    j["paths"] = cert.paths;
    return j.dump(2) + "\n";
}

EmbeddingCertificate certificate_from_json(const std::string& text,
                                           const SubdivisionSpec& spec) {
    nlohmann::json j = nlohmann::json::parse(text);
    EmbeddingCertificate cert;
    cert.spec = spec;
    cert.branch_map = j.at("branch_map").get<std::vector<int>>();
    cert.paths = j.at("paths").get<std::vector<std::vector<int>>>();
    return cert;
}

}  // namespace subdiv
