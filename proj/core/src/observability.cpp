#include "scalsup/observability.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "scalsup/errors.hpp"

namespace scalsup {
namespace {

constexpr StateId kNone = static_cast<StateId>(-1);

std::optional<StateId> step(const Generator& g, StateId s, const Event& e) {
    if (s == kNone) return std::nullopt;
    return g.next(s, e);
}

StateId step_or_none(const Generator& g, StateId s, const Event& e) {
    const auto n = step(g, s, e);
    return n ? *n : kNone;
}

std::set<Event> event_universe(std::initializer_list<const Generator*> gs, const NaturalProjection& p) {
    std::set<Event> out;
    for (const auto* g : gs) {
        for (const auto& e : g->alphabet().events()) {
            if (!p.domain().contains(e)) throw UnknownEvent("event '" + e + "' is not in the projection domain");
            out.insert(e);
        }
    }
    return out;
}

// Which copies a twin move advances: both (observable), only s, or only s'.
enum class Side : std::uint8_t { both, first, second };

} // namespace

ObservabilityResult check_relative_observability(const Generator& k, const Generator& c, const Generator& l,
                                                 const NaturalProjection& p, std::size_t state_budget) {
    const auto events = event_universe({&k, &c, &l}, p);

    // (K-state of s, C-state of s', L-state of s', K-state of s' or kNone)
    using Node = std::array<StateId, 4>;
    std::map<Node, std::size_t> seen;
    std::vector<Node> nodes;
    std::vector<std::tuple<std::size_t, Side, Event>> parent;

    auto visit = [&](const Node& n, std::size_t from, Side side, const Event& e) {
        if (seen.emplace(n, nodes.size()).second) {
            if (nodes.size() >= state_budget)
                throw ResourceLimit("observability check exceeded the state budget of " + std::to_string(state_budget));
            nodes.push_back(n);
            parent.emplace_back(from, side, e);
        }
    };
    visit({k.initial(), c.initial(), l.initial(), k.initial()}, 0, Side::both, {});

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto [k1, c2, l2, k2] = nodes[i];
        for (const auto& [sigma, _] : k.transitions(k1)) {
            if (!step(l, l2, sigma) || step(k, k2, sigma)) continue;
            ObservabilityWitness w;
            w.sigma = sigma;
            for (auto at = i; at != 0; at = std::get<0>(parent[at])) {
                const auto& [from, side, e] = parent[at];
                if (side != Side::second) w.s.push_back(e);
                if (side != Side::first) w.s_prime.push_back(e);
            }
            std::reverse(w.s.begin(), w.s.end());
            std::reverse(w.s_prime.begin(), w.s_prime.end());
            return {false, std::move(w)};
        }
        for (const auto& e : events) {
            if (p.keeps(e)) {
                const auto nk1 = step(k, k1, e);
                const auto nc2 = step(c, c2, e);
                const auto nl2 = step(l, l2, e);
                if (nk1 && nc2 && nl2) visit({*nk1, *nc2, *nl2, step_or_none(k, k2, e)}, i, Side::both, e);
                continue;
            }
            if (const auto nk1 = step(k, k1, e)) visit({*nk1, c2, l2, k2}, i, Side::first, e);
            const auto nc2 = step(c, c2, e);
            const auto nl2 = step(l, l2, e);
            if (nc2 && nl2) visit({k1, *nc2, *nl2, step_or_none(k, k2, e)}, i, Side::second, e);
        }
    }
    return {true, std::nullopt};
}

ObservabilityResult is_relatively_observable(const ObservabilityInstance& inst) {
    if (const auto kc = contains(inst.c, inst.k); !kc)
        throw PreconditionViolated("K is not contained in C (witness '" + to_string(*kc.counterexample) + "')");
    if (const auto cl = contains(inst.l, inst.c); !cl)
        throw PreconditionViolated("C is not contained in L (witness '" + to_string(*cl.counterexample) + "')");
    return check_relative_observability(inst.k, inst.c, inst.l, inst.projection);
}

ObservabilityResult check_observability(const Generator& k, const Generator& l, const NaturalProjection& p,
                                        std::size_t state_budget) {
    return check_relative_observability(k, k, l, p, state_budget);
}

ObservabilityResult is_observable(const Generator& k, const Generator& l, const NaturalProjection& p) {
    if (const auto kl = contains(l, k); !kl)
        throw PreconditionViolated("K is not contained in L (witness '" + to_string(*kl.counterexample) + "')");
    return check_observability(k, l, p);
}

namespace {

// One pruning round of the supremal computation. The candidate A is composed
// with the observation-indexed set of partner configurations (C-state, L-state,
// A-state or kNone) of every s' in C with the same projection, so that each
// product state fixes whether an outgoing transition violates relative
// observability. Violating transitions are dropped.
struct PruneRound {
    Generator next;
    std::size_t violations = 0;
};

PruneRound prune_once(const Generator& a, const Generator& c, const Generator& l, const NaturalProjection& p,
                      const std::set<Event>& events, const SupOptions& options, std::mt19937_64* rng) {
    using Partner = std::array<StateId, 3>;
    using Estimate = std::vector<Partner>;

    auto close = [&](std::set<Partner> set) {
        std::vector<Partner> work(set.begin(), set.end());
        while (!work.empty()) {
            const auto [pc, pl, pa] = work.back();
            work.pop_back();
            for (const auto& [e, nc] : c.transitions(pc)) {
                if (p.keeps(e)) continue;
                const auto nl = l.next(pl, e);
                if (!nl) continue;
                const Partner q{nc, *nl, step_or_none(a, pa, e)};
                if (set.insert(q).second) work.push_back(q);
            }
        }
        return Estimate(set.begin(), set.end());
    };

    std::map<Estimate, std::size_t> estimate_index;
    std::vector<Estimate> estimates;
    auto intern_estimate = [&](Estimate est) {
        const auto [it, inserted] = estimate_index.emplace(est, estimates.size());
        if (inserted) estimates.push_back(std::move(est));
        return it->second;
    };
    std::map<std::pair<std::size_t, Event>, std::size_t> observe_cache;
    auto observe = [&](std::size_t est, const Event& e) {
        const auto key = std::make_pair(est, e);
        if (const auto it = observe_cache.find(key); it != observe_cache.end()) return it->second;
        std::set<Partner> moved;
        for (const auto& [pc, pl, pa] : estimates[est]) {
            const auto nc = c.next(pc, e);
            const auto nl = l.next(pl, e);
            if (nc && nl) moved.insert({*nc, *nl, step_or_none(a, pa, e)});
        }
        const auto id = intern_estimate(close(std::move(moved)));
        observe_cache.emplace(key, id);
        return id;
    };
    auto violates = [&](std::size_t est, const Event& e) {
        return std::any_of(estimates[est].begin(), estimates[est].end(), [&](const Partner& q) {
            return l.next(q[1], e) && !step(a, q[2], e);
        });
    };

    using Node = std::pair<StateId, std::size_t>;
    std::map<Node, StateId> index;
    std::vector<Node> nodes;
    Generator product(a.alphabet());
    auto intern = [&](Node n) {
        const auto it = index.find(n);
        if (it != index.end()) return it->second;
        const auto id = product.add_state(a.state_name(n.first));
        if (product.num_states() > options.state_budget)
            throw ResourceLimit("supremal observable computation exceeded the state budget of " +
                                std::to_string(options.state_budget));
        index.emplace(n, id);
        nodes.push_back(n);
        return id;
    };

    const auto est0 = intern_estimate(close({{c.initial(), l.initial(), a.initial()}}));
    product.set_initial(intern({a.initial(), est0}));

    struct Edge {
        StateId from;
        Event event;
        StateId to;
    };
    std::vector<Edge> kept;
    std::vector<Edge> violating;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto [as, est] = nodes[i];
        const auto from = static_cast<StateId>(i);
        for (const auto& e : events) {
            const auto na = a.next(as, e);
            if (!na) continue;
            const auto next_est = p.keeps(e) ? observe(est, e) : est;
            const Edge edge{from, e, intern({*na, next_est})};
            (violates(est, e) ? violating : kept).push_back(edge);
        }
    }

    PruneRound round;
    round.violations = violating.size();
    if (rng != nullptr && !violating.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, violating.size() - 1);
        violating.erase(violating.begin() + static_cast<std::ptrdiff_t>(pick(*rng)));
        kept.insert(kept.end(), violating.begin(), violating.end());
    }
    for (const auto& edge : kept) product.add_transition(edge.from, edge.event, edge.to);
    round.next = minimize(product);
    return round;
}

} // namespace

Generator sup_relatively_observable(const Generator& e, const Generator& l, const NaturalProjection& p,
                                    const SupOptions& options) {
    if (const auto el = contains(l, e); !el)
        throw PreconditionViolated("L(e) is not contained in L(l) (witness '" + to_string(*el.counterexample) +
                                   "')");
    const auto events = event_universe({&e, &l}, p);
    std::optional<std::mt19937_64> rng;
    if (options.single_deletion_seed) rng.emplace(*options.single_deletion_seed);

    Generator candidate = minimize(e);
    for (std::size_t round = 0; round < options.max_iterations; ++round) {
        auto pruned = prune_once(candidate, e, l, p, events, options, rng ? &*rng : nullptr);
        if (pruned.violations == 0) return candidate;
        candidate = std::move(pruned.next);
    }
    throw ResourceLimit("supremal observable computation did not converge within " +
                        std::to_string(options.max_iterations) + " rounds");
}

NormalityResult is_gr_normal(const Generator& e, const Generator& g, const RelabelingMap& r) {
    for (const auto* gen : {&e, &g}) {
        for (const auto& ev : gen->alphabet().events()) {
            if (!r.source().contains(ev))
                throw AlphabetMismatch("is_gr_normal: event '" + ev + "' is not in the relabeling source");
        }
    }
    const Generator lifted = selfloop_lift(e, r.source());
    const Generator closure = inverse_relabel_generator(r, relabel_generator(r, lifted));
    const auto verdict = contains(lifted, intersect(closure, g));
    return {verdict.holds, verdict.counterexample};
}

} // namespace scalsup
