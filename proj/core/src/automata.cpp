#include "scalsup/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "scalsup/errors.hpp"

namespace scalsup {
namespace {

void require_states(const Generator& g, const char* what) {
    if (g.num_states() == 0) throw InvalidModel(std::string(what) + ": generator has no states");
}

std::string tuple_name(const std::vector<std::string>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += ',';
        out += parts[i];
    }
    return out + ")";
}

void check_budget(std::size_t n, std::size_t budget, const char* what) {
    if (n > budget)
        throw ResourceLimit(std::string(what) + " exceeded the state budget of " + std::to_string(budget));
}

Word rebuild_path(const std::vector<std::pair<std::size_t, Event>>& parent, std::size_t node) {
    Word w;
    while (node != 0) {
        w.push_back(parent[node].second);
        node = parent[node].first;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

} // namespace

Language closed_language_upto(const Generator& g, std::size_t max_len) {
    require_states(g, "closed_language_upto");
    Language out;
    std::vector<std::pair<StateId, Word>> frontier{{g.initial(), {}}};
    out.insert(Word{});
    for (std::size_t len = 0; len < max_len && !frontier.empty(); ++len) {
        std::vector<std::pair<StateId, Word>> next;
        for (const auto& [s, w] : frontier) {
            for (const auto& [e, t] : g.transitions(s)) {
                Word ext = w;
                ext.push_back(e);
                out.insert(ext);
                next.emplace_back(t, std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

Generator trim(const Generator& g) {
    require_states(g, "trim");
    std::vector<std::optional<StateId>> renum(g.num_states());
    std::vector<StateId> order{g.initial()};
    renum[g.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& [e, t] : g.transitions(order[i])) {
            if (!renum[t]) {
                renum[t] = static_cast<StateId>(order.size());
                order.push_back(t);
            }
        }
    }
    Generator out(g.alphabet());
    for (const auto old : order) out.add_state(g.state_name(old));
    for (StateId i = 0; i < order.size(); ++i) {
        for (const auto& [e, t] : g.transitions(order[i])) out.add_transition(i, e, *renum[t]);
    }
    out.set_initial(0);
    return out;
}

Generator sync_product(std::span<const Generator> gs, std::size_t state_budget) {
    if (gs.empty()) throw PreconditionViolated("sync_product needs at least one operand");
    EventAlphabet sigma;
    for (const auto& g : gs) {
        require_states(g, "sync_product");
        sigma = sigma.merged(g.alphabet());
    }
    if (gs.size() == 1) return trim(gs.front());

    // participants[e] = indices of operands whose alphabet contains e
    std::map<Event, std::vector<std::size_t>> participants;
    for (const auto& e : sigma.events()) {
        for (std::size_t i = 0; i < gs.size(); ++i) {
            if (gs[i].alphabet().contains(e)) participants[e].push_back(i);
        }
    }

    Generator out(sigma);
    std::map<std::vector<StateId>, StateId> index;
    std::deque<std::vector<StateId>> work;

    auto intern = [&](std::vector<StateId> tuple) {
        const auto it = index.find(tuple);
        if (it != index.end()) return it->second;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < gs.size(); ++i) names.push_back(gs[i].state_name(tuple[i]));
        const auto id = out.add_state(tuple_name(names));
        check_budget(out.num_states(), state_budget, "sync_product");
        index.emplace(tuple, id);
        work.push_back(std::move(tuple));
        return id;
    };

    std::vector<StateId> init;
    for (const auto& g : gs) init.push_back(g.initial());
    out.set_initial(intern(init));

    while (!work.empty()) {
        const auto tuple = work.front();
        work.pop_front();
        const auto from = index.at(tuple);
        for (const auto& [e, who] : participants) {
            auto target = tuple;
            bool enabled = true;
            for (const auto i : who) {
                const auto n = gs[i].next(tuple[i], e);
                if (!n) {
                    enabled = false;
                    break;
                }
                target[i] = *n;
            }
            if (enabled) out.add_transition(from, e, intern(std::move(target)));
        }
    }
    return trim(out);
}

Generator sync_product(const Generator& a, const Generator& b, std::size_t state_budget) {
    const std::vector<Generator> pair{a, b};
    return sync_product(pair, state_budget);
}

Generator determinize(const NfaGenerator& n, std::size_t state_budget) {
    if (n.num_states() == 0) throw InvalidModel("determinize: generator has no states");
    Generator out(n.alphabet());
    std::map<std::set<StateId>, StateId> index;
    std::deque<std::set<StateId>> work;

    auto intern = [&](std::set<StateId> subset) {
        const auto it = index.find(subset);
        if (it != index.end()) return it->second;
        std::string name = "{";
        bool first = true;
        for (const auto s : subset) {
            if (!first) name += ',';
            name += n.state_name(s);
            first = false;
        }
        const auto id = out.add_state(name + "}");
        check_budget(out.num_states(), state_budget, "determinize");
        index.emplace(subset, id);
        work.push_back(std::move(subset));
        return id;
    };

    out.set_initial(intern(n.silent_closure({n.initial()})));
    while (!work.empty()) {
        const auto subset = work.front();
        work.pop_front();
        const auto from = index.at(subset);
        std::map<Event, std::set<StateId>> moves;
        for (const auto s : subset) {
            for (const auto& [e, targets] : n.transitions(s)) moves[e].insert(targets.begin(), targets.end());
        }
        for (auto& [e, targets] : moves) {
            out.add_transition(from, e, intern(n.silent_closure(std::move(targets))));
        }
    }
    return trim(out);
}

Generator minimize(const Generator& g) {
    const Generator t = trim(g);
    const auto n = t.num_states();
    std::vector<std::size_t> block(n, 0);
    std::size_t blocks = 1;
    while (true) {
        std::map<std::pair<std::size_t, std::vector<std::pair<Event, std::size_t>>>, std::size_t> sig_index;
        std::vector<std::size_t> refined(n);
        for (StateId s = 0; s < n; ++s) {
            std::vector<std::pair<Event, std::size_t>> sig;
            for (const auto& [e, d] : t.transitions(s)) sig.emplace_back(e, block[d]);
            const auto [it, _] = sig_index.emplace(std::make_pair(block[s], std::move(sig)), sig_index.size());
            refined[s] = it->second;
        }
        const auto refined_count = sig_index.size();
        block = std::move(refined);
        if (refined_count == blocks) break;
        blocks = refined_count;
    }

    Generator q(t.alphabet());
    std::vector<std::optional<StateId>> rep(blocks);
    for (StateId s = 0; s < n; ++s) {
        if (!rep[block[s]]) rep[block[s]] = q.add_state(t.state_name(s));
    }
    for (StateId s = 0; s < n; ++s) {
        for (const auto& [e, d] : t.transitions(s)) q.add_transition(*rep[block[s]], e, *rep[block[d]]);
    }
    q.set_initial(*rep[block[t.initial()]]);
    return trim(q);
}

Containment contains(const Generator& a, const Generator& b) {
    require_states(a, "contains");
    require_states(b, "contains");
    std::map<std::pair<StateId, StateId>, std::size_t> seen;
    std::vector<std::pair<StateId, StateId>> nodes;
    std::vector<std::pair<std::size_t, Event>> parent;

    const auto root = std::make_pair(b.initial(), a.initial());
    seen.emplace(root, 0);
    nodes.push_back(root);
    parent.emplace_back(0, Event{});
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto [sb, sa] = nodes[i];
        for (const auto& [e, tb] : b.transitions(sb)) {
            const auto ta = a.alphabet().contains(e) ? a.next(sa, e) : std::nullopt;
            if (!ta) {
                Word w = rebuild_path(parent, i);
                w.push_back(e);
                return {false, std::move(w)};
            }
            const auto key = std::make_pair(tb, *ta);
            if (seen.emplace(key, nodes.size()).second) {
                nodes.push_back(key);
                parent.emplace_back(i, e);
            }
        }
    }
    return {true, std::nullopt};
}

Generator intersect(const Generator& a, const Generator& b) {
    require_states(a, "intersect");
    require_states(b, "intersect");
    Generator out(a.alphabet().merged(b.alphabet()));
    std::map<std::pair<StateId, StateId>, StateId> index;
    std::deque<std::pair<StateId, StateId>> work;
    auto intern = [&](std::pair<StateId, StateId> p) {
        const auto it = index.find(p);
        if (it != index.end()) return it->second;
        const auto id = out.add_state(tuple_name({a.state_name(p.first), b.state_name(p.second)}));
        index.emplace(p, id);
        work.push_back(p);
        return id;
    };
    out.set_initial(intern({a.initial(), b.initial()}));
    while (!work.empty()) {
        const auto p = work.front();
        work.pop_front();
        const auto from = index.at(p);
        for (const auto& [e, ta] : a.transitions(p.first)) {
            if (!b.alphabet().contains(e)) continue;
            if (const auto tb = b.next(p.second, e)) out.add_transition(from, e, intern({ta, *tb}));
        }
    }
    return trim(out);
}

bool language_equal(const Generator& a, const Generator& b) {
    return contains(a, b).holds && contains(b, a).holds;
}

bool isomorphic(const Generator& a, const Generator& b) {
    return trim(a).same_structure(trim(b));
}

Generator selfloop_lift(const Generator& g, const EventAlphabet& sigma) {
    require_states(g, "selfloop_lift");
    Generator out(g.alphabet().merged(sigma));
    for (StateId s = 0; s < g.num_states(); ++s) out.add_state(g.state_name(s));
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (const auto& [e, t] : g.transitions(s)) out.add_transition(s, e, t);
        for (const auto& e : sigma.events()) {
            if (!g.alphabet().contains(e)) out.add_transition(s, e, s);
        }
    }
    out.set_initial(g.initial());
    return trim(out);
}

} // namespace scalsup
