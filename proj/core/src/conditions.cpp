#include "scalsup/conditions.hpp"

#include <array>
#include <map>

#include "scalsup/errors.hpp"

namespace scalsup {

const char* to_string(CheckMethod m) {
    switch (m) {
    case CheckMethod::structural: return "structural";
    case CheckMethod::pairwise_reduction: return "pairwise-reduction";
    case CheckMethod::twin_check: return "twin-check";
    case CheckMethod::bounded_oracle: return "bounded-oracle";
    case CheckMethod::exact: return "exact";
    }
    return "?";
}

namespace {

constexpr std::size_t kEnumerationCap = 2'000'000;

void attach(ConditionVerdict& v, const ObservabilityWitness& w) {
    v.witness.emplace_back("s", to_string(w.s));
    v.witness.emplace_back("s_prime", to_string(w.s_prime));
    v.witness.emplace_back("sigma", w.sigma);
}

bool sef_enabled(const MultiAgentModel& m) {
    return m.options().sef_mode != SefMode::off && check_sef(m).holds;
}

Language bounded_language(const Generator& g, std::size_t max_len) {
    // closed_language_upto is exponential in max_len; guard before expanding.
    std::vector<std::size_t> counts(g.num_states(), 1);
    std::size_t total = 1;
    for (std::size_t len = 0; len < max_len; ++len) {
        std::vector<std::size_t> next(g.num_states(), 0);
        for (StateId s = 0; s < g.num_states(); ++s) {
            for (const auto& [e, t] : g.transitions(s)) next[s] = std::min(kEnumerationCap, next[s] + counts[t]);
        }
        counts = std::move(next);
        total += counts[g.initial()];
        if (total > kEnumerationCap)
            throw ResourceLimit("bounded enumeration exceeds " + std::to_string(kEnumerationCap) + " words");
    }
    return closed_language_upto(g, max_len);
}

} // namespace

ConditionVerdict check_sef(const MultiAgentModel& m) {
    ConditionVerdict v{"sef", true, CheckMethod::exact, {}, {}, {}};
    for (const auto& g : m.groups()) {
        for (std::size_t j = 0; j < g.agents.size(); ++j) {
            for (std::size_t jj = j + 1; jj < g.agents.size(); ++jj) {
                for (const auto& e : g.agents[j].alphabet().events()) {
                    if (!g.agents[jj].alphabet().contains(e)) continue;
                    v.holds = false;
                    v.witness = {{"group", g.name},
                                 {"agent", std::to_string(j + 1)},
                                 {"other_agent", std::to_string(jj + 1)},
                                 {"event", e}};
                    return v;
                }
            }
        }
    }
    return v;
}

ConditionVerdict check_normality(const MultiAgentModel& m) {
    ConditionVerdict v{"normality", true, CheckMethod::structural, {}, {}, {}};
    const auto& r = m.relabeling();
    const Generator& e = m.lifted_spec();
    if (language_equal(e, inverse_relabel_generator(r, relabel_generator(r, e)))) {
        v.note = "E = R^{-1}R(E)";
        return v;
    }
    v.method = CheckMethod::exact;
    const auto normal = is_gr_normal(e, build_plant(m), r);
    v.holds = normal.holds;
    if (!normal.holds) v.witness.emplace_back("s", to_string(*normal.counterexample));
    return v;
}

ConditionVerdict check_safety_condition_direct(const MultiAgentModel& m) {
    ConditionVerdict v{"safety_condition", true, CheckMethod::twin_check, {}, {}, {}};
    const auto& r = m.relabeling();
    const auto budget = m.options().state_budget;
    const Generator plant = build_plant(m);
    const Generator relabeled_plant = relabel_generator(r, plant, budget);
    const Generator reference = relabel_generator(r, intersect(m.lifted_spec(), plant), budget);
    const auto res = check_relative_observability(build_relabeled_plant(m), reference, relabeled_plant,
                                                  NaturalProjection::observable(m.target()), budget);
    v.holds = res.holds;
    if (!res.holds) attach(v, *res.witness);
    v.note = "direct check on the full plant; controllability is not part of this condition";
    return v;
}

ConditionVerdict check_safety_condition(const MultiAgentModel& m) {
    if (!check_sef(m).holds) {
        try {
            return check_safety_condition_direct(m);
        } catch (const ResourceLimit& e) {
            throw PreconditionViolated(std::string("SEF fails and the direct check is out of budget: ") + e.what());
        }
    }
    ConditionVerdict v{"safety_condition", true, CheckMethod::pairwise_reduction, {}, {}, {}};
    v.note = "relative observability only; controllability is not part of this condition";
    const auto& r = m.relabeling();
    for (std::size_t i = 0; i < m.groups().size(); ++i) {
        const auto& g = m.groups()[i];
        const Generator h = relabel_generator(r, g.agents.front());
        const Generator pair = g.agents.size() >= 2 ? sync_product(g.agents[0], g.agents[1]) : g.agents[0];
        const auto& pair_events = pair.alphabet().events();

        // P_i(E) restricted to the pair alphabet: E-strings that use no event of
        // the other agents of the group, projected onto the pair's events.
        const auto sigma_i = m.group_events(i);
        const Generator& e = m.lifted_spec();
        Generator restricted(e.alphabet());
        for (StateId s = 0; s < e.num_states(); ++s) restricted.add_state(e.state_name(s));
        for (StateId s = 0; s < e.num_states(); ++s) {
            for (const auto& [ev, t] : e.transitions(s)) {
                if (sigma_i.count(ev) != 0 && pair_events.count(ev) == 0) continue;
                restricted.add_transition(s, ev, t);
            }
        }
        restricted.set_initial(e.initial());
        const Generator projected = project_generator(NaturalProjection(e.alphabet(), pair_events), restricted);

        const Generator reference = relabel_generator(r, intersect(projected, pair));
        const Generator ambient = relabel_generator(r, pair);
        const auto res =
            check_relative_observability(h, reference, ambient, NaturalProjection::observable(ambient.alphabet()));
        v.details.emplace_back(g.name, res.holds);
        if (!res.holds && v.holds) {
            v.holds = false;
            v.witness.emplace_back("group", g.name);
            attach(v, *res.witness);
        }
    }
    return v;
}

ConditionVerdict check_roc(const MultiAgentModel& m, CheckMode mode, std::size_t max_len) {
    if (mode == CheckMode::structural && sef_enabled(m))
        return {"roc", true, CheckMethod::structural, {}, {}, "holds under SEF"};

    ConditionVerdict v{"roc", true, CheckMethod::bounded_oracle, {}, {}, {}};
    v.note = "bounded search up to length " + std::to_string(max_len);
    const auto& r = m.relabeling();
    const auto p = NaturalProjection::observable(m.sigma());
    const auto p_r = NaturalProjection::observable(m.target());
    const Language lang = bounded_language(build_plant(m), max_len);

    // (R(s'), P(s')) pairs realized by plant strings; R is length-preserving, so
    // every s' with R(s') = t' has |s'| = |t'| <= max_len.
    std::set<std::pair<Word, Word>> realized;
    std::map<Word, std::set<Word>> targets_by_observation;
    for (const auto& s : lang) {
        auto t = relabel_string(r, s);
        realized.emplace(t, project_string(p, s));
        targets_by_observation[project_string(p_r, t)].insert(std::move(t));
    }
    for (const auto& s : lang) {
        const auto obs = project_string(p, s);
        const auto it = targets_by_observation.find(project_string(p_r, relabel_string(r, s)));
        if (it == targets_by_observation.end()) continue;
        for (const auto& t : it->second) {
            if (realized.count({t, obs}) != 0) continue;
            v.holds = false;
            v.witness = {{"s", to_string(s)}, {"t_prime", to_string(t)}};
            return v;
        }
    }
    return v;
}

ConditionVerdict check_lroc(const MultiAgentModel& m) {
    ConditionVerdict v{"lroc", true, CheckMethod::twin_check, {}, {}, {}};
    const auto& r = m.relabeling();
    const auto& sigma = m.sigma();

    // (b, b') unobservable, same relabeled image, from different agents of a group.
    std::vector<std::pair<Event, Event>> candidates;
    for (const auto& g : m.groups()) {
        for (std::size_t j = 0; j < g.agents.size(); ++j) {
            for (std::size_t jj = 0; jj < g.agents.size(); ++jj) {
                if (j == jj) continue;
                for (const auto& b : g.agents[j].alphabet().events()) {
                    if (sigma.is_observable(b)) continue;
                    for (const auto& bp : g.agents[jj].alphabet().events()) {
                        if (sigma.is_observable(bp) || b == bp || r(b) != r(bp)) continue;
                        candidates.emplace_back(b, bp);
                    }
                }
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) {
        v.note = "no cross-agent unobservable pairs";
        return v;
    }

    const Generator plant = build_plant(m);
    using Node = std::array<StateId, 2>;
    std::map<Node, std::size_t> seen;
    std::vector<Node> nodes;
    std::vector<std::tuple<std::size_t, int, Event>> parent;  // side: 0 both, 1 s, 2 s'
    auto visit = [&](Node n, std::size_t from, int side, const Event& e) {
        if (seen.emplace(n, nodes.size()).second) {
            if (nodes.size() >= m.options().state_budget)
                throw ResourceLimit("LROC check exceeded the state budget of " +
                                    std::to_string(m.options().state_budget));
            nodes.push_back(n);
            parent.emplace_back(from, side, e);
        }
    };
    visit({plant.initial(), plant.initial()}, 0, 0, {});
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto [x, y] = nodes[i];
        for (const auto& [b, bp] : candidates) {
            if (!plant.next(x, b) || !plant.next(y, bp) || plant.next(y, b)) continue;
            Word s;
            Word sp;
            for (auto at = i; at != 0; at = std::get<0>(parent[at])) {
                const auto& [from, side, e] = parent[at];
                if (side != 2) s.push_back(e);
                if (side != 1) sp.push_back(e);
            }
            std::reverse(s.begin(), s.end());
            std::reverse(sp.begin(), sp.end());
            v.holds = false;
            v.witness = {{"s", to_string(s)}, {"s_prime", to_string(sp)}, {"b", b}, {"b_prime", bp}};
            return v;
        }
        for (const auto& e : sigma.events()) {
            const auto nx = plant.next(x, e);
            const auto ny = plant.next(y, e);
            if (sigma.is_observable(e)) {
                if (nx && ny) visit({*nx, *ny}, i, 0, e);
                continue;
            }
            if (nx) visit({*nx, y}, i, 1, e);
            if (ny) visit({x, *ny}, i, 2, e);
        }
    }
    return v;
}

ConditionVerdict check_m_in_rg(const MultiAgentModel& m, CheckMode mode, std::size_t max_len) {
    if (mode == CheckMode::structural && sef_enabled(m))
        return {"m_in_rg", true, CheckMethod::structural, {}, {}, "holds under SEF"};

    ConditionVerdict v{"m_in_rg", true, CheckMethod::bounded_oracle, {}, {}, {}};
    v.note = "bounded check up to length " + std::to_string(max_len);
    const Generator relabeled_plant =
        relabel_generator(m.relabeling(), build_plant(m), m.options().state_budget);
    for (const auto& t : bounded_language(build_relabeled_plant(m), max_len)) {
        if (relabeled_plant.accepts(t)) continue;
        v.holds = false;
        v.witness = {{"t", to_string(t)}};
        return v;
    }
    return v;
}

ConditionVerdict check_observability_chain(const MultiAgentModel& m) {
    const auto& r = m.relabeling();
    const auto budget = m.options().state_budget;
    const Generator plant = build_plant(m);
    if (const auto normal = is_gr_normal(m.lifted_spec(), plant, r); !normal)
        throw PreconditionViolated("E is not (G,R)-normal (witness '" + to_string(*normal.counterexample) + "')");

    const auto p = NaturalProjection::observable(m.sigma());
    const auto p_r = NaturalProjection::observable(m.target());
    const Generator relabeled_plant = relabel_generator(r, plant, budget);
    const Generator templates = build_relabeled_plant(m);
    const Generator relabeled_spec = relabel_generator(r, m.lifted_spec(), budget);

    const auto h1 = check_observability(templates, relabeled_plant, p_r, budget);
    const auto h2 = check_observability(relabeled_spec, templates, p_r, budget);
    const auto conclusion = check_observability(intersect(m.lifted_spec(), plant), plant, p, budget);

    ConditionVerdict v{"observability_chain", h1.holds && h2.holds && conclusion.holds, CheckMethod::twin_check, {}, {}, {}};
    v.details = {{"m_observable_wrt_rg", h1.holds},
                 {"re_observable_wrt_m", h2.holds},
                 {"conclusion_e_observable_wrt_g", conclusion.holds}};
    if (!h1.holds) {
        v.witness.emplace_back("failed", "m_observable_wrt_rg");
        attach(v, *h1.witness);
    } else if (!h2.holds) {
        v.witness.emplace_back("failed", "re_observable_wrt_m");
        attach(v, *h2.witness);
    } else if (!conclusion.holds) {
        v.witness.emplace_back("failed", "conclusion_e_observable_wrt_g");
        attach(v, *conclusion.witness);
        v.note = "hypotheses hold but the conclusion fails";
    }
    return v;
}

} // namespace scalsup
