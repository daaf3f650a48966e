#include "scalsup/multiagent.hpp"

#include <algorithm>

#include "scalsup/conditions.hpp"
#include "scalsup/errors.hpp"

namespace scalsup {

const char* to_string(SefMode m) {
    switch (m) {
    case SefMode::on: return "on";
    case SefMode::off: return "off";
    case SefMode::automatic: return "auto";
    }
    return "?";
}

MultiAgentModel::MultiAgentModel(std::vector<AgentGroup> groups, RelabelingMap relabeling, Generator spec,
                                 ModelOptions options)
    : MultiAgentModel(std::move(groups), std::move(relabeling), std::move(spec), options, NoValidation{}) {
    validate();
}

MultiAgentModel::MultiAgentModel(std::vector<AgentGroup> groups, RelabelingMap relabeling, Generator spec,
                                 ModelOptions options, NoValidation)
    : groups_(std::move(groups)), relabeling_(std::move(relabeling)), spec_(std::move(spec)), options_(options) {
    if (spec_.num_states() == 0) throw InvalidModel("specification generator has no states");
    for (const auto& e : spec_.alphabet().events()) {
        if (!sigma().contains(e)) throw InvalidModel("specification event '" + e + "' is not in Sigma");
    }
    lifted_spec_ = selfloop_lift(spec_, sigma());
}

MultiAgentModel MultiAgentModel::unchecked(std::vector<AgentGroup> groups, RelabelingMap relabeling, Generator spec,
                                           ModelOptions options) {
    return MultiAgentModel(std::move(groups), std::move(relabeling), std::move(spec), options, NoValidation{});
}

void MultiAgentModel::validate() {
    if (groups_.empty()) throw InvalidModel("model has no groups");
    std::set<Event> covered;
    for (const auto& g : groups_) {
        if (g.agents.empty()) throw InvalidModel("group '" + g.name + "' has no agents");
        if (g.k < 1 || g.k > g.agents.size())
            throw InvalidModel("group '" + g.name + "': k = " + std::to_string(g.k) + " is outside [1, " +
                               std::to_string(g.agents.size()) + "]");
        for (const auto& a : g.agents) {
            if (a.num_states() == 0) throw InvalidModel("group '" + g.name + "' has an agent without states");
            for (const auto& e : a.alphabet().events()) {
                if (!sigma().contains(e) || sigma().is_observable(e) != a.alphabet().is_observable(e))
                    throw InvalidModel("group '" + g.name + "': agent event '" + e +
                                       "' is not in Sigma with matching observability");
                covered.insert(e);
            }
        }
    }
    for (const auto& e : sigma().events()) {
        if (covered.count(e) == 0) throw InvalidModel("event '" + e + "' belongs to no agent");
    }

    for (std::size_t i = 0; i < groups_.size(); ++i) {
        const auto& g = groups_[i];
        const auto t_i = relabeling_.image(g.agents.front().alphabet().events());
        const Generator h = relabel_generator(relabeling_, g.agents.front());
        for (std::size_t j = 1; j < g.agents.size(); ++j) {
            if (relabeling_.image(g.agents[j].alphabet().events()) != t_i)
                throw InvalidModel("group '" + g.name + "': agent " + std::to_string(j + 1) +
                                   " does not relabel onto the group template alphabet");
            if (!language_equal(h, relabel_generator(relabeling_, g.agents[j])))
                throw InvalidModel("group '" + g.name + "': agent " + std::to_string(j + 1) +
                                   " does not relabel to the group template");
        }
        const auto sigma_i = group_events(i);
        for (const auto& e : sigma().events()) {
            if ((sigma_i.count(e) != 0) != (t_i.count(relabeling_(e)) != 0))
                throw InvalidModel("relabeling does not preserve the local status of '" + e + "' for group '" +
                                   g.name + "'");
        }
        for (std::size_t j = 0; j < g.agents.size(); ++j) {
            for (std::size_t jj = j + 1; jj < g.agents.size(); ++jj) {
                for (const auto& e : g.agents[j].alphabet().events()) {
                    if (!g.agents[jj].alphabet().contains(e)) continue;
                    const auto msg = "group '" + g.name + "': agents " + std::to_string(j + 1) + " and " +
                                     std::to_string(jj + 1) + " share event '" + e + "'";
                    if (options_.sef_mode == SefMode::on) throw InvalidModel(msg);
                    warnings_.push_back(msg);
                }
            }
        }
    }
}

std::set<Event> MultiAgentModel::group_events(std::size_t i) const {
    std::set<Event> out;
    for (const auto& a : groups_.at(i).agents) out.insert(a.alphabet().events().begin(), a.alphabet().events().end());
    return out;
}

std::set<Event> MultiAgentModel::template_events(std::size_t i) const {
    return relabeling_.image(group_events(i));
}

MultiAgentModel MultiAgentModel::with_k(const std::string& group, std::size_t k) const {
    auto groups = groups_;
    const auto it = std::find_if(groups.begin(), groups.end(), [&](const AgentGroup& g) { return g.name == group; });
    if (it == groups.end()) throw InvalidModel("unknown group '" + group + "'");
    it->k = k;
    return MultiAgentModel(std::move(groups), relabeling_, spec_, options_);
}

Generator build_template(const AgentGroup& group, const RelabelingMap& r, std::size_t state_budget) {
    if (group.k < 1 || group.k > group.agents.size())
        throw InvalidModel("group '" + group.name + "': k is outside [1, n]");
    const std::span<const Generator> first(group.agents.data(), group.k);
    return relabel_generator(r, sync_product(first, state_budget), state_budget);
}

Generator build_relabeled_plant(std::span<const Generator> templates, std::size_t state_budget) {
    return sync_product(templates, state_budget);
}

Generator build_relabeled_plant(const MultiAgentModel& m) {
    std::vector<Generator> templates;
    for (const auto& g : m.groups()) templates.push_back(build_template(g, m.relabeling(), m.options().state_budget));
    return build_relabeled_plant(templates, m.options().state_budget);
}

Generator build_plant(const MultiAgentModel& m) {
    std::vector<Generator> agents;
    for (const auto& g : m.groups()) agents.insert(agents.end(), g.agents.begin(), g.agents.end());
    return sync_product(agents, m.options().state_budget);
}

SynthesisReport synthesize_scalable(const MultiAgentModel& m) {
    const auto budget = m.options().state_budget;
    SynthesisReport rep;
    for (const auto& g : m.groups()) {
        rep.templates.push_back(build_template(g, m.relabeling(), budget));
        rep.agents_touched.push_back(g.k);
    }
    rep.relabeled_plant = build_relabeled_plant(rep.templates, budget);
    rep.relabeled_spec = relabel_generator(m.relabeling(), m.lifted_spec(), budget);

    // RSUP_o over F and L(M).
    const auto p_r = NaturalProjection::observable(m.target());
    SupOptions opts;
    opts.state_budget = budget;
    rep.relabeled_supervisor = sup_relatively_observable(intersect(rep.relabeled_spec, rep.relabeled_plant),
                                                         rep.relabeled_plant, p_r, opts);
    rep.scalable_supervisor = inverse_relabel_generator(m.relabeling(), rep.relabeled_supervisor);

    rep.condition_verdicts.push_back(check_sef(m));
    try {
        auto normal = check_normality(m);
        if (!normal.holds) rep.warnings.push_back("SpecNotNormal: E is not (G,R)-normal; the safety guarantee does not apply");
        rep.condition_verdicts.push_back(std::move(normal));
    } catch (const ResourceLimit& e) {
        rep.warnings.push_back(std::string("normality undetermined: ") + e.what());
    }
    try {
        rep.condition_verdicts.push_back(check_safety_condition(m));
    } catch (const PreconditionViolated& e) {
        rep.warnings.push_back(std::string("safety condition undetermined: ") + e.what());
    }
    rep.warnings.insert(rep.warnings.end(), m.warnings().begin(), m.warnings().end());
    return rep;
}

Generator synthesize_monolithic(const MultiAgentModel& m, const Generator& plant) {
    SupOptions opts;
    opts.state_budget = m.options().state_budget;
    return sup_relatively_observable(intersect(m.lifted_spec(), plant), plant, NaturalProjection::observable(m.sigma()),
                                     opts);
}

Generator synthesize_monolithic(const MultiAgentModel& m) {
    return synthesize_monolithic(m, build_plant(m));
}

Comparison compare_supervisors(const Generator& plant, const Generator& monolithic, const SynthesisReport& rep) {
    const Generator controlled = intersect(rep.scalable_supervisor, plant);
    Comparison c;
    c.safety = contains(monolithic, controlled);
    c.permissiveness = contains(controlled, monolithic);
    c.ssup_states = rep.scalable_supervisor.num_states();
    c.sup_states = monolithic.num_states();
    c.plant_states = plant.num_states();
    return c;
}

Comparison compare_supervisors(const MultiAgentModel& m, const SynthesisReport& rep) {
    const Generator plant = build_plant(m);
    return compare_supervisors(plant, synthesize_monolithic(m, plant), rep);
}

} // namespace scalsup
