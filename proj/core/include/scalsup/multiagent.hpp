#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scalsup/automata.hpp"
#include "scalsup/observability.hpp"
#include "scalsup/relabel.hpp"
#include "scalsup/verdict.hpp"

namespace scalsup {

/// Group G_i of isomorphic agents and its template parallelism k_i.
struct AgentGroup {
    std::string name;
    std::vector<Generator> agents;
    std::size_t k = 1;

    std::size_t size() const { return agents.size(); }
};

enum class SefMode { on, off, automatic };

const char* to_string(SefMode m);

struct ModelOptions {
    SefMode sef_mode = SefMode::automatic;
    std::size_t state_budget = 1'000'000;
};

/// Groups of agents, the relabeling R and the specification E.
///
/// The constructor validates every invariant: k_i in [1, n_i], relabeled
/// agents language-equal to the group template, group alphabets mapped onto
/// a common T_i, locality of R, spec alphabet inside Sigma, and (when
/// sef_mode is on) pairwise disjoint agent alphabets within each group.
/// Violations throw InvalidModel naming the offending group.
class MultiAgentModel {
public:
    MultiAgentModel(std::vector<AgentGroup> groups, RelabelingMap relabeling, Generator spec,
                    ModelOptions options = {});

    /// Skips validation. Only intended for probing which agents the pipeline reads.
    static MultiAgentModel unchecked(std::vector<AgentGroup> groups, RelabelingMap relabeling, Generator spec,
                                     ModelOptions options = {});

    const std::vector<AgentGroup>& groups() const { return groups_; }
    const RelabelingMap& relabeling() const { return relabeling_; }
    const ModelOptions& options() const { return options_; }
    const EventAlphabet& sigma() const { return relabeling_.source(); }
    const EventAlphabet& target() const { return relabeling_.target(); }

    /// The specification generator as supplied.
    const Generator& spec() const { return spec_; }
    /// E over the whole of Sigma (self-looped on events the spec does not mention).
    const Generator& lifted_spec() const { return lifted_spec_; }

    /// Sigma_i, the union of the agent alphabets of group i.
    std::set<Event> group_events(std::size_t i) const;
    /// T_i = R(Sigma_i).
    std::set<Event> template_events(std::size_t i) const;

    /// Non-fatal findings of validation (e.g. shared events inside a group in
    /// automatic SEF mode).
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// Copy with k_i overridden for the named group. Throws InvalidModel for
    /// unknown groups or out-of-range k.
    MultiAgentModel with_k(const std::string& group, std::size_t k) const;

private:
    struct NoValidation {};
    MultiAgentModel(std::vector<AgentGroup> groups, RelabelingMap relabeling, Generator spec,
                    ModelOptions options, NoValidation);
    void validate();

    std::vector<AgentGroup> groups_;
    RelabelingMap relabeling_;
    Generator spec_;
    Generator lifted_spec_;
    ModelOptions options_;
    std::vector<std::string> warnings_;
};

/// M_i = R(G_{i_1} || ... || G_{i_k}). Reads only the first k_i agents.
Generator build_template(const AgentGroup& group, const RelabelingMap& r,
                         std::size_t state_budget = kUnlimitedStates);

/// M = M_1 || ... || M_l.
Generator build_relabeled_plant(const MultiAgentModel& m);
Generator build_relabeled_plant(std::span<const Generator> templates, std::size_t state_budget);

/// Full plant G = ||_i ||_j G_{i_j}. Throws ResourceLimit past the state budget.
Generator build_plant(const MultiAgentModel& m);

struct Comparison {
    /// L(SSUP_o) and L(G) contained in L(SUP_o).
    Containment safety;
    /// L(SUP_o) contained in L(SSUP_o) and L(G).
    Containment permissiveness;
    std::size_t ssup_states = 0;
    std::size_t sup_states = 0;
    std::size_t plant_states = 0;

    bool equal() const { return safety.holds && permissiveness.holds; }
};

struct SynthesisReport {
    std::vector<Generator> templates;    // M_i
    Generator relabeled_plant;           // M
    Generator relabeled_spec;            // F = R(E)
    Generator relabeled_supervisor;      // RSUP_o
    Generator scalable_supervisor;       // SSUP_o = R^{-1}(RSUP_o)
    std::vector<ConditionVerdict> condition_verdicts;
    std::optional<Comparison> comparison;
    /// Number of agents of each group the pipeline composed.
    std::vector<std::size_t> agents_touched;
    std::vector<std::string> warnings;
};

/// Scalable pipeline: templates, relabeled plant, relabeled specification,
/// supremal relatively observable relabeled supervisor computed over
/// F intersected with L(M) (reference F), and its inverse relabeling.
/// Also records the scalable condition verdicts (SEF, normality, safety
/// pairwise condition). A non-normal spec yields a warning, not an error.
SynthesisReport synthesize_scalable(const MultiAgentModel& m);

/// SUP_o = sup O(E and L(G), L(G)) over the full plant.
Generator synthesize_monolithic(const MultiAgentModel& m);
Generator synthesize_monolithic(const MultiAgentModel& m, const Generator& plant);

/// Safety and permissiveness containments.
Comparison compare_supervisors(const MultiAgentModel& m, const SynthesisReport& rep);
Comparison compare_supervisors(const Generator& plant, const Generator& monolithic, const SynthesisReport& rep);

} // namespace scalsup
