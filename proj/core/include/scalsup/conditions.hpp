#pragma once

#include "scalsup/multiagent.hpp"
#include "scalsup/verdict.hpp"

namespace scalsup {

enum class CheckMode { structural, bounded };

/// Agents inside each group have pairwise disjoint alphabets.
ConditionVerdict check_sef(const MultiAgentModel& m);

/// (G,R)-normality of the specification. Holds structurally when
/// E = R^{-1}R(E); otherwise decided exactly against the full plant.
ConditionVerdict check_normality(const MultiAgentModel& m);

/// Sufficient condition for safety through the two-agent reduction: for each group, L(H_i)
/// relatively observable with respect to R(P_i(E) and L(G_{i_1}||G_{i_2})) and
/// R(L(G_{i_1}||G_{i_2})). Never builds the full plant. When SEF fails the
/// direct check is used instead; if that exceeds the state budget,
/// PreconditionViolated is thrown.
ConditionVerdict check_safety_condition(const MultiAgentModel& m);

/// Sufficient condition for safety checked directly on the full plant: L(M) relatively
/// observable with respect to R(E and L(G)) and R(L(G)).
ConditionVerdict check_safety_condition_direct(const MultiAgentModel& m);

/// Relabeling observational consistency. Structural mode returns true under
/// SEF (and falls back to the bounded search otherwise); bounded mode searches
/// every s in L(G), t' in R(L(G)) up to `max_len` for the required s'.
ConditionVerdict check_roc(const MultiAgentModel& m, CheckMode mode, std::size_t max_len);

/// Local relabeling observational consistency, decided by a twin-plant walk
/// over L(G) x L(G) synchronized on observable events.
ConditionVerdict check_lroc(const MultiAgentModel& m);

/// L(M) contained in R(L(G)). Structural under SEF; bounded mode checks every
/// t in L(M) with |t| <= max_len against the relabeled plant.
ConditionVerdict check_m_in_rg(const MultiAgentModel& m, CheckMode mode, std::size_t max_len);

/// Observability chain: L(M) observable wrt R(L(G)), R(E) observable wrt L(M), and
/// the conclusion E and L(G) observable wrt L(G). Throws PreconditionViolated
/// when E is not (G,R)-normal.
ConditionVerdict check_observability_chain(const MultiAgentModel& m);

} // namespace scalsup
