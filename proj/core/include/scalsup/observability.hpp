#pragma once

#include <cstdint>
#include <optional>

#include "scalsup/automata.hpp"
#include "scalsup/relabel.hpp"

namespace scalsup {

/// K, C, L and the observation map of a relative-observability query.
struct ObservabilityInstance {
    Generator k;
    Generator c;
    Generator l;
    NaturalProjection projection;
};

/// s.sigma in K, s' in C, s'.sigma in L, P(s) = P(s'), but s'.sigma not in K.
struct ObservabilityWitness {
    Word s;
    Word s_prime;
    Event sigma;
};

struct ObservabilityResult {
    bool holds = true;
    std::optional<ObservabilityWitness> witness;

    explicit operator bool() const { return holds; }
};

/// Decides whether L(k) is L(c)-observable with respect to L(l).
///
/// Exact for regular prefix-closed languages: a breadth-first walk over
/// (K-state of s, C-state of s', L-state of s', K-state of s' or none) that
/// synchronizes on observable events and interleaves unobservable ones.
/// No containment between the three languages is assumed. Throws
/// ResourceLimit once the walk visits more than `state_budget` nodes.
ObservabilityResult check_relative_observability(const Generator& k, const Generator& c, const Generator& l,
                                                 const NaturalProjection& p,
                                                 std::size_t state_budget = kUnlimitedStates);

/// Same decision, after validating L(K) in L(C) in L(L); throws
/// PreconditionViolated when the chain fails.
ObservabilityResult is_relatively_observable(const ObservabilityInstance& inst);

/// Standard observability: relative observability with C = K.
ObservabilityResult check_observability(const Generator& k, const Generator& l, const NaturalProjection& p,
                                        std::size_t state_budget = kUnlimitedStates);

/// check_observability with the L(k) in L(l) precondition enforced.
ObservabilityResult is_observable(const Generator& k, const Generator& l, const NaturalProjection& p);

struct SupOptions {
    std::size_t state_budget = kUnlimitedStates;
    std::size_t max_iterations = 100000;
    /// When set, each round removes a single violating transition chosen by a
    /// generator seeded with this value instead of all of them.
    std::optional<std::uint64_t> single_deletion_seed;
};

/// Supremal prefix-closed sublanguage of L(e) that is L(e)-observable with
/// respect to L(l). The reference language stays the original L(e) across
/// iterations. Requires L(e) in L(l) (PreconditionViolated otherwise). The
/// result is minimal and contains at least the empty word.
Generator sup_relatively_observable(const Generator& e, const Generator& l, const NaturalProjection& p,
                                    const SupOptions& options = {});

struct NormalityResult {
    bool holds = true;
    std::optional<Word> counterexample;

    explicit operator bool() const { return holds; }
};

/// (G,R)-normality: R^{-1}R(L(e)) intersected with L(g) is contained in L(e).
/// `e` is interpreted over the whole source alphabet (self-looped on events it
/// does not mention).
NormalityResult is_gr_normal(const Generator& e, const Generator& g, const RelabelingMap& r);

} // namespace scalsup
