#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>

#include "scalsup/generator.hpp"

namespace scalsup {

inline constexpr std::size_t kUnlimitedStates = std::numeric_limits<std::size_t>::max();

/// All words of L(g) of length at most `max_len`, in shortlex order.
Language closed_language_upto(const Generator& g, std::size_t max_len);

/// Reachable part of `g`, renumbered breadth-first from the initial state with
/// events visited in lexicographic order. Two deterministic generators are
/// isomorphic iff their trimmed forms have the same structure.
Generator trim(const Generator& g);

/// Synchronous product: shared events synchronize, private events interleave.
/// Throws ConflictingObservability on inconsistent event status and
/// ResourceLimit when more than `state_budget` product states are reached.
Generator sync_product(std::span<const Generator> gs, std::size_t state_budget = kUnlimitedStates);
Generator sync_product(const Generator& a, const Generator& b,
                       std::size_t state_budget = kUnlimitedStates);

/// Subset construction (with silent-move closure).
Generator determinize(const NfaGenerator& n, std::size_t state_budget = kUnlimitedStates);

/// Moore partition refinement. All states are accepting, so two states merge
/// exactly when their future languages coincide.
Generator minimize(const Generator& g);

struct Containment {
    bool holds = true;
    /// Shortest word of L(b) \ L(a), lexicographically least among the shortest.
    std::optional<Word> counterexample;

    explicit operator bool() const { return holds; }
};

/// Decides L(b) subset of L(a).
Containment contains(const Generator& a, const Generator& b);

/// L(a) intersected with L(b) (no interleaving: both operands move on every
/// event). The result alphabet is the union of both alphabets.
Generator intersect(const Generator& a, const Generator& b);

bool language_equal(const Generator& a, const Generator& b);
bool isomorphic(const Generator& a, const Generator& b);

/// Lifts `g` to `sigma` by adding self-loops on every event of `sigma` not in
/// g's alphabet, i.e. the generator of P^{-1}(L(g)).
Generator selfloop_lift(const Generator& g, const EventAlphabet& sigma);

} // namespace scalsup
