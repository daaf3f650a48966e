#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scalsup/alphabet.hpp"

namespace scalsup {

using StateId = std::uint32_t;

/// Deterministic finite-state generator G = (Z, Sigma, delta, z0).
///
/// Every state is accepting: only prefix-closed generated languages are
/// modelled. States are dense integers; the optional names are metadata for
/// reports and never take part in structural comparison.
class Generator {
public:
    Generator() = default;
    explicit Generator(EventAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

    /// One state, no transitions: the language {eps}.
    static Generator epsilon(EventAlphabet alphabet);
    /// One state with a self-loop on every event: Sigma*.
    static Generator universal(EventAlphabet alphabet);

    StateId add_state(std::string name = {});
    /// Throws UnknownEvent for events outside the alphabet and InvalidModel
    /// when (from, e) already has a different target.
    void add_transition(StateId from, const Event& e, StateId to);
    void set_initial(StateId s);

    const EventAlphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return delta_.size(); }
    std::size_t num_transitions() const;
    StateId initial() const { return initial_; }
    const std::string& state_name(StateId s) const { return names_.at(s); }

    const std::map<Event, StateId>& transitions(StateId s) const { return delta_.at(s); }
    std::optional<StateId> next(StateId s, const Event& e) const;
    /// State reached by `w` from the initial state, if defined.
    std::optional<StateId> run(const Word& w) const;
    bool accepts(const Word& w) const { return run(w).has_value(); }

    /// Same alphabet, initial state and transition function (names ignored).
    bool same_structure(const Generator& other) const;

private:
    void check_state(StateId s) const;

    EventAlphabet alphabet_;
    std::vector<std::map<Event, StateId>> delta_;
    std::vector<std::string> names_;
    StateId initial_ = 0;
};

/// Nondeterministic generator with optional silent moves; an intermediate form
/// for relabeling and projection before subset construction.
class NfaGenerator {
public:
    NfaGenerator() = default;
    explicit NfaGenerator(EventAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

    static NfaGenerator from(const Generator& g);

    StateId add_state(std::string name = {});
    void add_transition(StateId from, const Event& e, StateId to);
    void add_silent(StateId from, StateId to);
    void set_initial(StateId s);

    const EventAlphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return delta_.size(); }
    StateId initial() const { return initial_; }
    const std::string& state_name(StateId s) const { return names_.at(s); }
    const std::map<Event, std::set<StateId>>& transitions(StateId s) const { return delta_.at(s); }
    const std::set<StateId>& silent(StateId s) const { return silent_.at(s); }

    /// Closure of `states` under silent moves.
    std::set<StateId> silent_closure(std::set<StateId> states) const;

private:
    void check_state(StateId s) const;

    EventAlphabet alphabet_;
    std::vector<std::map<Event, std::set<StateId>>> delta_;
    std::vector<std::set<StateId>> silent_;
    std::vector<std::string> names_;
    StateId initial_ = 0;
};

} // namespace scalsup
