#include "scalsup/generator.hpp"

#include <deque>

#include "scalsup/errors.hpp"

namespace scalsup {

Generator Generator::epsilon(EventAlphabet alphabet) {
    Generator g(std::move(alphabet));
    g.add_state("eps");
    return g;
}

Generator Generator::universal(EventAlphabet alphabet) {
    Generator g(std::move(alphabet));
    const auto s = g.add_state("all");
    for (const auto& e : g.alphabet().events()) g.add_transition(s, e, s);
    return g;
}

StateId Generator::add_state(std::string name) {
    const auto id = static_cast<StateId>(delta_.size());
    if (name.empty()) name = std::to_string(id);
    delta_.emplace_back();
    names_.push_back(std::move(name));
    return id;
}

void Generator::check_state(StateId s) const {
    if (s >= delta_.size()) throw InvalidModel("state " + std::to_string(s) + " out of range");
}

void Generator::add_transition(StateId from, const Event& e, StateId to) {
    check_state(from);
    check_state(to);
    if (!alphabet_.contains(e)) throw UnknownEvent("event '" + e + "' is not in the generator alphabet");
    auto [it, inserted] = delta_[from].emplace(e, to);
    if (!inserted && it->second != to)
        throw InvalidModel("nondeterministic transition on '" + e + "' from state " + names_[from]);
}

void Generator::set_initial(StateId s) {
    check_state(s);
    initial_ = s;
}

std::size_t Generator::num_transitions() const {
    std::size_t n = 0;
    for (const auto& m : delta_) n += m.size();
    return n;
}

std::optional<StateId> Generator::next(StateId s, const Event& e) const {
    const auto& m = delta_.at(s);
    const auto it = m.find(e);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::optional<StateId> Generator::run(const Word& w) const {
    if (delta_.empty()) return std::nullopt;
    StateId s = initial_;
    for (const auto& e : w) {
        const auto n = next(s, e);
        if (!n) return std::nullopt;
        s = *n;
    }
    return s;
}

bool Generator::same_structure(const Generator& other) const {
    return alphabet_ == other.alphabet_ && initial_ == other.initial_ && delta_ == other.delta_;
}

NfaGenerator NfaGenerator::from(const Generator& g) {
    NfaGenerator n(g.alphabet());
    for (StateId s = 0; s < g.num_states(); ++s) n.add_state(g.state_name(s));
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (const auto& [e, t] : g.transitions(s)) n.add_transition(s, e, t);
    }
    if (g.num_states() != 0) n.set_initial(g.initial());
    return n;
}

StateId NfaGenerator::add_state(std::string name) {
    const auto id = static_cast<StateId>(delta_.size());
    if (name.empty()) name = std::to_string(id);
    delta_.emplace_back();
    silent_.emplace_back();
    names_.push_back(std::move(name));
    return id;
}

void NfaGenerator::check_state(StateId s) const {
    if (s >= delta_.size()) throw InvalidModel("state " + std::to_string(s) + " out of range");
}

void NfaGenerator::add_transition(StateId from, const Event& e, StateId to) {
    check_state(from);
    check_state(to);
    if (!alphabet_.contains(e)) throw UnknownEvent("event '" + e + "' is not in the generator alphabet");
    delta_[from][e].insert(to);
}

void NfaGenerator::add_silent(StateId from, StateId to) {
    check_state(from);
    check_state(to);
    if (from != to) silent_[from].insert(to);
}

void NfaGenerator::set_initial(StateId s) {
    check_state(s);
    initial_ = s;
}

std::set<StateId> NfaGenerator::silent_closure(std::set<StateId> states) const {
    std::deque<StateId> work(states.begin(), states.end());
    while (!work.empty()) {
        const auto s = work.front();
        work.pop_front();
        for (const auto t : silent_.at(s)) {
            if (states.insert(t).second) work.push_back(t);
        }
    }
    return states;
}

} // namespace scalsup
