#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "scalsup/automata.hpp"

namespace scalsup {

/// Total, surjective event map R: Sigma -> T that preserves observability.
///
/// The source and target identifier sets are disjoint. Surjectivity holds by
/// construction when the target alphabet is derived from the table; the
/// three-argument constructor validates an explicitly given target instead.
class RelabelingMap {
public:
    RelabelingMap() = default;
    RelabelingMap(EventAlphabet source, std::map<Event, Event> table);
    RelabelingMap(EventAlphabet source, EventAlphabet target, std::map<Event, Event> table);

    const EventAlphabet& source() const { return source_; }
    const EventAlphabet& target() const { return target_; }
    const std::map<Event, Event>& table() const { return table_; }

    /// R(e); throws UnknownEvent for events outside the source alphabet.
    const Event& operator()(const Event& e) const;
    /// R^{-1}(tau); throws UnknownEvent for events outside the target alphabet.
    const std::set<Event>& preimage(const Event& tau) const;
    /// R applied to a set of source events.
    std::set<Event> image(const std::set<Event>& events) const;
    /// Target-side alphabet R(a), with observability carried over.
    EventAlphabet image(const EventAlphabet& a) const;

private:
    void build(bool derive_target);

    EventAlphabet source_;
    EventAlphabet target_;
    std::map<Event, Event> table_;
    std::map<Event, std::set<Event>> preimages_;
};

/// Natural projection erasing every event of `domain` outside `kept`.
class NaturalProjection {
public:
    NaturalProjection() = default;
    NaturalProjection(EventAlphabet domain, std::set<Event> kept);

    /// The projection P: Sigma* -> Sigma_o*.
    static NaturalProjection observable(const EventAlphabet& domain);

    const EventAlphabet& domain() const { return domain_; }
    const std::set<Event>& kept() const { return kept_; }
    bool keeps(const Event& e) const { return kept_.count(e) != 0; }
    EventAlphabet codomain() const { return domain_.restricted(kept_); }

private:
    EventAlphabet domain_;
    std::set<Event> kept_;
};

Word project_string(const NaturalProjection& p, const Word& s);
Word relabel_string(const RelabelingMap& r, const Word& s);

/// Deterministic generator of R(L(g)) over R(alphabet of g): each transition is
/// relabeled, then the resulting nondeterministic generator is determinized.
/// Throws AlphabetMismatch when g uses events outside the source alphabet.
Generator relabel_generator(const RelabelingMap& r, const Generator& g,
                            std::size_t state_budget = kUnlimitedStates);

/// Generator of R^{-1}(L(h)) obtained by replacing every tau-transition with one
/// transition per preimage event. State set and numbering are unchanged.
Generator inverse_relabel_generator(const RelabelingMap& r, const Generator& h);

/// Deterministic generator of P(L(g)): dropped events become silent moves and
/// the result is determinized.
Generator project_generator(const NaturalProjection& p, const Generator& g);

struct RpCommutation {
    bool holds = true;
    /// Group index and word s in Sigma_i* on which the two images differ.
    std::optional<std::pair<std::size_t, Word>> witness;

    explicit operator bool() const { return holds; }
};

/// Bounded comparison of R(P_i^{-1}(s)) and P_{R,i}^{-1}(R(s)) for every group
/// alphabet Sigma_i and every s in Sigma_i* with |s| <= max_len, both sides
/// truncated at length max_len. Throws PreconditionViolated when the group
/// alphabets are not local with respect to R.
RpCommutation check_rp_commutation(const RelabelingMap& r, const std::vector<std::set<Event>>& groups,
                                   std::size_t max_len);

} // namespace scalsup
