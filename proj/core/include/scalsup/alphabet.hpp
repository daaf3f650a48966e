#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scalsup {

using Event = std::string;
using Word = std::vector<Event>;

/// Dot-separated rendering of a word; the empty word renders as "".
std::string to_string(const Word& w);

/// Inverse of to_string. An empty input yields the empty word.
Word parse_word(std::string_view text);

/// Shortlex order: shorter words first, ties broken lexicographically.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const;
};

using Language = std::set<Word, ShortLex>;

/// Finite event set partitioned into observable and unobservable events.
class EventAlphabet {
public:
    EventAlphabet() = default;

    /// Builds an alphabet from the full event list and the unobservable subset.
    /// Throws InvalidModel on empty identifiers or unobservable events that are
    /// not listed in `events`.
    static EventAlphabet from_unobservable(const std::vector<Event>& events,
                                           const std::vector<Event>& unobservable);

    /// Adds an event. Re-adding with the same status is a no-op; re-adding with
    /// the opposite status throws ConflictingObservability.
    void add(const Event& e, bool observable);

    bool contains(const Event& e) const { return events_.count(e) != 0; }
    bool is_observable(const Event& e) const { return observable_.count(e) != 0; }

    const std::set<Event>& events() const { return events_; }
    const std::set<Event>& observable() const { return observable_; }
    std::set<Event> unobservable() const;

    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    /// Union of two alphabets; shared events must agree on observability.
    EventAlphabet merged(const EventAlphabet& other) const;

    /// Sub-alphabet restricted to `keep` (events not present are ignored).
    EventAlphabet restricted(const std::set<Event>& keep) const;

    bool operator==(const EventAlphabet&) const = default;

private:
    std::set<Event> events_;
    std::set<Event> observable_;
};

} // namespace scalsup
