#include "scalsup/alphabet.hpp"

#include <algorithm>

#include "scalsup/errors.hpp"

namespace scalsup {

std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) out += '.';
        out += w[i];
    }
    return out;
}

Word parse_word(std::string_view text) {
    Word w;
    if (text.empty()) return w;
    std::size_t start = 0;
    while (true) {
        const auto dot = text.find('.', start);
        const auto token = text.substr(start, dot == std::string_view::npos ? text.npos : dot - start);
        if (token.empty()) throw InvalidModel("empty event in word '" + std::string(text) + "'");
        w.emplace_back(token);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return w;
}

bool ShortLex::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

EventAlphabet EventAlphabet::from_unobservable(const std::vector<Event>& events,
                                               const std::vector<Event>& unobservable) {
    EventAlphabet a;
    const std::set<Event> uo(unobservable.begin(), unobservable.end());
    for (const auto& e : uo) {
        if (std::find(events.begin(), events.end(), e) == events.end())
            throw InvalidModel("unobservable event '" + e + "' is not in the event list");
    }
    for (const auto& e : events) {
        if (e.empty()) throw InvalidModel("empty event identifier");
        a.add(e, uo.count(e) == 0);
    }
    return a;
}

void EventAlphabet::add(const Event& e, bool observable) {
    if (e.empty()) throw InvalidModel("empty event identifier");
    if (events_.count(e) != 0) {
        if (is_observable(e) != observable)
            throw ConflictingObservability("event '" + e + "' has conflicting observability status");
        return;
    }
    events_.insert(e);
    if (observable) observable_.insert(e);
}

std::set<Event> EventAlphabet::unobservable() const {
    std::set<Event> out;
    std::set_difference(events_.begin(), events_.end(), observable_.begin(), observable_.end(),
                        std::inserter(out, out.end()));
    return out;
}

EventAlphabet EventAlphabet::merged(const EventAlphabet& other) const {
    EventAlphabet out = *this;
    for (const auto& e : other.events_) out.add(e, other.is_observable(e));
    return out;
}

EventAlphabet EventAlphabet::restricted(const std::set<Event>& keep) const {
    EventAlphabet out;
    for (const auto& e : events_) {
        if (keep.count(e) != 0) out.add(e, is_observable(e));
    }
    return out;
}

} // namespace scalsup
