#include "scalsup/relabel.hpp"

#include <functional>

#include "scalsup/errors.hpp"

namespace scalsup {

RelabelingMap::RelabelingMap(EventAlphabet source, std::map<Event, Event> table)
    : source_(std::move(source)), table_(std::move(table)) {
    build(true);
}

RelabelingMap::RelabelingMap(EventAlphabet source, EventAlphabet target, std::map<Event, Event> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    build(false);
}

void RelabelingMap::build(bool derive_target) {
    for (const auto& e : source_.events()) {
        if (table_.count(e) == 0) throw InvalidModel("relabeling is not total: no image for '" + e + "'");
    }
    EventAlphabet image;
    for (const auto& [from, to] : table_) {
        if (!source_.contains(from)) throw InvalidModel("relabeling maps unknown source event '" + from + "'");
        if (to.empty()) throw InvalidModel("relabeling maps '" + from + "' to an empty identifier");
        if (source_.contains(to))
            throw InvalidModel("relabeled event '" + to + "' collides with a source event");
        try {
            image.add(to, source_.is_observable(from));
        } catch (const ConflictingObservability&) {
            throw InvalidModel("relabeling does not preserve observability at '" + to + "'");
        }
        preimages_[to].insert(from);
    }
    if (derive_target) {
        target_ = std::move(image);
        return;
    }
    if (!(target_ == image)) {
        for (const auto& t : target_.events()) {
            if (!image.contains(t)) throw InvalidModel("relabeling is not surjective: '" + t + "' has no preimage");
        }
        throw InvalidModel("relabeling image disagrees with the declared target alphabet");
    }
}

const Event& RelabelingMap::operator()(const Event& e) const {
    const auto it = table_.find(e);
    if (it == table_.end()) throw UnknownEvent("event '" + e + "' is not in the relabeling source");
    return it->second;
}

const std::set<Event>& RelabelingMap::preimage(const Event& tau) const {
    const auto it = preimages_.find(tau);
    if (it == preimages_.end()) throw UnknownEvent("event '" + tau + "' is not in the relabeling target");
    return it->second;
}

std::set<Event> RelabelingMap::image(const std::set<Event>& events) const {
    std::set<Event> out;
    for (const auto& e : events) out.insert((*this)(e));
    return out;
}

EventAlphabet RelabelingMap::image(const EventAlphabet& a) const {
    EventAlphabet out;
    for (const auto& e : a.events()) out.add((*this)(e), a.is_observable(e));
    return out;
}

NaturalProjection::NaturalProjection(EventAlphabet domain, std::set<Event> kept)
    : domain_(std::move(domain)), kept_(std::move(kept)) {
    for (const auto& e : kept_) {
        if (!domain_.contains(e)) throw UnknownEvent("projection keeps unknown event '" + e + "'");
    }
}

NaturalProjection NaturalProjection::observable(const EventAlphabet& domain) {
    return {domain, domain.observable()};
}

Word project_string(const NaturalProjection& p, const Word& s) {
    Word out;
    for (const auto& e : s) {
        if (!p.domain().contains(e)) throw UnknownEvent("event '" + e + "' is not in the projection domain");
        if (p.keeps(e)) out.push_back(e);
    }
    return out;
}

Word relabel_string(const RelabelingMap& r, const Word& s) {
    Word out;
    out.reserve(s.size());
    for (const auto& e : s) out.push_back(r(e));
    return out;
}

namespace {

void require_subalphabet(const EventAlphabet& inner, const EventAlphabet& outer, const char* what) {
    for (const auto& e : inner.events()) {
        if (!outer.contains(e) || outer.is_observable(e) != inner.is_observable(e))
            throw AlphabetMismatch(std::string(what) + ": event '" + e + "' is not in the expected alphabet");
    }
}

} // namespace

Generator relabel_generator(const RelabelingMap& r, const Generator& g, std::size_t state_budget) {
    require_subalphabet(g.alphabet(), r.source(), "relabel_generator");
    NfaGenerator n(r.image(g.alphabet()));
    for (StateId s = 0; s < g.num_states(); ++s) n.add_state(g.state_name(s));
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (const auto& [e, t] : g.transitions(s)) n.add_transition(s, r(e), t);
    }
    n.set_initial(g.initial());
    return determinize(n, state_budget);
}

Generator inverse_relabel_generator(const RelabelingMap& r, const Generator& h) {
    require_subalphabet(h.alphabet(), r.target(), "inverse_relabel_generator");
    EventAlphabet sigma;
    for (const auto& tau : h.alphabet().events()) {
        for (const auto& e : r.preimage(tau)) sigma.add(e, r.source().is_observable(e));
    }
    Generator out(sigma);
    for (StateId s = 0; s < h.num_states(); ++s) out.add_state(h.state_name(s));
    for (StateId s = 0; s < h.num_states(); ++s) {
        for (const auto& [tau, t] : h.transitions(s)) {
            for (const auto& e : r.preimage(tau)) out.add_transition(s, e, t);
        }
    }
    out.set_initial(h.initial());
    return out;
}

Generator project_generator(const NaturalProjection& p, const Generator& g) {
    require_subalphabet(g.alphabet(), p.domain(), "project_generator");
    std::set<Event> kept;
    for (const auto& e : g.alphabet().events()) {
        if (p.keeps(e)) kept.insert(e);
    }
    NfaGenerator n(g.alphabet().restricted(kept));
    for (StateId s = 0; s < g.num_states(); ++s) n.add_state(g.state_name(s));
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (const auto& [e, t] : g.transitions(s)) {
            if (p.keeps(e)) {
                n.add_transition(s, e, t);
            } else {
                n.add_silent(s, t);
            }
        }
    }
    n.set_initial(g.initial());
    return determinize(n);
}

RpCommutation check_rp_commutation(const RelabelingMap& r, const std::vector<std::set<Event>>& groups,
                                   std::size_t max_len) {
    std::vector<std::set<Event>> local_targets;
    std::set<Event> covered;
    for (const auto& sigma_i : groups) {
        for (const auto& e : sigma_i) {
            if (!r.source().contains(e)) throw PreconditionViolated("group event '" + e + "' is not in Sigma");
            if (!covered.insert(e).second) throw PreconditionViolated("event '" + e + "' is in two groups");
        }
        local_targets.push_back(r.image(sigma_i));
    }
    if (covered != r.source().events()) throw PreconditionViolated("group alphabets do not cover Sigma");
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (const auto& e : r.source().events()) {
            const bool in_group = groups[i].count(e) != 0;
            const bool maps_local = local_targets[i].count(r(e)) != 0;
            if (in_group != maps_local)
                throw PreconditionViolated("relabeling does not preserve the local status of '" + e + "'");
        }
    }

    auto enumerate = [max_len](const std::set<Event>& events, const std::function<void(const Word&)>& visit) {
        std::vector<Word> layer{Word{}};
        visit(Word{});
        for (std::size_t len = 0; len < max_len; ++len) {
            std::vector<Word> next;
            for (const auto& w : layer) {
                for (const auto& e : events) {
                    Word ext = w;
                    ext.push_back(e);
                    visit(ext);
                    next.push_back(std::move(ext));
                }
            }
            layer = std::move(next);
        }
    };

    for (std::size_t i = 0; i < groups.size(); ++i) {
        // R(P_i^{-1}(s)) truncated, indexed by s.
        std::map<Word, std::set<Word>> lhs;
        enumerate(r.source().events(), [&](const Word& w) {
            Word s;
            for (const auto& e : w) {
                if (groups[i].count(e) != 0) s.push_back(e);
            }
            lhs[s].insert(relabel_string(r, w));
        });
        // P_{R,i}^{-1}(u) truncated, indexed by u in T_i*.
        std::map<Word, std::set<Word>> rhs;
        enumerate(r.target().events(), [&](const Word& t) {
            Word u;
            for (const auto& e : t) {
                if (local_targets[i].count(e) != 0) u.push_back(e);
            }
            rhs[u].insert(t);
        });
        bool ok = true;
        Word bad;
        enumerate(groups[i], [&](const Word& s) {
            if (!ok) return;
            const auto& left = lhs[s];
            const auto it = rhs.find(relabel_string(r, s));
            const std::set<Word> empty;
            if (left != (it == rhs.end() ? empty : it->second)) {
                ok = false;
                bad = s;
            }
        });
        if (!ok) return {false, std::make_pair(i, bad)};
    }
    return {true, std::nullopt};
}

} // namespace scalsup
