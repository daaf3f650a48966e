#pragma once

// Brute-force reference implementations over explicit finite string sets.
// Only Generator::next/accepts are used from the library.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "scalsup/generator.hpp"

namespace oracle {

using scalsup::Event;
using scalsup::Generator;
using scalsup::Language;
using scalsup::Word;

inline std::vector<Word> words(const std::set<Event>& events, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (const auto& e : events) {
                Word w = out[i];
                w.push_back(e);
                out.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return out;
}

inline Language walk(const Generator& g, std::size_t max_len) {
    Language out;
    std::function<void(scalsup::StateId, Word&)> rec = [&](scalsup::StateId s, Word& w) {
        out.insert(w);
        if (w.size() == max_len) return;
        for (const auto& e : g.alphabet().events()) {
            if (const auto t = g.next(s, e)) {
                w.push_back(e);
                rec(*t, w);
                w.pop_back();
            }
        }
    };
    Word w;
    rec(g.initial(), w);
    return out;
}

inline Word project(const std::set<Event>& keep, const Word& w) {
    Word out;
    for (const auto& e : w) {
        if (keep.count(e) != 0) out.push_back(e);
    }
    return out;
}

inline Word relabel(const std::map<Event, Event>& r, const Word& w) {
    Word out;
    for (const auto& e : w) out.push_back(r.at(e));
    return out;
}

inline Language relabel(const std::map<Event, Event>& r, const Language& l) {
    Language out;
    for (const auto& w : l) out.insert(relabel(r, w));
    return out;
}

/// Synchronous product language by definition: words over the union alphabet
/// whose projection onto each operand alphabet is accepted by that operand.
inline Language product(const std::vector<Generator>& gs, std::size_t max_len) {
    std::set<Event> all;
    for (const auto& g : gs) all.insert(g.alphabet().events().begin(), g.alphabet().events().end());
    Language out;
    // Grow prefix-closed: extend only accepted words.
    std::vector<Word> frontier{Word{}};
    out.insert(Word{});
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (const auto& e : all) {
                Word x = w;
                x.push_back(e);
                const bool ok = std::all_of(gs.begin(), gs.end(), [&](const Generator& g) {
                    return g.accepts(project(g.alphabet().events(), x));
                });
                if (ok) {
                    out.insert(x);
                    next.push_back(std::move(x));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

inline Language truncate(const Language& l, std::size_t max_len) {
    Language out;
    for (const auto& w : l) {
        if (w.size() <= max_len) out.insert(w);
    }
    return out;
}

struct Violation {
    Word s;
    Word s_prime;
    Event sigma;
};

/// Relative observability of K with respect to C and L by the definition,
/// over the given finite sets.
inline std::optional<Violation> rel_observable(const Language& k, const Language& c, const Language& l,
                                               const std::set<Event>& observable, const std::set<Event>& events) {
    std::map<Word, std::vector<const Word*>> by_obs;
    for (const auto& w : c) by_obs[project(observable, w)].push_back(&w);
    for (const auto& s : k) {
        const auto it = by_obs.find(project(observable, s));
        if (it == by_obs.end()) continue;
        for (const auto& sigma : events) {
            Word ss = s;
            ss.push_back(sigma);
            if (k.count(ss) == 0) continue;
            for (const Word* sp : it->second) {
                Word x = *sp;
                x.push_back(sigma);
                if (l.count(x) != 0 && k.count(x) == 0) return Violation{s, *sp, sigma};
            }
        }
    }
    return std::nullopt;
}

inline bool prefix_closed(const Language& l) {
    for (const auto& w : l) {
        if (!w.empty() && l.count(Word(w.begin(), w.end() - 1)) == 0) return false;
    }
    return true;
}

/// Number of prefix-closed subsets of a finite prefix-closed language.
inline double count_prefix_closed_subsets(const Language& l) {
    std::map<Word, std::vector<Word>> children;
    for (const auto& w : l) {
        if (!w.empty()) children[Word(w.begin(), w.end() - 1)].push_back(w);
    }
    std::function<double(const Word&)> f = [&](const Word& w) {
        double n = 1;
        for (const auto& c : children[w]) n *= 1 + f(c);
        return n;
    };
    return l.empty() ? 0 : f(Word{});
}

/// Calls `visit` on every nonempty prefix-closed subset of `l`.
inline void for_each_prefix_closed_subset(const Language& l, const std::function<void(const Language&)>& visit) {
    std::map<Word, std::vector<Word>> children;
    for (const auto& w : l) {
        if (!w.empty()) children[Word(w.begin(), w.end() - 1)].push_back(w);
    }
    Language current{Word{}};
    // Decide, node by node in BFS order, whether each child of an included
    // node is included.
    std::vector<Word> pending;
    for (const auto& c : children[Word{}]) pending.push_back(c);
    std::function<void(std::size_t, std::vector<Word>&)> rec = [&](std::size_t i, std::vector<Word>& todo) {
        if (i == todo.size()) {
            visit(current);
            return;
        }
        const Word w = todo[i];
        rec(i + 1, todo);
        current.insert(w);
        const auto added = children[w].size();
        todo.insert(todo.end(), children[w].begin(), children[w].end());
        rec(i + 1, todo);
        todo.resize(todo.size() - added);
        current.erase(w);
    };
    rec(0, pending);
}

/// Union of all prefix-closed subsets of `e` that are relatively observable
/// with respect to C = e and `l`.
inline Language sup_by_enumeration(const Language& e, const Language& l, const std::set<Event>& observable,
                                   const std::set<Event>& events) {
    Language sup;
    for_each_prefix_closed_subset(e, [&](const Language& k) {
        if (!rel_observable(k, e, l, observable, events)) sup.insert(k.begin(), k.end());
    });
    return sup;
}

/// Greatest fixpoint on strings: repeatedly drop every s.sigma that has a
/// violating partner, together with its extensions. C stays fixed at `e`.
inline Language sup_by_removal(const Language& e, const Language& l, const std::set<Event>& observable,
                               const std::set<Event>& events) {
    Language k = e;
    for (bool changed = true; changed;) {
        changed = false;
        const auto v = rel_observable(k, e, l, observable, events);
        if (!v) break;
        Word bad = v->s;
        bad.push_back(v->sigma);
        for (auto it = k.begin(); it != k.end();) {
            if (it->size() >= bad.size() && std::equal(bad.begin(), bad.end(), it->begin())) {
                it = k.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    return k;
}

/// Random deterministic generator; all states accepting.
inline Generator random_generator(std::mt19937& rng, const scalsup::EventAlphabet& alphabet, std::size_t max_states,
                                  double density = 0.5, bool acyclic = false) {
    std::uniform_int_distribution<std::size_t> count(1, max_states);
    std::uniform_real_distribution<double> coin(0, 1);
    Generator g(alphabet);
    const auto n = count(rng);
    for (std::size_t i = 0; i < n; ++i) g.add_state();
    for (std::size_t s = 0; s < n; ++s) {
        for (const auto& e : alphabet.events()) {
            if (coin(rng) >= density) continue;
            if (acyclic) {
                if (s + 1 >= n) continue;
                std::uniform_int_distribution<std::size_t> to(s + 1, n - 1);
                g.add_transition(static_cast<scalsup::StateId>(s), e, static_cast<scalsup::StateId>(to(rng)));
            } else {
                std::uniform_int_distribution<std::size_t> to(0, n - 1);
                g.add_transition(static_cast<scalsup::StateId>(s), e, static_cast<scalsup::StateId>(to(rng)));
            }
        }
    }
    g.set_initial(0);
    return g;
}

} // namespace oracle
