#include <doctest.h>

#include <random>

#include "factory.hpp"
#include "oracles.hpp"
#include "scalsup/automata.hpp"
#include "scalsup/errors.hpp"

using namespace scalsup;
using namespace testing_support;

namespace {

Language words_of(std::initializer_list<const char*> ws) {
    Language out;
    for (const auto* w : ws) out.insert(parse_word(w));
    return out;
}

Generator start_finish() {
    Generator g(EventAlphabet::from_unobservable({"111", "110"}, {}));
    const auto idle = g.add_state("Idle");
    const auto working = g.add_state("Working");
    g.add_transition(idle, "111", working);
    g.add_transition(working, "110", idle);
    g.set_initial(idle);
    return g;
}

} // namespace

TEST_CASE("words render dot-separated and parse back") {
    CHECK(to_string(parse_word("11.10.11")) == "11.10.11");
    CHECK(parse_word("").empty());
    CHECK(to_string(Word{}).empty());
    CHECK(ShortLex{}(parse_word("b"), parse_word("a.a")));
    CHECK(ShortLex{}(parse_word("a.b"), parse_word("b.a")));
}

TEST_CASE("alphabet keeps one observability status per event") {
    EventAlphabet a;
    a.add("x", true);
    a.add("u", false);
    CHECK(a.is_observable("x"));
    CHECK_FALSE(a.is_observable("u"));
    CHECK(a.unobservable() == std::set<Event>{"u"});
    CHECK_THROWS_AS(a.add("u", true), ConflictingObservability);
    EventAlphabet b;
    b.add("u", true);
    CHECK_THROWS_AS((void)a.merged(b), ConflictingObservability);
}

TEST_CASE("generator rejects nondeterminism and unknown events") {
    Generator g(EventAlphabet::from_unobservable({"a"}, {}));
    const auto s = g.add_state();
    const auto t = g.add_state();
    g.add_transition(s, "a", t);
    CHECK_NOTHROW(g.add_transition(s, "a", t));
    CHECK_THROWS_AS(g.add_transition(s, "a", s), InvalidModel);
    CHECK_THROWS_AS(g.add_transition(s, "b", t), UnknownEvent);
}

TEST_CASE("closed_language_upto") {
    SUBCASE("length zero is the empty word only") {
        CHECK(closed_language_upto(machine(1, 1), 0) == words_of({""}));
    }
    SUBCASE("single machine start and finish") {
        CHECK(closed_language_upto(start_finish(), 2) == words_of({"", "111", "111.110"}));
    }
    SUBCASE("capacity-2 buffer over template events") {
        CHECK(closed_language_upto(template_buffer(2), 2) == words_of({"", "10", "10.10", "10.21"}));
    }
    SUBCASE("agrees with a depth-first walk and is prefix-closed") {
        const auto g = machine(1, 1);
        for (std::size_t n = 0; n <= 6; ++n) {
            const auto l = closed_language_upto(g, n);
            CHECK(l == oracle::walk(g, n));
            CHECK(oracle::prefix_closed(l));
        }
    }
}

TEST_CASE("sync_product") {
    const auto g1 = machine(1, 1);
    const auto g2 = machine(2, 1);
    SUBCASE("singleton product is the operand") {
        const std::vector<Generator> one{g1};
        CHECK(isomorphic(sync_product(one), g1));
    }
    SUBCASE("disjoint machines interleave fully") {
        const auto p = sync_product(g1, g2);
        CHECK(p.num_states() == 9);
        CHECK(closed_language_upto(p, 4) == oracle::product({g1, g2}, 4));
    }
    SUBCASE("shared events synchronize") {
        const auto spec = buffer(1, 1, 2, g1.alphabet().merged(g2.alphabet()));
        const std::vector<Generator> gs{g1, g2, spec};
        CHECK(closed_language_upto(sync_product(gs), 5) == oracle::product(gs, 5));
    }
    SUBCASE("conflicting observability is rejected") {
        Generator a(EventAlphabet::from_unobservable({"x"}, {}));
        a.add_state();
        Generator b(EventAlphabet::from_unobservable({"x"}, {"x"}));
        b.add_state();
        CHECK_THROWS_AS(sync_product(a, b), ConflictingObservability);
    }
    SUBCASE("state budget") {
        CHECK_THROWS_AS(sync_product(g1, g2, 4), ResourceLimit);
    }
}

TEST_CASE("determinize") {
    SUBCASE("deterministic input is unchanged up to renumbering") {
        const auto g = machine(1, 1);
        CHECK(isomorphic(determinize(NfaGenerator::from(g)), g));
    }
    SUBCASE("two choices on the same event merge into one subset state") {
        NfaGenerator n(EventAlphabet::from_unobservable({"10", "11", "12"}, {}));
        const auto s = n.add_state();
        const auto p = n.add_state("p");
        const auto q = n.add_state("q");
        n.add_transition(s, "10", p);
        n.add_transition(s, "10", q);
        n.add_transition(p, "11", p);
        n.add_transition(q, "12", q);
        n.set_initial(s);
        const auto d = determinize(n);
        CHECK(d.num_states() == 4);
        const auto after = d.next(d.initial(), "10");
        REQUIRE(after);
        CHECK(d.next(*after, "11"));
        CHECK(d.next(*after, "12"));
    }
}

TEST_CASE("contains") {
    const auto cap2 = template_buffer(2);
    const auto cap1 = template_buffer(1);
    CHECK(contains(cap2, cap2));
    CHECK(contains(cap2, cap1));
    const auto back = contains(cap1, cap2);
    CHECK_FALSE(back.holds);
    REQUIRE(back.counterexample);
    CHECK(to_string(*back.counterexample) == "10.10");
}

TEST_CASE("contains reports the shortlex-least counterexample") {
    const auto a = Generator::universal(EventAlphabet::from_unobservable({"a", "b"}, {}));
    Generator b(a.alphabet());
    const auto s0 = b.add_state();
    const auto s1 = b.add_state();
    b.add_transition(s0, "b", s1);
    b.add_transition(s0, "a", s1);
    CHECK(contains(a, b));
    const auto r = contains(Generator::epsilon(a.alphabet()), b);
    REQUIRE(r.counterexample);
    CHECK(to_string(*r.counterexample) == "a");
}

TEST_CASE("intersect") {
    const auto g = sync_product(machine(1, 1), machine(1, 2));
    CHECK(language_equal(intersect(g, Generator::universal(g.alphabet())), g));
    CHECK(closed_language_upto(intersect(g, Generator::epsilon(g.alphabet())), 4) == words_of({""}));
    const auto spec = buffer(2, 0, 1, g.alphabet());
    const auto lifted = selfloop_lift(spec, g.alphabet());
    const auto i = intersect(g, lifted);
    for (std::size_t n = 0; n <= 5; ++n) {
        Language expected;
        const auto lg = closed_language_upto(g, n);
        const auto ls = closed_language_upto(lifted, n);
        std::set_intersection(lg.begin(), lg.end(), ls.begin(), ls.end(), std::inserter(expected, expected.end()),
                              ShortLex{});
        CHECK(closed_language_upto(i, n) == expected);
    }
}

TEST_CASE("trim yields canonical numbering") {
    Generator g(EventAlphabet::from_unobservable({"a", "b"}, {}));
    const auto dead = g.add_state("dead");
    const auto s1 = g.add_state();
    const auto s0 = g.add_state();
    g.add_transition(s0, "b", s1);
    g.add_transition(s0, "a", s0);
    g.add_transition(dead, "a", s0);
    g.set_initial(s0);
    const auto t = trim(g);
    CHECK(t.num_states() == 2);
    CHECK(t.initial() == 0);
    CHECK(t.next(0, "b") == StateId{1});
    CHECK(t.same_structure(trim(t)));
}

TEST_CASE("minimize preserves the language") {
    std::mt19937 rng(7);
    const auto sigma = EventAlphabet::from_unobservable({"a", "b", "c"}, {"c"});
    for (int i = 0; i < 50; ++i) {
        const auto g = oracle::random_generator(rng, sigma, 5);
        const auto m = minimize(g);
        CHECK(m.num_states() <= trim(g).num_states());
        CHECK(language_equal(m, g));
        CHECK(closed_language_upto(m, 6) == oracle::walk(g, 6));
    }
}
