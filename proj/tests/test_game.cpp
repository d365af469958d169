#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "powerkit/game.hpp"

using namespace powerkit;
using namespace powerkit::testing;

TEST_CASE("coalition basics") {
    Coalition s = Coalition::of({0, 2, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK(!s.contains(1));
    CHECK(s.without(2) == Coalition::of({0, 5}));
    CHECK(s.with(1) == Coalition::of({0, 1, 2, 5}));
    CHECK(Coalition::of({0, 2}).subset_of(s));
    CHECK(!s.subset_of(Coalition::of({0, 2})));
    CHECK(Coalition::grand(3) == Coalition::of({0, 1, 2}));
    CHECK(Coalition().empty());
    CHECK(s.members() == std::vector<int>{0, 2, 5});
}

TEST_CASE("make_weighted_game validates input") {
    CHECK_THROWS_AS(make_weighted_game({"a", "b"}, {Rat(1)}, Rat(1)),
                    InvalidInputError);
    CHECK_THROWS_AS(make_weighted_game({"a", "b"}, {Rat(1), Rat(-1)}, Rat(1)),
                    InvalidInputError);
    // Void game: quota unattainable.
    CHECK_THROWS_WITH_AS(
        make_weighted_game({"a", "b"}, {Rat(1), Rat(1)}, Rat(3)),
        doctest::Contains("void game"), InvalidInputError);
    CHECK_THROWS_AS(make_weighted_game({"a", "b"}, {Rat(1), Rat(1)}, Rat(0)),
                    InvalidInputError);
    CHECK_THROWS_AS(make_weighted_game({"a", "a"}, {Rat(1), Rat(1)}, Rat(1)),
                    InvalidInputError);
}

TEST_CASE("1958 council winning coalitions") {
    VotingGame g = council_1958();
    // {DE, IT, FR}: 12 votes.
    CHECK(g.is_winning(Coalition::of({0, 1, 2})));
    // {DE, IT, BE, LU}: 11 votes.
    CHECK(!g.is_winning(Coalition::of({0, 1, 3, 5})));
    CHECK(g.is_winning(g.grand_coalition()));
    CHECK(!g.is_winning(Coalition()));
}

TEST_CASE("weak inequality at the quota") {
    // Exactly meeting the quota wins.
    VotingGame g = make_weighted_game({"a", "b"}, {Rat(1), Rat(1)}, Rat(2));
    CHECK(g.is_winning(Coalition::of({0, 1})));
    CHECK(!g.is_winning(Coalition::of({0})));
}

TEST_CASE("minimal winning coalitions of the 1958 council") {
    VotingGame g = council_1958();
    auto mwcs = minimal_winning_coalitions(g);
    std::set<Coalition> got(mwcs.begin(), mwcs.end());
    std::set<Coalition> want = {
        Coalition::of({0, 1, 2}),     // three bigs
        Coalition::of({0, 1, 3, 4}),  // two bigs + both mediums
        Coalition::of({0, 2, 3, 4}),
        Coalition::of({1, 2, 3, 4}),
    };
    CHECK(got == want);
}

TEST_CASE("minimal winning coalitions, degenerate games") {
    auto d = minimal_winning_coalitions(dictator3());
    CHECK(d == std::vector<Coalition>{Coalition::of({0})});
    auto u = minimal_winning_coalitions(unanimity(3));
    CHECK(u == std::vector<Coalition>{Coalition::grand(3)});
}

TEST_CASE("every minimal winning coalition is winning and tight") {
    std::mt19937 rng(12345);
    for (int rep = 0; rep < 25; ++rep) {
        VotingGame g = random_game(rng, 3 + rep % 7);
        for (Coalition s : minimal_winning_coalitions(g)) {
            CHECK(g.is_winning(s));
            for (int i : s.members()) CHECK(!g.is_winning(s.without(i)));
        }
    }
}

TEST_CASE("dummies") {
    CHECK(dummies(council_1958()) == std::vector<int>{5});  // Luxembourg
    CHECK(dummies(eu9_1973()).empty());
    CHECK(dummies(dictator3()) == std::vector<int>{1, 2});
    CHECK(dummies(unanimity(4)).empty());
}

TEST_CASE("vetoers") {
    CHECK(vetoers(vetoer3()) == std::vector<int>{0});
    CHECK(vetoers(council_1958()).empty());
    auto all = vetoers(unanimity(5));
    CHECK(all == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(vetoers(dictator3()) == std::vector<int>{0});
}

TEST_CASE("dummies and vetoers are disjoint") {
    std::mt19937 rng(999);
    for (int rep = 0; rep < 30; ++rep) {
        VotingGame g = random_game(rng, 2 + rep % 8);
        auto d = dummies(g);
        for (int v : vetoers(g))
            CHECK(std::find(d.begin(), d.end(), v) == d.end());
    }
}

TEST_CASE("zero-weight players are dummies in single-rule games") {
    std::mt19937 rng(777);
    for (int rep = 0; rep < 20; ++rep) {
        VotingGame g = random_game(rng, 3 + rep % 6);
        auto d = dummies(g);
        for (int i = 0; i < g.num_players(); ++i)
            if (g.rules()[0].weights[i] == 0)
                CHECK(std::find(d.begin(), d.end(), i) != d.end());
    }
}

TEST_CASE("monotonicity: supersets of winning coalitions win") {
    std::mt19937 rng(4242);
    for (int rep = 0; rep < 10; ++rep) {
        VotingGame g = random_game(rng, 3 + rep % 5);
        const int n = g.num_players();
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
            Coalition s(m);
            if (!g.is_winning(s)) continue;
            for (int i = 0; i < n; ++i)
                CHECK(g.is_winning(s.with(i)));
        }
    }
}

TEST_CASE("representation invariance of is_winning under rescaling") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> num(1, 12), den(1, 12);
    for (int rep = 0; rep < 30; ++rep) {
        VotingGame g = random_game(rng, 2 + rep % 8);
        Rat c(num(rng), den(rng));
        std::vector<Rat> scaled;
        for (const Rat& w : g.rules()[0].weights) scaled.push_back(w * c);
        std::vector<std::string> labels;
        for (const auto& p : g.players()) labels.push_back(p.label);
        VotingGame h("scaled", labels,
                     {WeightedRule{scaled, g.rules()[0].quota * c}});
        const int n = g.num_players();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
            CHECK(g.is_winning(Coalition(m)) == h.is_winning(Coalition(m)));
    }
}

TEST_CASE("intersect_games") {
    VotingGame d0 = make_weighted_game({"a", "b"}, {Rat(1), Rat(0)}, Rat(1));
    VotingGame d1 = make_weighted_game({"a", "b"}, {Rat(0), Rat(1)}, Rat(1));
    VotingGame both = intersect_games({d0, d1});
    // Two dictators joined: only the pair wins (unanimity).
    CHECK(both.is_winning(Coalition::of({0, 1})));
    CHECK(!both.is_winning(Coalition::of({0})));
    CHECK(!both.is_winning(Coalition::of({1})));

    VotingGame same = intersect_games({d0});
    const std::uint64_t top = 4;
    for (std::uint64_t m = 0; m < top; ++m)
        CHECK(same.is_winning(Coalition(m)) == d0.is_winning(Coalition(m)));

    VotingGame other = make_weighted_game({"x", "y"}, {Rat(1), Rat(0)}, Rat(1));
    CHECK_THROWS_AS(intersect_games({d0, other}), InvalidInputError);
}

TEST_CASE("game JSON round trip") {
    VotingGame g = council_1958();
    VotingGame back = game_from_json(game_to_json(g));
    CHECK(back.name() == g.name());
    CHECK(back.num_players() == g.num_players());
    for (std::uint64_t m = 0; m < 64; ++m)
        CHECK(back.is_winning(Coalition(m)) == g.is_winning(Coalition(m)));
}

TEST_CASE("game JSON accepts rational strings and decimals") {
    VotingGame g = game_from_json(R"({
      "name": "frac",
      "members": ["a", "b", "c"],
      "rules": [{"weights": ["1/3", 0.5, 1], "quota": "11/6"}]
    })");
    CHECK(g.rules()[0].weights[0] == Rat(1, 3));
    CHECK(g.rules()[0].weights[1] == Rat(1, 2));
    CHECK(!g.is_winning(Coalition::of({1, 2})));  // 3/2 < 11/6
    CHECK(g.is_winning(Coalition::of({0, 1, 2})));
    CHECK(!g.is_winning(Coalition::of({0, 2})));  // 4/3 < 11/6
}

TEST_CASE("game JSON errors") {
    CHECK_THROWS_AS(game_from_json("{not json"), InvalidInputError);
    CHECK_THROWS_AS(game_from_json(R"({"members": ["a"], "rules": []})"),
                    InvalidInputError);
    CHECK_THROWS_AS(
        game_from_json(
            R"({"members": ["a"], "rules": [{"weights": [1], "quota": 2}]})"),
        InvalidInputError);
    CHECK_THROWS_AS(load_game("/nonexistent/file.json"), InvalidInputError);
}

TEST_CASE("enumeration size guard") {
    std::vector<std::string> labels;
    std::vector<Rat> w;
    for (int i = 0; i < 34; ++i) {
        labels.push_back("p" + std::to_string(i));
        w.push_back(Rat(1));
    }
    VotingGame big("big", labels, {WeightedRule{w, Rat(18)}});
    CHECK_THROWS_AS(minimal_winning_coalitions(big), CapabilityError);
    CHECK_THROWS_AS(dummies(big), CapabilityError);
    CHECK(vetoers(big).empty());  // vetoer test has no size limit
}
