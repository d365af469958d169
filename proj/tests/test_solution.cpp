#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "powerkit/solution.hpp"

using namespace powerkit;
using namespace powerkit::testing;

TEST_CASE("excess values") {
    VotingGame g = council_1958();
    std::vector<Rat> nucl = {Rat(1, 4), Rat(1, 4), Rat(1, 4),
                             Rat(1, 8), Rat(1, 8), Rat(0)};
    CHECK(excess(g, Coalition::of({0, 1, 2}), nucl) == Rat(1, 4));
    CHECK(excess(g, g.grand_coalition(), nucl) == Rat(0));
    CHECK(excess(g, Coalition::of({5}), nucl) == Rat(0));  // losing {LU}
}

TEST_CASE("least core of the simple majority game") {
    auto lc = least_core(majority3());
    CHECK(lc.epsilon == Rat(1, 3));
    CHECK(lc.witness == std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
    CHECK(lc.unique);
    // Binding: the three pairs (excess 1/3) -- and every singleton
    // (excess -1/3) does not bind.
    CHECK(lc.binding.size() == 3);
}

TEST_CASE("least core of the dictator game") {
    auto lc = least_core(dictator3());
    CHECK(lc.epsilon == Rat(0));
    CHECK(lc.witness == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    CHECK(lc.unique);
}

TEST_CASE("least core of the 1958 council is a segment at 1/4") {
    auto lc = least_core(council_1958());
    CHECK(lc.epsilon == Rat(1, 4));
    // The mediums' split is free along the optimal face, so the least core
    // alone does not determine the nucleolus here.
    CHECK(!lc.unique);
    Rat bigs = lc.witness[0] + lc.witness[1] + lc.witness[2];
    CHECK(bigs == Rat(3, 4));
    CHECK(lc.witness[5] == Rat(0));
}

TEST_CASE("nucleolus of the worked examples") {
    CHECK(nucleolus(council_1958()).values ==
          std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 8),
                           Rat(1, 8), Rat(0)});
    CHECK(nucleolus(eu9_1973()).values ==
          std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(0),
                           Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(nucleolus(vetoer3()).values ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    CHECK(nucleolus(majority3()).values ==
          std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
    CHECK(nucleolus(dictator3()).values ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    CHECK(nucleolus(unanimity(5)).values ==
          std::vector<Rat>(5, Rat(1, 5)));
}

TEST_CASE("nucleolus oracle on the worked examples") {
    CHECK(nucleolus_oracle(council_1958()).values ==
          nucleolus(council_1958()).values);
    CHECK(nucleolus_oracle(vetoer3()).values ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    CHECK(nucleolus_oracle(dictator3()).values ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    CHECK(nucleolus_oracle(eu9_1973()).values ==
          nucleolus(eu9_1973()).values);
}

TEST_CASE("oracle equivalence on random games") {
    std::mt19937 rng(20240607);
    for (int rep = 0; rep < 60; ++rep) {
        VotingGame g = random_game(rng, 2 + rep % 9);
        INFO("rep ", rep);
        auto a = nucleolus(g);
        auto b = nucleolus_oracle(g);
        CHECK(a.values == b.values);
    }
}

TEST_CASE("nucleolus output is a valid imputation and profile") {
    std::mt19937 rng(8);
    for (int rep = 0; rep < 40; ++rep) {
        VotingGame g = random_game(rng, 2 + rep % 8);
        auto p = nucleolus(g);
        Rat sum = 0;
        for (const Rat& v : p.values) {
            CHECK(v >= 0);
            sum += v;
        }
        CHECK(sum == 1);
        // Dummies receive exactly zero.
        for (int d : dummies(g)) CHECK(p.values[d] == 0);
        // Symmetric players receive equal amounts.
        const auto& w = g.rules()[0].weights;
        for (int i = 0; i < g.num_players(); ++i)
            for (int j = i + 1; j < g.num_players(); ++j)
                if (w[i] == w[j]) CHECK(p.values[i] == p.values[j]);
    }
}

TEST_CASE("core membership iff a vetoer exists") {
    std::mt19937 rng(303);
    for (int rep = 0; rep < 30; ++rep) {
        VotingGame g = random_game(rng, 2 + rep % 7);
        CHECK(core_nonempty(g) == !vetoers(g).empty());
    }
    CHECK(core_nonempty(vetoer3()));
    CHECK(core_nonempty(dictator3()));
    CHECK(!core_nonempty(majority3()));
    CHECK(!core_nonempty(council_1958()));
}

TEST_CASE("core membership of the nucleolus") {
    // When the core is nonempty the nucleolus lies inside it: no proper
    // coalition has positive excess.
    for (const VotingGame& g : {vetoer3(), dictator3(), unanimity(4)}) {
        auto nucl = nucleolus(g);
        const std::uint64_t top = std::uint64_t{1} << g.num_players();
        for (std::uint64_t m = 1; m < top - 1; ++m)
            CHECK(excess(g, Coalition(m), nucl.values) <= 0);
    }
}

TEST_CASE("substitutability in the 1958 council") {
    // One big equals two mediums under the nucleolus.
    auto nucl = nucleolus(council_1958());
    CHECK(nucl.values[0] == 2 * nucl.values[3]);
}

TEST_CASE("representation invariance of the nucleolus") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    for (int rep = 0; rep < 20; ++rep) {
        VotingGame g = random_game(rng, 2 + rep % 6);
        Rat c(num(rng), den(rng));
        std::vector<Rat> scaled;
        for (const Rat& w : g.rules()[0].weights) scaled.push_back(w * c);
        std::vector<std::string> labels;
        for (const auto& p : g.players()) labels.push_back(p.label);
        VotingGame h("scaled", labels,
                     {WeightedRule{scaled, g.rules()[0].quota * c}});
        CHECK(nucleolus(g).values == nucleolus(h).values);
    }
}

TEST_CASE("certificates re-verify against direct enumeration") {
    std::mt19937 rng(117);
    for (int rep = 0; rep < 20; ++rep) {
        VotingGame g = random_game(rng, 2 + rep % 7);
        auto res = nucleolus_with_certificate(g);
        CHECK(verify_certificate(g, res));
        // Push one payoff far negative: some coalition's excess must then
        // exceed the recorded first level and the audit must fail.
        if (g.num_players() >= 2) {
            NucleolusResult bad = res;
            bad.profile.values[0] += Rat(5);
            bad.profile.values[1] -= Rat(5);
            CHECK(!verify_certificate(g, bad));
        }
    }
    auto res = nucleolus_with_certificate(council_1958());
    CHECK(verify_certificate(council_1958(), res));
    CHECK(res.rounds.front().level == Rat(1, 4));
    std::string text = certificate_text(council_1958(), res);
    CHECK(text.find("level 1/4") != std::string::npos);
}

TEST_CASE("imputation set must be nonempty") {
    // Two winning singletons leave nothing to distribute.
    VotingGame g = make_weighted_game({"a", "b"}, {Rat(1), Rat(1)}, Rat(1));
    CHECK_THROWS_AS(nucleolus(g), InvalidInputError);
    CHECK_THROWS_AS(least_core(g), InvalidInputError);
}

TEST_CASE("oracle size guard") {
    std::vector<std::string> labels;
    std::vector<Rat> w;
    for (int i = 0; i < 16; ++i) {
        labels.push_back("p" + std::to_string(i));
        w.push_back(Rat(1));
    }
    VotingGame big("big16", labels, {WeightedRule{w, Rat(9)}});
    CHECK_THROWS_AS(nucleolus_oracle(big), CapabilityError);
}
