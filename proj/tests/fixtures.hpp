// Shared test fixtures: the worked-example games and a random-game source.
#ifndef POWERKIT_TESTS_FIXTURES_HPP
#define POWERKIT_TESTS_FIXTURES_HPP

#include <cstdlib>
#include <random>
#include <string>

#include "powerkit/game.hpp"

namespace powerkit::testing {

inline VotingGame council_1958() {
    return make_weighted_game({"DE", "IT", "FR", "BE", "NL", "LU"},
                              {Rat(4), Rat(4), Rat(4), Rat(2), Rat(2), Rat(1)},
                              Rat(12), "eec-1958");
}

inline VotingGame eu9_1973() {
    return make_weighted_game(
        {"FR", "DE", "IT", "UK", "BE", "NL", "DK", "IE", "LU"},
        {Rat(10), Rat(10), Rat(10), Rat(10), Rat(5), Rat(5), Rat(3), Rat(3),
         Rat(2)},
        Rat(41), "eu9-1973");
}

/// Player 0 passes a decision with any one other player ([3; 2,1,1]).
inline VotingGame vetoer3() {
    return make_weighted_game({"p1", "p2", "p3"}, {Rat(2), Rat(1), Rat(1)},
                              Rat(3), "vetoer3");
}

inline VotingGame dictator3() {
    return make_weighted_game({"p1", "p2", "p3"}, {Rat(1), Rat(0), Rat(0)},
                              Rat(1), "dictator3");
}

inline VotingGame unanimity(int n) {
    std::vector<std::string> labels;
    std::vector<Rat> weights;
    for (int i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i + 1));
        weights.push_back(Rat(1));
    }
    return VotingGame("unanimity", labels, {WeightedRule{weights, Rat(n)}});
}

inline VotingGame majority3() {
    return make_weighted_game({"p1", "p2", "p3"}, {Rat(1), Rat(1), Rat(1)},
                              Rat(2), "majority3");
}

/// Random proper weighted majority game: integer weights in [0, 9] and a
/// quota strictly above half the total, so winning coalitions intersect and
/// the imputation set is nonempty.
inline VotingGame random_game(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> wdist(0, 9);
    std::vector<Rat> weights;
    long total = 0;
    do {
        weights.clear();
        total = 0;
        for (int i = 0; i < n; ++i) {
            int w = wdist(rng);
            weights.push_back(Rat(w));
            total += w;
        }
    } while (total == 0);
    std::uniform_int_distribution<long> qdist(total / 2 + 1, total);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i + 1));
    return VotingGame("random", labels,
                      {WeightedRule{weights, Rat(qdist(rng))}});
}

inline std::string source_dir() {
    const char* env = std::getenv("POWERKIT_SOURCE_DIR");
    return env ? env : ".";
}

}  // namespace powerkit::testing

#endif  // POWERKIT_TESTS_FIXTURES_HPP
