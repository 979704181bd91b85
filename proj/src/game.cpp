#include "wordseed/game.hpp"

#include <algorithm>
#include <bit>

#include "wordseed/errors.hpp"

namespace wordseed {

bool Feedback::all_green() const {
    return std::all_of(tiles.begin(), tiles.end(), [](Tile t) { return t == Tile::Green; });
}

std::string Feedback::str() const {
    std::string s(Word::kLength, '-');
    for (std::size_t i = 0; i < Word::kLength; ++i) {
        s[i] = static_cast<char>(tiles[i]);
    }
    return s;
}

Feedback feedback(const Word& guess, const Word& solution) {
    Feedback fb;
    std::array<std::uint8_t, 26> remaining{};

    // Pass 1: greens; tally the solution letters not consumed by a green.
    for (std::size_t i = 0; i < Word::kLength; ++i) {
        if (guess[i] == solution[i]) {
            fb.tiles[i] = Tile::Green;
        } else {
            ++remaining[static_cast<std::size_t>(solution[i] - 'a')];
        }
    }
    // Pass 2: yellows left to right while occurrences remain.
    for (std::size_t i = 0; i < Word::kLength; ++i) {
        if (fb.tiles[i] == Tile::Green) continue;
        auto& avail = remaining[static_cast<std::size_t>(guess[i] - 'a')];
        if (avail > 0) {
            fb.tiles[i] = Tile::Yellow;
            --avail;
        } else {
            fb.tiles[i] = Tile::Gray;
        }
    }
    return fb;
}

bool consistent(const Word& candidate, const Word& guess, const Feedback& fb) {
    return feedback(guess, candidate) == fb;
}

EvalReport evaluate_seeds(std::span<const Word> seeds, std::span<const Word> solutions) {
    if (solutions.empty()) {
        throw DataError("evaluate_seeds: empty solution list");
    }
    const std::size_t n_seeds = seeds.size();
    const std::size_t n_solutions = solutions.size();

    EvalReport report;
    report.seeds.assign(seeds.begin(), seeds.end());
    report.solutions_count = n_solutions;

    std::vector<std::uint64_t> greens(n_seeds, 0);
    std::vector<std::uint64_t> yellows(n_seeds, 0);
    std::vector<std::uint64_t> discovered(n_seeds, 0);
    std::vector<std::uint64_t> remaining(n_seeds, 0);

    for (const Word& solution : solutions) {
        std::vector<Feedback> fbs;
        fbs.reserve(n_seeds);
        std::uint32_t found_letters = 0;
        for (std::size_t s = 0; s < n_seeds; ++s) {
            const Feedback fb = feedback(seeds[s], solution);
            for (std::size_t i = 0; i < Word::kLength; ++i) {
                if (fb.tiles[i] == Tile::Green) {
                    ++greens[s];
                    found_letters |= 1u << (seeds[s][i] - 'a');
                } else if (fb.tiles[i] == Tile::Yellow) {
                    ++yellows[s];
                    found_letters |= 1u << (seeds[s][i] - 'a');
                }
            }
            discovered[s] += static_cast<std::uint64_t>(std::popcount(found_letters));
            fbs.push_back(fb);
        }
        // Candidates still consistent with everything seen so far.
        std::vector<const Word*> alive;
        alive.reserve(n_solutions);
        for (const Word& c : solutions) alive.push_back(&c);
        for (std::size_t s = 0; s < n_seeds; ++s) {
            std::vector<const Word*> next;
            next.reserve(alive.size());
            for (const Word* c : alive) {
                if (consistent(*c, seeds[s], fbs[s])) next.push_back(c);
            }
            alive = std::move(next);
            remaining[s] += alive.size();
        }
    }

    const double n = static_cast<double>(n_solutions);
    for (std::size_t s = 0; s < n_seeds; ++s) {
        report.mean_greens.push_back(static_cast<double>(greens[s]) / n);
        report.mean_yellows.push_back(static_cast<double>(yellows[s]) / n);
        report.mean_letters_discovered.push_back(static_cast<double>(discovered[s]) / n);
        report.mean_remaining_fraction.push_back(static_cast<double>(remaining[s]) / (n * n));
    }
    return report;
}

} // namespace wordseed
