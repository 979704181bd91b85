#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wordseed/corpus.hpp"

namespace wordseed {

enum class Tile : char {
    Gray = '-',
    Yellow = 'Y',
    Green = 'G',
};

/// Per-position tile colors for one guess against one solution.
struct Feedback {
    std::array<Tile, Word::kLength> tiles{};

    bool all_green() const;
    std::string str() const; // e.g. "-Y--G"

    friend bool operator==(const Feedback&, const Feedback&) = default;
};

/// Wordle tile rule: first mark greens, then scan left to right marking
/// yellow while the guessed letter still has unconsumed occurrences in
/// the solution (greens consume first). Repeated guess letters beyond the
/// solution's multiplicity stay gray.
Feedback feedback(const Word& guess, const Word& solution);

/// True iff `candidate`, as the solution, would have produced `fb` for `guess`.
bool consistent(const Word& candidate, const Word& guess, const Feedback& fb);

/// Aggregate statistics of playing a fixed seed sequence against every
/// word of a solution list.
struct EvalReport {
    std::vector<Word> seeds;
    std::size_t solutions_count = 0;
    // One entry per seed, means over all solutions.
    std::vector<double> mean_greens;
    std::vector<double> mean_yellows;
    std::vector<double> mean_letters_discovered;
    // Mean fraction of the solution list still consistent with all
    // feedback received so far; non-increasing across seeds.
    std::vector<double> mean_remaining_fraction;
};

/// Plays the seeds in order against each solution and aggregates tile
/// counts, discovered-letter counts, and elimination fractions.
/// Throws DataError when `solutions` is empty.
EvalReport evaluate_seeds(std::span<const Word> seeds, std::span<const Word> solutions);

} // namespace wordseed
