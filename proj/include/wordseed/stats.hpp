#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wordseed/corpus.hpp"

namespace wordseed {

class WordSet;

/// Global relative frequency of each letter over all characters of an
/// AllWordList. Stores the exact integer tallies next to the derived
/// floating-point frequencies, so downstream checks can work in exact
/// arithmetic.
class CharFrequencyMap {
public:
    /// Tallies every character of every word (repeats counted).
    /// Throws DataError when the list is empty.
    static CharFrequencyMap tally(const AllWordList& all);

    /// Builds directly from per-letter counts; the denominator is the
    /// sum of the counts. Throws DataError when all counts are zero.
    static CharFrequencyMap from_counts(const std::array<std::uint64_t, 26>& counts);

    std::uint64_t count(char letter) const { return counts_[index(letter)]; }
    double frequency(char letter) const;

    std::uint64_t total_chars() const { return total_chars_; }
    const std::array<std::uint64_t, 26>& counts() const { return counts_; }

private:
    static std::size_t index(char letter);
    std::array<std::uint64_t, 26> counts_{};
    std::uint64_t total_chars_ = 0;
};

/// Word -> summed character frequency. Entries are kept sorted
/// lexicographically by word, which fixes the scan order everywhere
/// downstream and makes runs reproducible.
class WordValueMap {
public:
    struct Entry {
        Word word;
        double value;
    };

    WordValueMap() = default;

    /// One entry per word of the unique list, valued under `freq`.
    static WordValueMap build(const UniqueWordList& unique, const CharFrequencyMap& freq);

    /// Assembles a map from explicit entries (sorted and checked).
    /// Throws DataError on duplicate words or non-finite values.
    static WordValueMap from_entries(std::vector<Entry> entries);

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::span<const Entry> entries() const { return entries_; }

    std::optional<double> value_of(const Word& w) const;

    /// Entries whose word shares no letter with `w` (values unchanged).
    WordValueMap filtered_by(const Word& w) const;

    /// Entries whose word is not in / is in the given set.
    WordValueMap without(const WordSet& rejects) const;
    WordValueMap restricted_to(const WordSet& allowed) const;

    /// Entries whose letter set differs from every mask in `masks`.
    WordValueMap without_masks(std::span<const std::uint32_t> masks) const;

private:
    std::vector<Entry> entries_; // sorted by word, unique
};

/// Sum of the letter frequencies of `w`, accumulated in alphabetical
/// letter order so that anagrams produce bit-identical sums.
/// Requires five distinct letters; throws DataError otherwise.
double word_value(const Word& w, const CharFrequencyMap& freq);

/// Frequency map over an AllWordList. Thin alias of CharFrequencyMap::tally.
CharFrequencyMap char_frequencies(const AllWordList& all);

/// Value map over a UniqueWordList. Thin alias of WordValueMap::build.
WordValueMap build_value_map(const UniqueWordList& unique, const CharFrequencyMap& freq);

} // namespace wordseed
