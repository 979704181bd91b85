#include "wordseed/stats.hpp"

#include <algorithm>
#include <cmath>

#include "wordseed/errors.hpp"
#include "wordseed/selector.hpp"

namespace wordseed {

std::size_t CharFrequencyMap::index(char letter) {
    if (letter < 'a' || letter > 'z') {
        throw DataError("CharFrequencyMap: letter out of range");
    }
    return static_cast<std::size_t>(letter - 'a');
}

CharFrequencyMap CharFrequencyMap::tally(const AllWordList& all) {
    if (all.words.empty()) {
        throw DataError("char_frequencies: empty all-word list");
    }
    CharFrequencyMap f;
    for (const Word& w : all.words) {
        for (std::size_t i = 0; i < Word::kLength; ++i) {
            ++f.counts_[static_cast<std::size_t>(w[i] - 'a')];
        }
    }
    f.total_chars_ = all.total_chars();
    return f;
}

CharFrequencyMap CharFrequencyMap::from_counts(const std::array<std::uint64_t, 26>& counts) {
    CharFrequencyMap f;
    f.counts_ = counts;
    for (std::uint64_t c : counts) {
        f.total_chars_ += c;
    }
    if (f.total_chars_ == 0) {
        throw DataError("CharFrequencyMap: zero total character count");
    }
    return f;
}

double CharFrequencyMap::frequency(char letter) const {
    return static_cast<double>(counts_[index(letter)]) / static_cast<double>(total_chars_);
}

double word_value(const Word& w, const CharFrequencyMap& freq) {
    if (!w.unique_letters()) {
        throw DataError("word_value: word has repeated letters: " + w.str());
    }
    // Sum in alphabetical letter order: anagrams add the same terms in the
    // same order and therefore get bit-identical values.
    double v = 0.0;
    const std::uint32_t mask = w.mask();
    for (int bit = 0; bit < 26; ++bit) {
        if (mask & (1u << bit)) {
            v += freq.frequency(static_cast<char>('a' + bit));
        }
    }
    return v;
}

WordValueMap WordValueMap::build(const UniqueWordList& unique, const CharFrequencyMap& freq) {
    std::vector<Entry> entries;
    entries.reserve(unique.words.size());
    for (const Word& w : unique.words) {
        entries.push_back({w, word_value(w, freq)});
    }
    return from_entries(std::move(entries));
}

WordValueMap WordValueMap::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.word < b.word; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!std::isfinite(entries[i].value)) {
            throw DataError("WordValueMap: non-finite value for " + entries[i].word.str());
        }
        if (i > 0 && entries[i].word == entries[i - 1].word) {
            throw DataError("WordValueMap: duplicate word " + entries[i].word.str());
        }
    }
    WordValueMap m;
    m.entries_ = std::move(entries);
    return m;
}

std::optional<double> WordValueMap::value_of(const Word& w) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                                     [](const Entry& e, const Word& key) { return e.word < key; });
    if (it != entries_.end() && it->word == w) return it->value;
    return std::nullopt;
}

WordValueMap WordValueMap::filtered_by(const Word& w) const {
    WordValueMap out;
    out.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) {
        if (!overlaps(w, e.word)) {
            out.entries_.push_back(e);
        }
    }
    return out;
}

WordValueMap WordValueMap::without(const WordSet& rejects) const {
    WordValueMap out;
    out.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) {
        if (!rejects.contains(e.word)) {
            out.entries_.push_back(e);
        }
    }
    return out;
}

WordValueMap WordValueMap::restricted_to(const WordSet& allowed) const {
    WordValueMap out;
    out.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) {
        if (allowed.contains(e.word)) {
            out.entries_.push_back(e);
        }
    }
    return out;
}

WordValueMap WordValueMap::without_masks(std::span<const std::uint32_t> masks) const {
    WordValueMap out;
    out.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) {
        bool drop = false;
        for (std::uint32_t m : masks) {
            if (e.word.mask() == m) {
                drop = true;
                break;
            }
        }
        if (!drop) out.entries_.push_back(e);
    }
    return out;
}

CharFrequencyMap char_frequencies(const AllWordList& all) {
    return CharFrequencyMap::tally(all);
}

WordValueMap build_value_map(const UniqueWordList& unique, const CharFrequencyMap& freq) {
    return WordValueMap::build(unique, freq);
}

} // namespace wordseed
