#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "wordseed/corpus.hpp"
#include "wordseed/stats.hpp"

namespace wordseed {

/// A set of words with exact membership on normalized tokens.
/// Used for reject lists (words the target game refuses) and for
/// allowed-guess lists.
class WordSet {
public:
    WordSet() = default;

    /// Loads a newline-delimited word file. Every line must normalize to
    /// a valid word; a malformed line is a DataError naming the token.
    static WordSet load(const std::string& path);
    static WordSet from_words(std::span<const Word> words);

    void insert(const Word& w) { codes_.insert(w.code()); }
    void merge(const WordSet& other) { codes_.insert(other.codes_.begin(), other.codes_.end()); }
    bool contains(const Word& w) const { return codes_.count(w.code()) != 0; }
    std::size_t size() const { return codes_.size(); }
    bool empty() const { return codes_.empty(); }

private:
    std::unordered_set<std::uint32_t> codes_;
};

using RejectList = WordSet;

/// Node of the greedy candidate expansion. `word` is the representative
/// of its value tier; `alternates` are the words from the same tier with
/// the identical letter set (anagrams), which head exactly the same
/// subtree and are therefore not expanded separately.
struct CandidateTree {
    Word word;
    double value = 0.0;
    std::vector<Word> alternates;
    std::vector<CandidateTree> children;
};

/// An ordered, pairwise letter-disjoint word sequence with its values.
struct SeedChain {
    std::vector<Word> words;
    std::vector<double> values;
    double cumulative_value = 0.0;
    int chars_covered = 0;

    std::size_t length() const { return words.size(); }
};

/// True iff the two words share at least one letter.
bool overlaps(const Word& w1, const Word& w2);

/// All keys attaining the maximum value (exact float comparison),
/// in lexicographic order. Throws DataError on an empty map.
std::vector<Word> best(const WordValueMap& m);

/// Keeps the head of the list, drops every later word sharing a letter
/// with it, and repeats on the survivors. The result is pairwise
/// letter-disjoint and begins with the input head.
std::vector<Word> simplify(std::vector<Word> words);

/// The entries of `m` whose key shares no letter with `w`.
WordValueMap filter_map(const WordValueMap& m, const Word& w);

/// Greedy candidate expansion, depth-capped at `max_depth` (>= 1).
///
/// Roots are the disjoint representatives of the top value tier; each
/// node's children come from recursing on the map filtered by the node's
/// letters. When a branch exhausts the map before reaching the depth cap,
/// the next value tiers are tried as fallback siblings; fallback nodes
/// are kept only when they reach strictly deeper than everything before
/// them, so the output stays greedy-faithful.
std::vector<CandidateTree> process(const WordValueMap& m, int max_depth);

/// Enumerates root-to-depth-k paths of the trees, expands anagram
/// alternates, drops chains containing a rejected word (or, when an
/// allowed set is given, a word outside it), and orders the result:
/// longer chains first, then cumulative value descending, ties broken
/// lexicographically on the word sequence.
std::vector<SeedChain> rank_chains(std::span<const CandidateTree> trees,
                                   int k,
                                   const RejectList& reject,
                                   const std::optional<WordSet>& allowed = std::nullopt);

} // namespace wordseed
