#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordseed {

/// A validated lowercase five-letter token. The unit every algorithm
/// operates on. Immutable after construction; letters may repeat.
class Word {
public:
    static constexpr std::size_t kLength = 5;

    /// Strict parse: accepts exactly five characters, all in a-z.
    /// No case folding; use normalize() for raw corpus tokens.
    static std::optional<Word> from_letters(std::string_view letters);

    std::string_view view() const { return {letters_.data(), kLength}; }
    std::string str() const { return std::string(view()); }

    /// One bit per distinct letter: bit 0 = 'a' .. bit 25 = 'z'.
    std::uint32_t mask() const { return mask_; }

    /// True when all five letters are pairwise distinct.
    bool unique_letters() const;

    /// Dense integer encoding (base 26), useful as a hash/dedup key.
    std::uint32_t code() const;

    char operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
    Word() = default;
    std::array<char, kLength> letters_{};
    std::uint32_t mask_ = 0;
};

enum class NormalizeError {
    none,
    wrong_length,
    non_letter,
};

/// Outcome of normalize(): either a Word or the reason the token was refused.
struct Normalized {
    std::optional<Word> word;
    NormalizeError error = NormalizeError::none;

    bool ok() const { return word.has_value(); }
};

/// Raw word-list entries exactly as read from the source, one per line,
/// order and duplicates preserved. Normalization happens downstream.
struct RawLexicon {
    std::vector<std::string> entries;
    /// Provenance label: path plus a content hash of the bytes read.
    std::string source_id;
};

/// Every five-letter word of the source, case-folded, de-duplicated,
/// in first-occurrence order.
struct AllWordList {
    std::vector<Word> words;

    std::size_t size() const { return words.size(); }
    std::uint64_t total_chars() const { return static_cast<std::uint64_t>(words.size()) * Word::kLength; }
};

/// The subset of an AllWordList whose words have five distinct letters,
/// order preserved.
struct UniqueWordList {
    std::vector<Word> words;

    std::size_t size() const { return words.size(); }
};

/// FNV-1a 64-bit hash, used to pin word-list snapshots in output.
std::uint64_t fnv1a64(std::string_view bytes);

/// Reads a newline-delimited UTF-8 word list. Lines are split on '\n';
/// one trailing '\r' per line is stripped; nothing else is touched.
/// Throws DataError on I/O failure or invalid UTF-8 (named byte offset).
RawLexicon load_lexicon(std::istream& in, const std::string& source_label);
RawLexicon load_lexicon(const std::string& path);

/// ASCII-lowercases the token and accepts it iff the result is exactly
/// five characters, all a-z. Rejection is a normal outcome, not an error.
Normalized normalize(std::string_view token);

/// Keeps the normalize-accepted five-letter words, de-duplicated,
/// in first-occurrence order.
AllWordList build_all_list(const RawLexicon& lexicon);

/// Keeps the words whose five letters are pairwise distinct.
UniqueWordList build_unique_list(const AllWordList& all);

} // namespace wordseed
