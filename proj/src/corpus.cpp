#include "wordseed/corpus.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "wordseed/errors.hpp"

namespace wordseed {

namespace {

bool is_lower_letter(char c) {
    return c >= 'a' && c <= 'z';
}

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Returns the byte offset of the first invalid UTF-8 sequence, or nullopt.
std::optional<std::size_t> first_invalid_utf8(std::string_view bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        if (b0 < 0x80) {
            ++i;
            continue;
        }
        std::size_t len;
        unsigned min_cp, cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2; cp = b0 & 0x1Fu; min_cp = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3; cp = b0 & 0x0Fu; min_cp = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4; cp = b0 & 0x07u; min_cp = 0x10000;
        } else {
            return i;
        }
        if (i + len > n) return i;
        for (std::size_t k = 1; k < len; ++k) {
            const auto bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk & 0xC0) != 0x80) return i;
            cp = (cp << 6) | (bk & 0x3Fu);
        }
        if (cp < min_cp) return i;                    // overlong
        if (cp > 0x10FFFF) return i;                  // beyond Unicode
        if (cp >= 0xD800 && cp <= 0xDFFF) return i;   // surrogate
        i += len;
    }
    return std::nullopt;
}

} // namespace

std::optional<Word> Word::from_letters(std::string_view letters) {
    if (letters.size() != kLength) return std::nullopt;
    Word w;
    for (std::size_t i = 0; i < kLength; ++i) {
        const char c = letters[i];
        if (!is_lower_letter(c)) return std::nullopt;
        w.letters_[i] = c;
        w.mask_ |= 1u << (c - 'a');
    }
    return w;
}

bool Word::unique_letters() const {
    return std::popcount(mask_) == static_cast<int>(kLength);
}

std::uint32_t Word::code() const {
    std::uint32_t code = 0;
    for (char c : letters_) {
        code = code * 26u + static_cast<std::uint32_t>(c - 'a');
    }
    return code;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

RawLexicon load_lexicon(std::istream& in, const std::string& source_label) {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw DataError("load_lexicon: read failure on " + source_label);
    }
    std::string bytes = std::move(buf).str();

    if (auto offset = first_invalid_utf8(bytes)) {
        throw DataError("load_lexicon: invalid UTF-8 at byte offset " + std::to_string(*offset) +
                        " in " + source_label);
    }

    RawLexicon lexicon;
    char hash_hex[17];
    std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    lexicon.source_id = source_label + "#fnv1a64=" + hash_hex;

    // Split on '\n'; strip one trailing '\r' per line. A final newline does
    // not produce a phantom empty entry.
    std::size_t start = 0;
    while (start <= bytes.size()) {
        const std::size_t nl = bytes.find('\n', start);
        std::size_t end = (nl == std::string::npos) ? bytes.size() : nl;
        if (nl == std::string::npos && start == bytes.size()) break;
        std::size_t len = end - start;
        if (len > 0 && bytes[end - 1] == '\r') --len;
        lexicon.entries.emplace_back(bytes, start, len);
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return lexicon;
}

RawLexicon load_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("load_lexicon: cannot open word list " + path);
    }
    return load_lexicon(in, path);
}

Normalized normalize(std::string_view token) {
    std::string folded;
    folded.reserve(token.size());
    for (char c : token) {
        folded.push_back(ascii_lower(c));
    }
    for (char c : folded) {
        if (!is_lower_letter(c)) {
            return {std::nullopt, NormalizeError::non_letter};
        }
    }
    if (folded.size() != Word::kLength) {
        return {std::nullopt, NormalizeError::wrong_length};
    }
    return {Word::from_letters(folded), NormalizeError::none};
}

AllWordList build_all_list(const RawLexicon& lexicon) {
    AllWordList all;
    std::unordered_set<std::uint32_t> seen;
    for (const std::string& entry : lexicon.entries) {
        const Normalized n = normalize(entry);
        if (!n.ok()) continue;
        if (seen.insert(n.word->code()).second) {
            all.words.push_back(*n.word);
        }
    }
    return all;
}

UniqueWordList build_unique_list(const AllWordList& all) {
    UniqueWordList unique;
    for (const Word& w : all.words) {
        if (w.unique_letters()) {
            unique.words.push_back(w);
        }
    }
    return unique;
}

} // namespace wordseed
