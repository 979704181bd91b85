#include "wordseed/selector.hpp"

#include <algorithm>
#include <bit>

#include "wordseed/errors.hpp"

namespace wordseed {

namespace {

// Safety net against pathological fallback expansion on adversarial maps.
// Realistic inputs stay far below it; truncation is deterministic.
constexpr std::size_t kProcessNodeBudget = 200'000;
constexpr std::size_t kMaxRankedChains = 100'000;

int chain_height(const CandidateTree& t) {
    int deepest = 0;
    for (const CandidateTree& c : t.children) {
        deepest = std::max(deepest, chain_height(c));
    }
    return 1 + deepest;
}

std::vector<CandidateTree> process_impl(const WordValueMap& m, int depth, std::size_t& budget) {
    std::vector<CandidateTree> trees;
    if (depth <= 0 || m.empty()) return trees;

    WordValueMap working = m;
    int best_height = 0;
    while (!working.empty() && budget > 0) {
        const std::vector<Word> tier = simplify(best(working));

        std::vector<std::uint32_t> tier_masks;
        std::vector<CandidateTree> tier_trees;
        for (const Word& w : tier) {
            if (budget == 0) break;
            --budget;
            CandidateTree node;
            node.word = w;
            node.value = *working.value_of(w);
            for (const WordValueMap::Entry& e : working.entries()) {
                if (e.word.mask() == w.mask() && e.word != w) {
                    node.alternates.push_back(e.word);
                }
            }
            node.children = process_impl(filter_map(working, w), depth - 1, budget);
            tier_masks.push_back(w.mask());
            tier_trees.push_back(std::move(node));
        }

        int tier_height = 0;
        for (const CandidateTree& t : tier_trees) {
            tier_height = std::max(tier_height, chain_height(t));
        }
        // The top tier is the greedy result and is always kept. Lower tiers
        // are fallbacks for branches that exhausted the map early; they are
        // kept only when they reach strictly deeper than everything so far.
        if (trees.empty() || tier_height > best_height) {
            best_height = std::max(best_height, tier_height);
            for (CandidateTree& t : tier_trees) {
                trees.push_back(std::move(t));
            }
        }
        if (best_height >= depth) break;
        working = working.without_masks(tier_masks);
    }
    return trees;
}

void collect_paths(const CandidateTree& t,
                   std::size_t k,
                   std::vector<const CandidateTree*>& stack,
                   std::vector<std::vector<const CandidateTree*>>& paths) {
    stack.push_back(&t);
    if (stack.size() >= k || t.children.empty()) {
        paths.push_back(stack);
    } else {
        for (const CandidateTree& c : t.children) {
            collect_paths(c, k, stack, paths);
        }
    }
    stack.pop_back();
}

} // namespace

WordSet WordSet::load(const std::string& path) {
    const RawLexicon lexicon = load_lexicon(path);
    WordSet set;
    for (const std::string& entry : lexicon.entries) {
        const Normalized n = normalize(entry);
        if (!n.ok()) {
            throw DataError("word set " + path + ": invalid token \"" + entry + "\"");
        }
        set.insert(*n.word);
    }
    return set;
}

WordSet WordSet::from_words(std::span<const Word> words) {
    WordSet set;
    for (const Word& w : words) {
        set.insert(w);
    }
    return set;
}

bool overlaps(const Word& w1, const Word& w2) {
    return (w1.mask() & w2.mask()) != 0;
}

std::vector<Word> best(const WordValueMap& m) {
    if (m.empty()) {
        throw DataError("best: empty word value map");
    }
    std::vector<Word> out;
    double max_value = 0.0;
    bool first = true;
    for (const WordValueMap::Entry& e : m.entries()) { // lexicographic scan
        if (first || e.value > max_value) {
            out.clear();
            out.push_back(e.word);
            max_value = e.value;
            first = false;
        } else if (e.value == max_value) {
            out.push_back(e.word);
        }
    }
    return out;
}

std::vector<Word> simplify(std::vector<Word> words) {
    std::vector<Word> out;
    std::vector<Word> rest = std::move(words);
    while (!rest.empty()) {
        const Word head = rest.front();
        out.push_back(head);
        std::vector<Word> survivors;
        for (std::size_t i = 1; i < rest.size(); ++i) {
            if (!overlaps(head, rest[i])) {
                survivors.push_back(rest[i]);
            }
        }
        rest = std::move(survivors);
    }
    return out;
}

WordValueMap filter_map(const WordValueMap& m, const Word& w) {
    return m.filtered_by(w);
}

std::vector<CandidateTree> process(const WordValueMap& m, int max_depth) {
    if (max_depth < 1) {
        throw DataError("process: max_depth must be >= 1");
    }
    std::size_t budget = kProcessNodeBudget;
    return process_impl(m, max_depth, budget);
}

std::vector<SeedChain> rank_chains(std::span<const CandidateTree> trees,
                                   int k,
                                   const RejectList& reject,
                                   const std::optional<WordSet>& allowed) {
    if (k < 1) {
        throw DataError("rank_chains: k must be >= 1");
    }

    std::vector<std::vector<const CandidateTree*>> paths;
    std::vector<const CandidateTree*> stack;
    for (const CandidateTree& t : trees) {
        collect_paths(t, static_cast<std::size_t>(k), stack, paths);
    }

    const auto admissible = [&](const Word& w) {
        if (reject.contains(w)) return false;
        if (allowed && !allowed->contains(w)) return false;
        return true;
    };

    std::vector<SeedChain> chains;
    for (const auto& path : paths) {
        // Per-slot candidates: the representative plus its anagram
        // alternates, already in lexicographic order.
        std::vector<std::vector<Word>> slots;
        slots.reserve(path.size());
        bool viable = true;
        for (const CandidateTree* node : path) {
            std::vector<Word> cands;
            if (admissible(node->word)) cands.push_back(node->word);
            for (const Word& a : node->alternates) {
                if (admissible(a)) cands.push_back(a);
            }
            if (cands.empty()) {
                viable = false;
                break;
            }
            slots.push_back(std::move(cands));
        }
        if (!viable) continue;

        // Odometer over the slot candidates, lexicographic order.
        std::vector<std::size_t> pick(slots.size(), 0);
        bool exhausted = false;
        while (!exhausted && chains.size() < kMaxRankedChains) {
            SeedChain chain;
            std::uint32_t covered = 0;
            for (std::size_t i = 0; i < slots.size(); ++i) {
                const Word& w = slots[i][pick[i]];
                chain.words.push_back(w);
                chain.values.push_back(path[i]->value);
                chain.cumulative_value += path[i]->value;
                covered |= w.mask();
            }
            chain.chars_covered = std::popcount(covered);
            chains.push_back(std::move(chain));

            exhausted = true;
            for (std::size_t i = slots.size(); i-- > 0;) {
                if (++pick[i] < slots[i].size()) {
                    exhausted = false;
                    break;
                }
                pick[i] = 0;
            }
        }
        if (chains.size() >= kMaxRankedChains) break;
    }

    std::sort(chains.begin(), chains.end(), [](const SeedChain& a, const SeedChain& b) {
        if (a.words.size() != b.words.size()) return a.words.size() > b.words.size();
        if (a.cumulative_value != b.cumulative_value) return a.cumulative_value > b.cumulative_value;
        return a.words < b.words;
    });
    chains.erase(std::unique(chains.begin(), chains.end(),
                             [](const SeedChain& a, const SeedChain& b) { return a.words == b.words; }),
                 chains.end());
    return chains;
}

} // namespace wordseed
