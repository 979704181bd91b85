#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wordseed {

enum class OutputFormat {
    json,
    tsv,
    table,
};

/// One resolved invocation of a subcommand.
struct RunConfig {
    std::string corpus_path;
    std::vector<std::string> reject_paths;
    std::optional<std::string> allowed_path;
    int depth = 3;
    int top_n = 10;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> solutions_path; // eval only
    std::optional<std::string> seeds_csv;      // eval only, "w1,w2,w3"
};

/// Letter statistics of the corpus: 26 rows of letter / count / frequency
/// plus word and character totals.
void cmd_freq(const RunConfig& config, std::ostream& out);

/// Full pipeline: corpus -> frequencies -> values -> candidate chains,
/// with reject/allowed filtering. Emits the top chains.
void cmd_select(const RunConfig& config, std::ostream& out);

/// Evaluates a seed chain (explicit --seeds, or the top selected chain)
/// against a solution list.
void cmd_eval(const RunConfig& config, std::ostream& out);

/// Parses argv and dispatches. Returns the process exit status:
/// 0 success, 1 usage error, 2 data/domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wordseed
