#ifndef TAMEX_CORPUS_HPP
#define TAMEX_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tamex/taxonomy.hpp"

namespace tamex {

// One bilingual example. The ordinal is the pair's position in the corpus
// file and defines the "obtained first" order used to break ties downstream.
struct ExamplePair {
    std::size_t ordinal = 0;
    std::string japanese;  // UTF-8, terminal punctuation already stripped
    std::string english;
    TamCategory label = TamCategory::Present;

    friend bool operator==(const ExamplePair&, const ExamplePair&) = default;
};

struct CorpusStats {
    std::size_t pair_count = 0;
    std::map<TamCategory, std::size_t> label_histogram;
};

class Corpus {
public:
    Corpus() = default;
    Corpus(std::vector<ExamplePair> pairs, std::string source_path);

    const std::vector<ExamplePair>& pairs() const { return pairs_; }
    const ExamplePair& at(std::size_t ordinal) const { return pairs_.at(ordinal); }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    const std::string& source_path() const { return source_path_; }

    CorpusStats stats() const;

    auto begin() const { return pairs_.begin(); }
    auto end() const { return pairs_.end(); }

    friend bool operator==(const Corpus& a, const Corpus& b) {
        return a.pairs_ == b.pairs_;
    }

private:
    std::vector<ExamplePair> pairs_;
    std::string source_path_;
};

enum class CorpusFormat { Tsv, Jsonl };

// Guesses the format from the file extension (.jsonl -> Jsonl, else Tsv).
CorpusFormat guess_corpus_format(const std::filesystem::path& path);

// Maps an English sentence to a label; used when a record has no usable
// label of its own. May throw to reject the record.
using LabelFallback = std::function<TamCategory(const std::string& english)>;

// TSV columns: japanese <TAB> english <TAB> label. Lines starting with '#'
// are comments, blank lines are skipped. JSONL: one object per line with
// fields "japanese"/"english"/"label". Throws IoError, FormatError,
// UnknownLabelError.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   const LabelFallback& fallback = nullptr);

void save_corpus(const Corpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format);

enum class IssueSeverity { Warning, Error };

struct ValidationIssue {
    IssueSeverity severity = IssueSeverity::Warning;
    std::vector<std::size_t> ordinals;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    CorpusStats stats;

    bool ok() const;  // true when no Error-severity issue is present
};

// Flags duplicated Japanese sides (warning) and empty English sides (error).
ValidationReport validate_corpus(const Corpus& corpus);

std::string render_text(const ValidationReport& report);
std::string to_json(const ValidationReport& report);

}  // namespace tamex

#endif  // TAMEX_CORPUS_HPP
