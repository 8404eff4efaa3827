#ifndef TAMEX_SIMILARITY_HPP
#define TAMEX_SIMILARITY_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "tamex/annotation.hpp"
#include "tamex/corpus.hpp"

namespace tamex {

// Count of matching trailing units between two sequences.
using SimilarityScore = std::uint32_t;

// A retrieved example: which corpus pair, how many trailing units it
// shares with the query, and the label it votes for.
struct Neighbor {
    std::size_t ordinal = 0;
    SimilarityScore similarity = 0;
    TamCategory label = TamCategory::Present;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Longest n such that the last n units of a and b are equal.
// Throws MethodMismatchError when the sequences' methods differ.
SimilarityScore suffix_similarity(const UnitSequence& a, const UnitSequence& b);

// A corpus pair's encoded form, ready for retrieval.
struct IndexedSequence {
    std::size_t ordinal = 0;
    TamCategory label = TamCategory::Present;
    std::vector<Unit> units;
};

// Encodes every pair of the corpus with the given method. The lexicon is
// required for Method::Analysis. Throws EmptyCorpusError.
std::vector<IndexedSequence> encode_corpus(const Corpus& corpus, Method method,
                                           const Lexicon* lexicon = nullptr);

// Reference retrieval: scores every entry with suffix_similarity and sorts
// by (similarity desc, ordinal asc). Kept as the oracle the index is
// checked against.
std::vector<Neighbor> retrieve_linear(std::span<const IndexedSequence> entries,
                                      const UnitSequence& query, std::size_t cap,
                                      std::optional<std::size_t> exclude_ordinal = {});

// All example sequences sorted by reversed-sequence lexicographic order,
// so the entries sharing the longest suffix with a query sit next to its
// insertion point. Immutable after build; concurrent retrieval is safe.
class SuffixIndex {
public:
    static SuffixIndex build(const Corpus& corpus, Method method,
                             const Lexicon* lexicon = nullptr);
    static SuffixIndex build(std::vector<IndexedSequence> entries, Method method);

    // Neighbors sorted by (similarity desc, ordinal asc), truncated to cap.
    // Zero-similarity entries are legal results. Throws MethodMismatchError,
    // EmptyIndexError.
    std::vector<Neighbor> retrieve(const UnitSequence& query, std::size_t cap,
                                   std::optional<std::size_t> exclude_ordinal = {}) const;

    Method method() const { return method_; }
    std::size_t size() const { return entries_.size(); }

    // Versioned JSON snapshot (see docs/formats.md). Rebuilding from the
    // same corpus writes an identical file.
    void save(const std::filesystem::path& path) const;
    static SuffixIndex load(const std::filesystem::path& path);

    const std::vector<IndexedSequence>& entries() const { return entries_; }

private:
    SuffixIndex(std::vector<IndexedSequence> entries, Method method);

    std::vector<IndexedSequence> entries_;  // sorted by reversed-lex order
    std::vector<std::size_t> by_ordinal_;   // entry positions, ordinal ascending
    Method method_ = Method::String;
};

}  // namespace tamex

#endif  // TAMEX_SIMILARITY_HPP
