#ifndef TAMEX_KNN_HPP
#define TAMEX_KNN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tamex/similarity.hpp"

namespace tamex {

// At most this many examples ever vote, however far a similarity tie
// stretches past k.
inline constexpr std::size_t kNeighborCap = 10;

// Everything the vote did, for --explain output and tests.
struct VoteTrace {
    std::size_t k_requested = 0;
    std::vector<Neighbor> neighbors_used;
    std::map<TamCategory, std::size_t> tally;
    TamCategory winner = TamCategory::Present;
    bool tie_broken = false;

    friend bool operator==(const VoteTrace&, const VoteTrace&) = default;
};

// Takes the first k of a ranked list; when the k-th selected is tied in
// similarity with later neighbors, the selection extends through the whole
// tie, then is cut at cap in ranked order. Fewer than k available means all
// are used. Throws EmptyNeighborListError.
std::vector<Neighbor> select_neighbors(std::span<const Neighbor> ranked,
                                       std::size_t k,
                                       std::size_t cap = kNeighborCap);

// Majority vote. On a tied count the label of the earliest-ranked neighbor
// among the tied labels wins ("the example obtained first").
VoteTrace vote(std::span<const Neighbor> selected);

// End-to-end: encode the sentence, retrieve, select, vote. The lexicon is
// required for Method::Analysis indices. exclude_ordinal supports
// leave-one-out evaluation.
VoteTrace classify(const SuffixIndex& index, std::string_view sentence,
                   std::size_t k, const Lexicon* lexicon = nullptr,
                   std::optional<std::size_t> exclude_ordinal = {},
                   std::size_t cap = kNeighborCap);

// Serialized JSON object with the VoteTrace fields.
std::string to_json(const VoteTrace& trace);

}  // namespace tamex

#endif  // TAMEX_KNN_HPP
