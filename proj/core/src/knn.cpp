#include "tamex/knn.hpp"

#include <algorithm>

#include <json.hpp>

#include "tamex/errors.hpp"

namespace tamex {

std::vector<Neighbor> select_neighbors(std::span<const Neighbor> ranked,
                                       std::size_t k, std::size_t cap) {
    if (ranked.empty()) throw EmptyNeighborListError();
    if (k == 0) throw Error("k must be positive");
    std::size_t take = std::min(k, ranked.size());
    // Everyone tied with the k-th selected gets in too.
    while (take < ranked.size() &&
           ranked[take].similarity == ranked[take - 1].similarity)
        ++take;
    take = std::min(take, cap);
    return {ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take)};
}

VoteTrace vote(std::span<const Neighbor> selected) {
    if (selected.empty()) throw EmptyNeighborListError();
    VoteTrace trace;
    trace.neighbors_used.assign(selected.begin(), selected.end());
    for (const Neighbor& n : selected) ++trace.tally[n.label];

    std::size_t best = 0;
    for (const auto& [label, count] : trace.tally) best = std::max(best, count);
    std::size_t contenders = 0;
    for (const auto& [label, count] : trace.tally)
        if (count == best) ++contenders;

    // The earliest-ranked neighbor whose label holds the top count wins.
    for (const Neighbor& n : selected) {
        if (trace.tally.at(n.label) == best) {
            trace.winner = n.label;
            break;
        }
    }
    trace.tie_broken = contenders > 1;
    return trace;
}

VoteTrace classify(const SuffixIndex& index, std::string_view sentence,
                   std::size_t k, const Lexicon* lexicon,
                   std::optional<std::size_t> exclude_ordinal, std::size_t cap) {
    const UnitSequence query = encode_query(sentence, index.method(), lexicon);
    const std::vector<Neighbor> ranked = index.retrieve(query, cap, exclude_ordinal);
    const std::vector<Neighbor> selected = select_neighbors(ranked, k, cap);
    VoteTrace trace = vote(selected);
    trace.k_requested = k;
    return trace;
}

std::string to_json(const VoteTrace& trace) {
    nlohmann::json neighbors = nlohmann::json::array();
    for (const Neighbor& n : trace.neighbors_used)
        neighbors.push_back({{"ordinal", n.ordinal},
                             {"similarity", n.similarity},
                             {"label", std::string(to_string(n.label))}});
    nlohmann::json tally = nlohmann::json::object();
    for (const auto& [label, count] : trace.tally)
        tally[std::string(to_string(label))] = count;
    nlohmann::json doc{{"k_requested", trace.k_requested},
                       {"neighbors_used", neighbors},
                       {"tally", tally},
                       {"winner", std::string(to_string(trace.winner))},
                       {"tie_broken", trace.tie_broken}};
    return doc.dump();
}

}  // namespace tamex
