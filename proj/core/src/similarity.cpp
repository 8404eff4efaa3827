#include "tamex/similarity.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "tamex/errors.hpp"

namespace tamex {

namespace {

using nlohmann::json;

SimilarityScore common_suffix_length(const std::vector<Unit>& a,
                                     const std::vector<Unit>& b) {
    const std::size_t limit = std::min(a.size(), b.size());
    std::size_t n = 0;
    while (n < limit && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
    return static_cast<SimilarityScore>(n);
}

// Lexicographic order of the reversed sequences. Entries adjacent in this
// order share the longest suffixes.
bool reversed_less(const std::vector<Unit>& a, const std::vector<Unit>& b) {
    const std::size_t limit = std::min(a.size(), b.size());
    for (std::size_t i = 1; i <= limit; ++i) {
        const Unit& ua = a[a.size() - i];
        const Unit& ub = b[b.size() - i];
        if (ua != ub) return ua < ub;
    }
    return a.size() < b.size();
}

void sort_ranked(std::vector<Neighbor>& neighbors) {
    std::sort(neighbors.begin(), neighbors.end(),
              [](const Neighbor& x, const Neighbor& y) {
                  if (x.similarity != y.similarity) return x.similarity > y.similarity;
                  return x.ordinal < y.ordinal;
              });
}

}  // namespace

SimilarityScore suffix_similarity(const UnitSequence& a, const UnitSequence& b) {
    if (a.method != b.method)
        throw MethodMismatchError("cannot compare unit sequences of different methods");
    return common_suffix_length(a.units, b.units);
}

std::vector<IndexedSequence> encode_corpus(const Corpus& corpus, Method method,
                                           const Lexicon* lexicon) {
    if (corpus.empty()) throw EmptyCorpusError("corpus has no pairs");
    if (method == Method::Analysis && !lexicon)
        throw Error("the analysis method requires a lexicon");
    std::vector<IndexedSequence> entries;
    entries.reserve(corpus.size());
    for (const ExamplePair& pair : corpus) {
        UnitSequence seq = method == Method::String
                               ? raw_units(pair.japanese)
                               : encode_sentence(tokenize(pair.japanese, *lexicon));
        entries.push_back({pair.ordinal, pair.label, std::move(seq.units)});
    }
    return entries;
}

std::vector<Neighbor> retrieve_linear(std::span<const IndexedSequence> entries,
                                      const UnitSequence& query, std::size_t cap,
                                      std::optional<std::size_t> exclude_ordinal) {
    std::vector<Neighbor> neighbors;
    neighbors.reserve(entries.size());
    for (const IndexedSequence& entry : entries) {
        if (exclude_ordinal && entry.ordinal == *exclude_ordinal) continue;
        neighbors.push_back({entry.ordinal,
                             common_suffix_length(entry.units, query.units),
                             entry.label});
    }
    sort_ranked(neighbors);
    if (neighbors.size() > cap) neighbors.resize(cap);
    return neighbors;
}

SuffixIndex::SuffixIndex(std::vector<IndexedSequence> entries, Method method)
    : entries_(std::move(entries)), method_(method) {
    std::sort(entries_.begin(), entries_.end(),
              [](const IndexedSequence& a, const IndexedSequence& b) {
                  if (a.units != b.units) return reversed_less(a.units, b.units);
                  return a.ordinal < b.ordinal;
              });
    by_ordinal_.resize(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) by_ordinal_[i] = i;
    std::sort(by_ordinal_.begin(), by_ordinal_.end(),
              [this](std::size_t a, std::size_t b) {
                  return entries_[a].ordinal < entries_[b].ordinal;
              });
}

SuffixIndex SuffixIndex::build(const Corpus& corpus, Method method,
                               const Lexicon* lexicon) {
    return SuffixIndex(encode_corpus(corpus, method, lexicon), method);
}

SuffixIndex SuffixIndex::build(std::vector<IndexedSequence> entries, Method method) {
    if (entries.empty()) throw EmptyCorpusError("no entries to index");
    return SuffixIndex(std::move(entries), method);
}

std::vector<Neighbor> SuffixIndex::retrieve(
    const UnitSequence& query, std::size_t cap,
    std::optional<std::size_t> exclude_ordinal) const {
    if (entries_.empty()) throw EmptyIndexError();
    if (query.method != method_)
        throw MethodMismatchError("query method does not match index method");
    if (cap == 0) return {};

    const std::size_t n = entries_.size();
    const auto lcs_at = [&](std::size_t i) {
        return common_suffix_length(entries_[i].units, query.units);
    };

    // Insertion point of the query in reversed-lex order; the entries with
    // the longest shared suffix are adjacent to it.
    std::size_t pos = std::lower_bound(entries_.begin(), entries_.end(), query.units,
                                       [](const IndexedSequence& e,
                                          const std::vector<Unit>& q) {
                                           return reversed_less(e.units, q);
                                       }) -
                      entries_.begin();

    // Walk outward on both sides. Shared-suffix length is non-increasing
    // away from the insertion point, so the larger frontier is always the
    // best entry not yet visited. Stop once cap collected entries beat
    // everything still reachable; similarity ties must be fully enumerated
    // before capping, so equal frontiers keep the walk alive.
    std::ptrdiff_t down = static_cast<std::ptrdiff_t>(pos) - 1;
    std::size_t up = pos;
    SimilarityScore down_lcs = down >= 0 ? lcs_at(static_cast<std::size_t>(down)) : 0;
    SimilarityScore up_lcs = up < n ? lcs_at(up) : 0;

    std::vector<Neighbor> collected;
    // Min-heap of the best cap similarities seen so far.
    std::priority_queue<SimilarityScore, std::vector<SimilarityScore>,
                        std::greater<>> top;

    auto collect = [&](std::size_t i, SimilarityScore sim) {
        const IndexedSequence& e = entries_[i];
        if (exclude_ordinal && e.ordinal == *exclude_ordinal) return;
        collected.push_back({e.ordinal, sim, e.label});
        top.push(sim);
        if (top.size() > cap) top.pop();
    };

    while (down_lcs > 0 || up_lcs > 0) {
        const SimilarityScore max_remaining = std::max(down_lcs, up_lcs);
        if (top.size() >= cap && top.top() > max_remaining) break;
        if (down_lcs >= up_lcs) {
            collect(static_cast<std::size_t>(down), down_lcs);
            --down;
            down_lcs = down >= 0 ? std::min(down_lcs, lcs_at(static_cast<std::size_t>(down)))
                                 : 0;
        } else {
            collect(up, up_lcs);
            ++up;
            up_lcs = up < n ? std::min(up_lcs, lcs_at(up)) : 0;
        }
    }

    sort_ranked(collected);
    if (collected.size() > cap) collected.resize(cap);

    // Zero-similarity entries are legal results; fill remaining slots in
    // ordinal order, which is how the reference scan ranks them.
    if (collected.size() < cap) {
        std::vector<bool> taken(n, false);
        // Map collected ordinals back to entry positions via the walk range.
        for (std::ptrdiff_t i = down + 1; i < static_cast<std::ptrdiff_t>(up); ++i)
            taken[static_cast<std::size_t>(i)] = true;
        for (std::size_t entry_pos : by_ordinal_) {
            if (collected.size() >= cap) break;
            if (taken[entry_pos]) continue;
            const IndexedSequence& e = entries_[entry_pos];
            if (exclude_ordinal && e.ordinal == *exclude_ordinal) continue;
            const SimilarityScore sim = lcs_at(entry_pos);
            if (sim > 0) continue;  // already enumerated by the walk
            collected.push_back({e.ordinal, 0, e.label});
        }
        sort_ranked(collected);
    }
    return collected;
}

void SuffixIndex::save(const std::filesystem::path& path) const {
    json entries = json::array();
    for (const IndexedSequence& e : entries_) {
        json units = json::array();
        for (const Unit& u : e.units)
            units.push_back({static_cast<int>(u.kind), u.payload});
        entries.push_back({{"ordinal", e.ordinal},
                           {"label", std::string(to_string(e.label))},
                           {"units", units}});
    }
    json doc{{"format", "tamex-index"},
             {"version", 1},
             {"method", std::string(to_string(method_))},
             {"entries", entries}};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << doc.dump(1, '\t') << '\n';
    if (!out) throw IoError("cannot write " + path.string());
}

SuffixIndex SuffixIndex::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw FormatError(1, "not a JSON document");
    if (doc.value("format", "") != "tamex-index")
        throw FormatError(1, "not a tamex index file");
    if (doc.value("version", 0) != 1)
        throw FormatError(1, "unsupported index version");
    Method method = parse_method(doc.value("method", ""));
    std::vector<IndexedSequence> entries;
    for (const json& e : doc.at("entries")) {
        IndexedSequence seq;
        seq.ordinal = e.at("ordinal").get<std::size_t>();
        seq.label = parse_label(e.at("label").get<std::string>());
        for (const json& u : e.at("units")) {
            const int kind = u.at(0).get<int>();
            if (kind < 0 || kind > static_cast<int>(UnitKind::Delimiter))
                throw FormatError(1, "invalid unit kind");
            seq.units.push_back(
                {static_cast<UnitKind>(kind), u.at(1).get<std::uint32_t>()});
        }
        entries.push_back(std::move(seq));
    }
    if (entries.empty()) throw EmptyIndexError();
    return SuffixIndex(std::move(entries), method);
}

}  // namespace tamex
