#ifndef TAMEX_TAXONOMY_HPP
#define TAMEX_TAXONOMY_HPP

#include <array>
#include <cstdint>
#include <string_view>

namespace tamex {

// The closed set of 27 tense/aspect/modality categories: the eight
// tense x progressive x perfect combinations, the imperative, and
// eighteen auxiliaries. "must" vs "have to" and "can" vs "be able to"
// stay separate; classification is by English surface expression.
enum class TamCategory : std::uint8_t {
    Present,
    Past,
    PresentProgressive,
    PastProgressive,
    PresentPerfect,
    PastPerfect,
    PresentPerfectProgressive,
    PastPerfectProgressive,
    Imperative,
    BeAbleToPresent,
    BeAbleToPast,
    BeGoingToPresent,
    BeGoingToPast,
    Can,
    Could,
    HaveTo,
    HadTo,
    Let,
    May,
    Might,
    Must,
    Need,
    Ought,
    Shall,
    Should,
    Will,
    Would,
};

inline constexpr std::size_t kTamCategoryCount = 27;

const std::array<TamCategory, kTamCategoryCount>& all_categories();

// Canonical spelling (see docs/labels.md). parse_label is its inverse,
// case-insensitive; throws UnknownLabelError.
std::string_view to_string(TamCategory c);
TamCategory parse_label(std::string_view text);

// Table-style abbreviation (Pr., P., -ing, Perf., Imp. pieces).
std::string_view short_name(TamCategory c);

// Evaluation grouping: Present and Past keep their own column,
// everything else is scored under Other.
enum class EvalGroup : std::uint8_t { Present, Past, Other };

EvalGroup eval_group(TamCategory c);
std::string_view to_string(EvalGroup g);

}  // namespace tamex

#endif  // TAMEX_TAXONOMY_HPP
