#include "tamex/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "tamex/errors.hpp"

namespace tamex {

namespace {

struct LabelRow {
    TamCategory category;
    std::string_view canonical;
    std::string_view abbrev;
};

constexpr std::array<LabelRow, kTamCategoryCount> kLabels{{
    {TamCategory::Present, "Present", "Pr."},
    {TamCategory::Past, "Past", "P."},
    {TamCategory::PresentProgressive, "Present progressive", "Pr.-ing"},
    {TamCategory::PastProgressive, "Past progressive", "P.-ing"},
    {TamCategory::PresentPerfect, "Present perfect", "Perf."},
    {TamCategory::PastPerfect, "Past perfect", "P.Perf."},
    {TamCategory::PresentPerfectProgressive, "Present perfect progressive", "Perf.-ing"},
    {TamCategory::PastPerfectProgressive, "Past perfect progressive", "P.Perf.-ing"},
    {TamCategory::Imperative, "Imperative", "Imp."},
    {TamCategory::BeAbleToPresent, "be able to (Present)", "able(Pr.)"},
    {TamCategory::BeAbleToPast, "be able to (Past)", "able(P.)"},
    {TamCategory::BeGoingToPresent, "be going to (Present)", "going(Pr.)"},
    {TamCategory::BeGoingToPast, "be going to (Past)", "going(P.)"},
    {TamCategory::Can, "can", "can"},
    {TamCategory::Could, "could", "could"},
    {TamCategory::HaveTo, "have to", "have to"},
    {TamCategory::HadTo, "had to", "had to"},
    {TamCategory::Let, "let", "let"},
    {TamCategory::May, "may", "may"},
    {TamCategory::Might, "might", "might"},
    {TamCategory::Must, "must", "must"},
    {TamCategory::Need, "need", "need"},
    {TamCategory::Ought, "ought", "ought"},
    {TamCategory::Shall, "shall", "shall"},
    {TamCategory::Should, "should", "should"},
    {TamCategory::Will, "will", "will"},
    {TamCategory::Would, "would", "would"},
}};

std::string lowered(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

const std::array<TamCategory, kTamCategoryCount>& all_categories() {
    static const std::array<TamCategory, kTamCategoryCount> cats = [] {
        std::array<TamCategory, kTamCategoryCount> a{};
        for (std::size_t i = 0; i < kLabels.size(); ++i) a[i] = kLabels[i].category;
        return a;
    }();
    return cats;
}

std::string_view to_string(TamCategory c) {
    return kLabels[static_cast<std::size_t>(c)].canonical;
}

std::string_view short_name(TamCategory c) {
    return kLabels[static_cast<std::size_t>(c)].abbrev;
}

TamCategory parse_label(std::string_view text) {
    const std::string needle = lowered(text);
    for (const LabelRow& row : kLabels) {
        if (needle == lowered(row.canonical)) return row.category;
    }
    throw UnknownLabelError(std::string(text));
}

EvalGroup eval_group(TamCategory c) {
    switch (c) {
        case TamCategory::Present:
            return EvalGroup::Present;
        case TamCategory::Past:
            return EvalGroup::Past;
        default:
            return EvalGroup::Other;
    }
}

std::string_view to_string(EvalGroup g) {
    switch (g) {
        case EvalGroup::Present:
            return "Present";
        case EvalGroup::Past:
            return "Past";
        default:
            return "Other";
    }
}

}  // namespace tamex
