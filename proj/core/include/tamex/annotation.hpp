#ifndef TAMEX_ANNOTATION_HPP
#define TAMEX_ANNOTATION_HPP

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tamex {

// How a sentence is turned into comparison units. String matches raw
// characters; Analysis matches the morphological annotation (thesaurus
// category digits and inflectional form) as well.
enum class Method : std::uint8_t { String = 1, Analysis = 2 };

std::string_view to_string(Method m);
// Accepts "1"/"2" and the aliases "string"/"analysis".
Method parse_method(std::string_view text);

// One tokenized segment. The category is a 10-digit thesaurus code whose
// positions spell out a seven-level is-a hierarchy; the last three digits
// are never used for matching. The inflection label is matched as opaque
// character content.
struct Morpheme {
    std::string surface;  // UTF-8, non-empty
    std::optional<std::string> category;
    std::optional<std::string> inflection;

    friend bool operator==(const Morpheme&, const Morpheme&) = default;
};

enum class UnitKind : std::uint8_t {
    SurfaceChar,
    CategoryPair,    // thesaurus digits 6-7 as one two-digit group
    CategoryDigit,   // one of thesaurus digits 1-5
    InflectionChar,
    Delimiter,
};

// The atom of suffix matching. Payload is the codepoint for character
// kinds, 0-99 for CategoryPair, 0-9 for CategoryDigit, 0 for Delimiter.
struct Unit {
    UnitKind kind = UnitKind::Delimiter;
    std::uint32_t payload = 0;

    friend constexpr auto operator<=>(const Unit&, const Unit&) = default;
};

std::string to_string(const Unit& unit);

struct UnitSequence {
    std::vector<Unit> units;
    Method method = Method::String;

    friend bool operator==(const UnitSequence&, const UnitSequence&) = default;
};

std::string to_string(const UnitSequence& seq);

// Surface -> annotation table used by the built-in tokenizer. Stands in
// for a real analyzer's dictionary; load() reads a TSV of
// surface <TAB> category(10 digits or '-') <TAB> inflection(label or '-').
class Lexicon {
public:
    struct Entry {
        std::optional<std::string> category;
        std::optional<std::string> inflection;
    };

    static Lexicon load(const std::filesystem::path& path);

    // Throws FormatError if the category is not exactly 10 digits.
    void add(std::string surface, std::optional<std::string> category,
             std::optional<std::string> inflection);

    const Entry* find(const std::string& surface) const;
    std::size_t max_surface_chars() const { return max_surface_chars_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::unordered_map<std::string, Entry> entries_;
    std::size_t max_surface_chars_ = 0;
};

// One SurfaceChar unit per character. Throws EmptySentenceError.
UnitSequence raw_units(std::string_view sentence);

// Greedy longest-match segmentation from the left; characters not in the
// lexicon become single-character morphemes without annotation. The
// concatenation of the returned surfaces equals the input.
std::vector<Morpheme> tokenize(std::string_view sentence, const Lexicon& lexicon);

// Unit block for one morpheme: surface characters, then (if a category is
// present) the digit-6-7 pair followed by digits 5..1, then the inflection
// characters, then one Delimiter. Digits 8-10 are never emitted. Reversing
// digits 1-5 makes suffix matching walk the hierarchy coarse level first.
std::vector<Unit> annotate_morpheme(const Morpheme& morpheme);

// Joins the morpheme blocks into the sentence's comparison string. The
// delimiter separates blocks, so the block of the final morpheme ends the
// sequence without one.
UnitSequence encode_sentence(const std::vector<Morpheme>& morphemes);

// Strips terminal punctuation and encodes with the given method.
// The lexicon is required for Method::Analysis.
UnitSequence encode_query(std::string_view sentence, Method method,
                          const Lexicon* lexicon);

}  // namespace tamex

#endif  // TAMEX_ANNOTATION_HPP
