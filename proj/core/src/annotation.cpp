#include "tamex/annotation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tamex/errors.hpp"
#include "tamex/utf8.hpp"

namespace tamex {

namespace {

bool is_ten_digits(const std::string& code) {
    return code.size() == 10 &&
           std::all_of(code.begin(), code.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::string_view to_string(Method m) {
    return m == Method::String ? "string" : "analysis";
}

Method parse_method(std::string_view text) {
    if (text == "1" || text == "string") return Method::String;
    if (text == "2" || text == "analysis") return Method::Analysis;
    throw Error("unknown method \"" + std::string(text) +
                "\" (expected 1, 2, string or analysis)");
}

std::string to_string(const Unit& unit) {
    switch (unit.kind) {
        case UnitKind::SurfaceChar:
        case UnitKind::InflectionChar:
            return "[" + utf8::encode_one(static_cast<char32_t>(unit.payload)) + "]";
        case UnitKind::CategoryPair: {
            std::string s = std::to_string(unit.payload);
            if (s.size() < 2) s.insert(s.begin(), '0');
            return "[" + s + "]";
        }
        case UnitKind::CategoryDigit:
            return "[" + std::to_string(unit.payload) + "]";
        case UnitKind::Delimiter:
            return "[:]";
    }
    return "[?]";
}

std::string to_string(const UnitSequence& seq) {
    std::string out;
    for (const Unit& u : seq.units) out += to_string(u);
    return out;
}

void Lexicon::add(std::string surface, std::optional<std::string> category,
                  std::optional<std::string> inflection) {
    if (surface.empty()) throw Error("lexicon surface must be non-empty");
    if (category && !is_ten_digits(*category))
        throw Error("lexicon category for \"" + surface +
                    "\" must be exactly 10 digits, got \"" + *category + "\"");
    max_surface_chars_ = std::max(max_surface_chars_, utf8::count(surface));
    entries_[std::move(surface)] =
        Entry{std::move(category), std::move(inflection)};
}

const Lexicon::Entry* Lexicon::find(const std::string& surface) const {
    auto it = entries_.find(surface);
    return it == entries_.end() ? nullptr : &it->second;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    Lexicon lexicon;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::string::size_type start = 0;
        while (true) {
            auto tab = line.find('\t', start);
            if (tab == std::string::npos) {
                cols.push_back(line.substr(start));
                break;
            }
            cols.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (cols.size() != 3)
            throw FormatError(line_no, "expected 3 tab-separated columns, got " +
                                           std::to_string(cols.size()));
        std::optional<std::string> category, inflection;
        if (cols[1] != "-" && !cols[1].empty()) category = cols[1];
        if (cols[2] != "-" && !cols[2].empty()) inflection = cols[2];
        try {
            lexicon.add(cols[0], std::move(category), std::move(inflection));
        } catch (const Error& e) {
            throw FormatError(line_no, e.what());
        }
    }
    return lexicon;
}

UnitSequence raw_units(std::string_view sentence) {
    if (sentence.empty()) throw EmptySentenceError();
    UnitSequence seq;
    seq.method = Method::String;
    for (char32_t cp : utf8::decode(sentence))
        seq.units.push_back({UnitKind::SurfaceChar, static_cast<std::uint32_t>(cp)});
    if (seq.units.empty()) throw EmptySentenceError();
    return seq;
}

std::vector<Morpheme> tokenize(std::string_view sentence, const Lexicon& lexicon) {
    if (sentence.empty()) throw EmptySentenceError();
    const std::vector<char32_t> cps = utf8::decode(sentence);
    std::vector<Morpheme> morphemes;
    std::size_t pos = 0;
    while (pos < cps.size()) {
        const std::size_t longest =
            std::min(lexicon.max_surface_chars(), cps.size() - pos);
        std::string surface;
        const Lexicon::Entry* entry = nullptr;
        for (std::size_t len = longest; len >= 1 && !entry; --len) {
            std::string candidate;
            for (std::size_t i = 0; i < len; ++i)
                candidate += utf8::encode_one(cps[pos + i]);
            if (const Lexicon::Entry* found = lexicon.find(candidate)) {
                surface = std::move(candidate);
                entry = found;
                pos += len;
            }
        }
        if (!entry) {
            morphemes.push_back({utf8::encode_one(cps[pos]), std::nullopt, std::nullopt});
            ++pos;
            continue;
        }
        morphemes.push_back({std::move(surface), entry->category, entry->inflection});
    }
    return morphemes;
}

std::vector<Unit> annotate_morpheme(const Morpheme& morpheme) {
    if (morpheme.surface.empty()) throw Error("morpheme surface must be non-empty");
    std::vector<Unit> units;
    for (char32_t cp : utf8::decode(morpheme.surface))
        units.push_back({UnitKind::SurfaceChar, static_cast<std::uint32_t>(cp)});
    if (morpheme.category) {
        const std::string& code = *morpheme.category;
        if (!is_ten_digits(code))
            throw Error("category code must be exactly 10 digits, got \"" + code + "\"");
        const std::uint32_t pair =
            static_cast<std::uint32_t>((code[5] - '0') * 10 + (code[6] - '0'));
        units.push_back({UnitKind::CategoryPair, pair});
        for (std::size_t i = 5; i-- > 0;)
            units.push_back(
                {UnitKind::CategoryDigit, static_cast<std::uint32_t>(code[i] - '0')});
    }
    if (morpheme.inflection) {
        for (char32_t cp : utf8::decode(*morpheme.inflection))
            units.push_back({UnitKind::InflectionChar, static_cast<std::uint32_t>(cp)});
    }
    units.push_back({UnitKind::Delimiter, 0});
    return units;
}

UnitSequence encode_sentence(const std::vector<Morpheme>& morphemes) {
    if (morphemes.empty()) throw EmptySentenceError();
    UnitSequence seq;
    seq.method = Method::Analysis;
    for (const Morpheme& m : morphemes) {
        std::vector<Unit> block = annotate_morpheme(m);
        seq.units.insert(seq.units.end(), block.begin(), block.end());
    }
    seq.units.pop_back();  // the delimiter separates blocks; none after the last
    return seq;
}

UnitSequence encode_query(std::string_view sentence, Method method,
                          const Lexicon* lexicon) {
    const std::string stripped = utf8::strip_terminal_punctuation(sentence);
    if (stripped.empty()) throw EmptySentenceError();
    if (method == Method::String) return raw_units(stripped);
    if (!lexicon)
        throw Error("the analysis method requires a lexicon");
    return encode_sentence(tokenize(stripped, *lexicon));
}

}  // namespace tamex
