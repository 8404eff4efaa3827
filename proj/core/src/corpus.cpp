#include "tamex/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tamex/errors.hpp"
#include "tamex/utf8.hpp"

namespace tamex {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path.string());
    return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string::size_type start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        std::string line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = nl + 1;
    }
    return lines;
}

TamCategory resolve_label(const std::string& raw, const std::string& english,
                          const LabelFallback& fallback, std::size_t line_no) {
    if (raw.empty() || raw == "-") {
        if (!fallback) throw FormatError(line_no, "record has no label");
        return fallback(english);
    }
    try {
        return parse_label(raw);
    } catch (const UnknownLabelError&) {
        if (fallback) return fallback(english);
        throw UnknownLabelError(raw + " (line " + std::to_string(line_no) + ")");
    }
}

ExamplePair make_pair(std::size_t ordinal, std::string japanese, std::string english,
                      TamCategory label, std::size_t line_no) {
    std::string stripped;
    try {
        stripped = utf8::strip_terminal_punctuation(japanese);
    } catch (const std::invalid_argument& e) {
        throw FormatError(line_no, e.what());
    }
    if (stripped.empty())
        throw FormatError(line_no, "Japanese side is empty after punctuation stripping");
    return ExamplePair{ordinal, std::move(stripped), std::move(english), label};
}

Corpus load_tsv(const std::filesystem::path& path, const LabelFallback& fallback) {
    std::vector<ExamplePair> pairs;
    const auto lines = split_lines(read_file(path));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        const std::size_t line_no = i + 1;
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
        if (cols.size() < 2 || cols.size() > 3)
            throw FormatError(line_no, "expected 2 or 3 tab-separated columns, got " +
                                           std::to_string(cols.size()));
        const std::string label_text = cols.size() == 3 ? cols[2] : std::string{};
        TamCategory label = resolve_label(label_text, cols[1], fallback, line_no);
        pairs.push_back(make_pair(pairs.size(), cols[0], cols[1], label, line_no));
    }
    return Corpus(std::move(pairs), path.string());
}

Corpus load_jsonl(const std::filesystem::path& path, const LabelFallback& fallback) {
    std::vector<ExamplePair> pairs;
    const auto lines = split_lines(read_file(path));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        const std::size_t line_no = i + 1;
        if (line.empty()) continue;
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object())
            throw FormatError(line_no, "not a JSON object");
        if (!record.contains("japanese") || !record.contains("english"))
            throw FormatError(line_no, "missing \"japanese\" or \"english\" field");
        if (!record["japanese"].is_string() || !record["english"].is_string())
            throw FormatError(line_no, "\"japanese\" and \"english\" must be strings");
        std::string english = record["english"].get<std::string>();
        std::string label_text;
        if (record.contains("label")) {
            if (!record["label"].is_string())
                throw FormatError(line_no, "\"label\" must be a string");
            label_text = record["label"].get<std::string>();
        }
        TamCategory label = resolve_label(label_text, english, fallback, line_no);
        pairs.push_back(make_pair(pairs.size(), record["japanese"].get<std::string>(),
                                  std::move(english), label, line_no));
    }
    return Corpus(std::move(pairs), path.string());
}

}  // namespace

Corpus::Corpus(std::vector<ExamplePair> pairs, std::string source_path)
    : pairs_(std::move(pairs)), source_path_(std::move(source_path)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) pairs_[i].ordinal = i;
}

CorpusStats Corpus::stats() const {
    CorpusStats s;
    s.pair_count = pairs_.size();
    for (const ExamplePair& p : pairs_) ++s.label_histogram[p.label];
    return s;
}

CorpusFormat guess_corpus_format(const std::filesystem::path& path) {
    return path.extension() == ".jsonl" ? CorpusFormat::Jsonl : CorpusFormat::Tsv;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   const LabelFallback& fallback) {
    return format == CorpusFormat::Tsv ? load_tsv(path, fallback)
                                       : load_jsonl(path, fallback);
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (const ExamplePair& p : corpus) {
        if (format == CorpusFormat::Tsv) {
            if (p.japanese.find('\t') != std::string::npos ||
                p.english.find('\t') != std::string::npos)
                throw FormatError(p.ordinal + 1, "field contains a tab, use JSONL");
            out << p.japanese << '\t' << p.english << '\t' << to_string(p.label)
                << '\n';
        } else {
            json record{{"japanese", p.japanese},
                        {"english", p.english},
                        {"label", std::string(to_string(p.label))}};
            out << record.dump() << '\n';
        }
    }
    if (!out) throw IoError("cannot write " + path.string());
}

bool ValidationReport::ok() const {
    for (const ValidationIssue& issue : issues)
        if (issue.severity == IssueSeverity::Error) return false;
    return true;
}

ValidationReport validate_corpus(const Corpus& corpus) {
    ValidationReport report;
    report.stats = corpus.stats();

    std::map<std::string, std::vector<std::size_t>> by_japanese;
    for (const ExamplePair& p : corpus) by_japanese[p.japanese].push_back(p.ordinal);
    for (const auto& [japanese, ordinals] : by_japanese) {
        if (ordinals.size() < 2) continue;
        std::string msg = "duplicate Japanese sentence \"" + japanese + "\" at ordinals";
        for (std::size_t o : ordinals) msg += " " + std::to_string(o);
        report.issues.push_back({IssueSeverity::Warning, ordinals, msg});
    }
    for (const ExamplePair& p : corpus) {
        if (p.english.empty())
            report.issues.push_back({IssueSeverity::Error,
                                     {p.ordinal},
                                     "empty English side at ordinal " +
                                         std::to_string(p.ordinal)});
    }
    return report;
}

std::string render_text(const ValidationReport& report) {
    std::ostringstream out;
    out << "pairs: " << report.stats.pair_count << '\n';
    for (const auto& [label, count] : report.stats.label_histogram)
        out << "  " << to_string(label) << ": " << count << '\n';
    if (report.issues.empty()) {
        out << "no issues\n";
    } else {
        for (const ValidationIssue& issue : report.issues)
            out << (issue.severity == IssueSeverity::Error ? "error: " : "warning: ")
                << issue.message << '\n';
    }
    return out.str();
}

std::string to_json(const ValidationReport& report) {
    json issues = json::array();
    for (const ValidationIssue& issue : report.issues) {
        issues.push_back(
            {{"severity", issue.severity == IssueSeverity::Error ? "error" : "warning"},
             {"ordinals", issue.ordinals},
             {"message", issue.message}});
    }
    json histogram = json::object();
    for (const auto& [label, count] : report.stats.label_histogram)
        histogram[std::string(to_string(label))] = count;
    json doc{{"pair_count", report.stats.pair_count},
             {"label_histogram", histogram},
             {"issues", issues},
             {"ok", report.ok()}};
    return doc.dump(2);
}

}  // namespace tamex
