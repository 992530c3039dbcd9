#include "finsent/corpus.hpp"

#include "finsent/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace finsent {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lower_ascii(const std::string& s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool is_word_byte(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

Date parse_date_or_raise(const std::string& text, std::size_t line_no,
                         const std::string& path) {
    auto d = Date::parse(text);
    if (!d)
        raise(ErrorKind::MalformedLine,
              path + ":" + std::to_string(line_no) + ": invalid date '" + text + "'");
    return *d;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
    for (const auto& d : documents_)
        if (trim(d.text).empty())
            raise(ErrorKind::InvalidArgument,
                  "document dated " + d.date.iso() + " has empty text");
    std::stable_sort(documents_.begin(), documents_.end(),
                     [](const Document& a, const Document& b) { return a.date < b.date; });
}

std::pair<std::size_t, std::size_t> Corpus::date_range(Date from, Date to) const {
    auto lo = std::lower_bound(documents_.begin(), documents_.end(), from,
                               [](const Document& d, Date v) { return d.date < v; });
    auto hi = std::upper_bound(documents_.begin(), documents_.end(), to,
                               [](Date v, const Document& d) { return v < d.date; });
    return {static_cast<std::size_t>(lo - documents_.begin()),
            static_cast<std::size_t>(hi - documents_.begin())};
}

Lexicon::Lexicon(std::string name, std::vector<std::string> terms)
    : name_(std::move(name)) {
    for (auto& t : terms) {
        t = lower_ascii(trim(t));
        if (t.empty())
            raise(ErrorKind::InvalidArgument, "lexicon '" + name_ + "' has an empty term");
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    if (terms.empty())
        raise(ErrorKind::EmptyLexicon, "lexicon '" + name_ + "' has no terms");
    terms_ = std::move(terms);
}

bool Lexicon::contains(const std::string& token) const {
    return std::binary_search(terms_.begin(), terms_.end(), token);
}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::IoError, "cannot open lexicon file " + path);
    std::vector<std::string> terms;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        terms.push_back(t);
    }
    if (terms.empty())
        raise(ErrorKind::EmptyLexicon, "lexicon file " + path + " has no terms");
    return Lexicon(path, std::move(terms));
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::IoError, "cannot open corpus file " + path);
    bool jsonl = ends_with(path, ".jsonl");
    bool tsv = ends_with(path, ".tsv");
    if (!jsonl && !tsv)
        raise(ErrorKind::IoError,
              "corpus file " + path + " must end in .jsonl or .tsv");

    std::vector<Document> docs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        Document doc;
        if (jsonl) {
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.is_object() || !j.contains("date") ||
                !j.contains("text") || !j["date"].is_string() || !j["text"].is_string())
                raise(ErrorKind::MalformedLine,
                      path + ":" + std::to_string(line_no) + ": malformed record");
            doc.date = parse_date_or_raise(j["date"].get<std::string>(), line_no, path);
            doc.text = j["text"].get<std::string>();
            if (j.contains("source") && j["source"].is_string())
                doc.source = j["source"].get<std::string>();
        } else {
            std::size_t tab1 = line.find('\t');
            if (tab1 == std::string::npos)
                raise(ErrorKind::MalformedLine,
                      path + ":" + std::to_string(line_no) + ": expected date<TAB>text");
            std::size_t tab2 = line.find('\t', tab1 + 1);
            doc.date = parse_date_or_raise(line.substr(0, tab1), line_no, path);
            if (tab2 == std::string::npos) {
                doc.text = line.substr(tab1 + 1);
            } else {
                doc.text = line.substr(tab1 + 1, tab2 - tab1 - 1);
                doc.source = trim(line.substr(tab2 + 1));
            }
        }
        if (trim(doc.text).empty())
            raise(ErrorKind::MalformedLine,
                  path + ":" + std::to_string(line_no) + ": empty text");
        docs.push_back(std::move(doc));
    }
    return Corpus(std::move(docs));
}

void save_corpus_jsonl(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        raise(ErrorKind::IoError, "cannot write corpus file " + path);
    for (const auto& d : corpus.documents()) {
        nlohmann::json j;
        j["date"] = d.date.iso();
        j["text"] = d.text;
        if (!d.source.empty())
            j["source"] = d.source;
        out << j.dump() << "\n";
    }
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (is_word_byte(c)) {
            current.push_back(
                static_cast<char>(c < 0x80 ? std::tolower(c) : c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        tokens.push_back(std::move(current));
    return tokens;
}

double negative_ratio(const Document& doc, const Lexicon& lex) {
    auto tokens = tokenize(doc.text);
    if (tokens.empty())
        return 0.0;
    std::size_t hits = 0;
    for (const auto& t : tokens)
        if (lex.contains(t))
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

bool contains_token_subsequence(const std::vector<std::string>& tokens,
                                const std::vector<std::string>& term_tokens) {
    if (term_tokens.empty() || term_tokens.size() > tokens.size())
        return false;
    for (std::size_t i = 0; i + term_tokens.size() <= tokens.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < term_tokens.size(); ++j)
            if (tokens[i + j] != term_tokens[j]) {
                match = false;
                break;
            }
        if (match)
            return true;
    }
    return false;
}

std::size_t count_token_subsequence(const std::vector<std::string>& tokens,
                                    const std::vector<std::string>& term_tokens) {
    if (term_tokens.empty() || term_tokens.size() > tokens.size())
        return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + term_tokens.size() <= tokens.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < term_tokens.size(); ++j)
            if (tokens[i + j] != term_tokens[j]) {
                match = false;
                break;
            }
        if (match)
            ++count;
    }
    return count;
}

bool contains_term(const Document& doc, const std::string& term) {
    auto term_tokens = tokenize(term);
    if (term_tokens.empty())
        raise(ErrorKind::InvalidArgument, "contains_term needs a non-empty term");
    return contains_token_subsequence(tokenize(doc.text), term_tokens);
}

std::vector<std::vector<std::string>> tokenize_documents(const Corpus& corpus) {
    const auto& docs = corpus.documents();
    std::vector<std::vector<std::string>> out(docs.size());
    std::ptrdiff_t n = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = tokenize(docs[static_cast<std::size_t>(i)].text);
    return out;
}

namespace reference {

std::vector<std::vector<std::string>> tokenize_documents(const Corpus& corpus) {
    const auto& docs = corpus.documents();
    std::vector<std::vector<std::string>> out;
    out.reserve(docs.size());
    for (const auto& d : docs)
        out.push_back(tokenize(d.text));
    return out;
}

std::vector<TermCount> term_frequency_report(const Corpus& corpus, const Lexicon& lex,
                                             Date from, Date to) {
    if (from > to)
        raise(ErrorKind::InvalidArgument, "term_frequency_report needs from <= to");
    std::vector<TermCount> out;
    out.reserve(lex.size());
    auto [lo, hi] = corpus.date_range(from, to);
    for (const auto& term : lex.terms()) {
        auto term_tokens = tokenize(term);
        std::size_t count = 0;
        for (std::size_t i = lo; i < hi; ++i)
            count += count_token_subsequence(tokenize(corpus.documents()[i].text),
                                             term_tokens);
        out.push_back({term, count});
    }
    std::sort(out.begin(), out.end(), [](const TermCount& a, const TermCount& b) {
        if (a.count != b.count)
            return a.count > b.count;
        return a.term < b.term;
    });
    return out;
}

} // namespace reference

std::vector<TermCount> term_frequency_report(const Corpus& corpus, const Lexicon& lex,
                                             Date from, Date to) {
    if (from > to)
        raise(ErrorKind::InvalidArgument, "term_frequency_report needs from <= to");
    auto [lo, hi] = corpus.date_range(from, to);
    std::size_t n_docs = hi - lo;

    std::vector<std::vector<std::string>> tokens(n_docs);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_docs); ++i)
        tokens[static_cast<std::size_t>(i)] =
            tokenize(corpus.documents()[lo + static_cast<std::size_t>(i)].text);

    const auto& terms = lex.terms();
    std::vector<TermCount> out(terms.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(terms.size()); ++t) {
        auto term_tokens = tokenize(terms[static_cast<std::size_t>(t)]);
        std::size_t count = 0;
        for (const auto& doc_tokens : tokens)
            count += count_token_subsequence(doc_tokens, term_tokens);
        out[static_cast<std::size_t>(t)] = {terms[static_cast<std::size_t>(t)], count};
    }
    std::sort(out.begin(), out.end(), [](const TermCount& a, const TermCount& b) {
        if (a.count != b.count)
            return a.count > b.count;
        return a.term < b.term;
    });
    return out;
}

} // namespace finsent
