#pragma once

#include "finsent/date.hpp"

#include <string>
#include <vector>

namespace finsent {

struct Document {
    Date date;
    std::string text;
    std::string source; // empty when untagged
};

// Dated text records, sorted non-strictly by date. Many documents per date
// are expected; construction performs a stable sort.
class Corpus {
  public:
    Corpus() = default;
    explicit Corpus(std::vector<Document> documents);

    const std::vector<Document>& documents() const { return documents_; }
    std::size_t size() const { return documents_.size(); }
    bool empty() const { return documents_.empty(); }

    // [first, last) index range of documents dated within [from, to]
    std::pair<std::size_t, std::size_t> date_range(Date from, Date to) const;

  private:
    std::vector<Document> documents_;
};

// Set of lowercase terms; terms may be multi-word phrases. Stored sorted and
// deduplicated.
class Lexicon {
  public:
    Lexicon(std::string name, std::vector<std::string> terms);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool contains(const std::string& token) const;

  private:
    std::string name_;
    std::vector<std::string> terms_; // sorted, unique, lowercase
};

// One term per line, '#' comments and blank lines ignored, everything
// lowercased and trimmed. Zero surviving terms is an error.
Lexicon load_lexicon(const std::string& path);

// JSON-Lines ({"date","text","source"?}) or TSV (date<TAB>text[<TAB>source]),
// chosen by file extension. Malformed lines report their line number. An
// empty file yields an empty corpus.
Corpus load_corpus(const std::string& path);

void save_corpus_jsonl(const Corpus& corpus, const std::string& path);

// Splits on maximal runs of non-alphanumeric characters and lowercases.
// Word characters are ASCII letters and digits; any other byte separates,
// so non-ASCII punctuation splits tokens like ASCII punctuation does.
std::vector<std::string> tokenize(const std::string& text);

// Fraction of the document's tokens present in the lexicon; 0 for a document
// with no tokens. Multi-word lexicon terms never match here (they cannot
// equal a single token).
double negative_ratio(const Document& doc, const Lexicon& lex);

// True iff the term's tokens appear as a contiguous subsequence of the
// document's tokens.
bool contains_term(const Document& doc, const std::string& term);

// Token-level helpers shared by the indicator kernels.
bool contains_token_subsequence(const std::vector<std::string>& tokens,
                                const std::vector<std::string>& term_tokens);
// Counts every start position; overlapping occurrences all count.
std::size_t count_token_subsequence(const std::vector<std::string>& tokens,
                                    const std::vector<std::string>& term_tokens);

struct TermCount {
    std::string term;
    std::size_t count;
};

// Occurrences of each lexicon term across documents dated in [from, to],
// descending by count with alphabetical tie-break.
std::vector<TermCount> term_frequency_report(const Corpus& corpus, const Lexicon& lex,
                                             Date from, Date to);

// Tokenizes every document; the hot loop of all corpus scoring. The default
// build parallelizes over documents with OpenMP; the reference namespace
// keeps the plain serial loop for equivalence tests and benchmarks.
std::vector<std::vector<std::string>> tokenize_documents(const Corpus& corpus);

namespace reference {
std::vector<std::vector<std::string>> tokenize_documents(const Corpus& corpus);
std::vector<TermCount> term_frequency_report(const Corpus& corpus, const Lexicon& lex,
                                             Date from, Date to);
} // namespace reference

} // namespace finsent
