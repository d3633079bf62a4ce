#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace citenet {

enum class DocType : std::uint8_t { article, review, other };

/// Case-insensitive; anything that is not "article" or "review" maps to
/// other (bibliographic databases carry many document types, only the
/// article/review partition matters here).
DocType parse_doc_type(std::string_view s);
std::string_view to_string(DocType t);

struct PaperRecord {
    std::string id;
    int year = 0;
    std::string venue;
    DocType doc_type = DocType::other;

    bool operator==(const PaperRecord&) const = default;
};

/// An edge stores indices into Corpus::papers(); endpoints therefore always
/// resolve to retained records.
struct CitationEdge {
    std::uint32_t citing = 0;
    std::uint32_t cited = 0;

    bool operator==(const CitationEdge&) const = default;
};

struct FilterConfig {
    bool allow_article = true;
    bool allow_review = true;
    bool allow_other = false;
    int year_min = 1900;
    int year_max = 2100;
    /// When true, edges whose endpoints were filtered away (or never
    /// existed) are dropped and tallied; when false they are a data error.
    bool drop_dangling = true;
};

struct ValidationReport {
    std::size_t paper_count = 0;
    std::size_t edge_count = 0;
    std::size_t input_paper_count = 0;
    std::size_t input_edge_count = 0;
    std::map<std::string, std::size_t> dropped_papers_by_reason;
    std::map<std::string, std::size_t> dropped_edges_by_reason;
    /// Edges with citing year < cited year - 1. They stay in the corpus but
    /// are surfaced here and excluded from the citation matrix.
    std::size_t pre_publication_edge_count = 0;
    std::map<int, std::size_t> year_histogram;

    std::size_t dropped_papers_total() const;
    std::size_t dropped_edges_total() const;
};

/// Immutable bibliographic graph. Construction canonicalizes the order of
/// papers (by id) and edges (by citing then cited id), so corpora built from
/// permuted inputs compare equal. Safe for concurrent reads.
class Corpus {
public:
    Corpus() = default;

    std::size_t paper_count() const { return papers_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return papers_.empty(); }

    std::span<const PaperRecord> papers() const { return papers_; }
    std::span<const CitationEdge> edges() const { return edges_; }
    const PaperRecord& paper(std::uint32_t index) const { return papers_[index]; }

    std::optional<std::uint32_t> find(std::string_view id) const;

    /// Inclusive publication-year range; meaningless when empty().
    int year_min() const { return year_min_; }
    int year_max() const { return year_max_; }

    std::span<const std::uint32_t> papers_in_year(int year) const;

    /// Recomputes counts and invariant diagnostics from the retained graph.
    /// Idempotent; agrees with the load-time report on every shared field.
    ValidationReport validate() const;

    bool operator==(const Corpus& other) const {
        return papers_ == other.papers_ && edges_ == other.edges_;
    }

    /// Canonicalizing constructor used by the loader and the generator.
    /// `edges` index into `papers` as given; both are reordered internally.
    static Corpus from_parts(std::vector<PaperRecord> papers,
                             std::vector<CitationEdge> edges);

private:
    std::vector<PaperRecord> papers_;      // sorted by id
    std::vector<CitationEdge> edges_;      // sorted by (citing, cited) index
    std::vector<std::uint32_t> year_index_;  // paper indices grouped by year
    std::vector<std::uint32_t> year_offsets_;
    int year_min_ = 0;
    int year_max_ = -1;
};

struct LoadResult {
    Corpus corpus;
    ValidationReport report;
};

/// Parses the tab-separated papers/citations streams, applies the filter,
/// and builds the corpus. Drop tallies land in the report; malformed lines,
/// conflicting duplicate ids and an empty doc-type filter are errors.
LoadResult load_corpus(std::istream& papers_source, std::istream& citations_source,
                       const FilterConfig& filter = {});

LoadResult load_corpus_files(const std::string& papers_path,
                             const std::string& citations_path,
                             const FilterConfig& filter = {});

ValidationReport validate(const Corpus& corpus);

/// Writes the corpus back out in the same formats load_corpus ingests.
/// generate -> write -> load reproduces the corpus exactly.
void write_corpus_files(const Corpus& corpus, const std::string& papers_path,
                        const std::string& citations_path);

}  // namespace citenet
