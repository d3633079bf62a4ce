#include "citenet/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "citenet/error.hpp"
#include "citenet/io.hpp"

namespace citenet {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Splits on tabs. Returns false when the field count differs from `expect`.
bool split_fields(std::string_view line, std::size_t expect, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return out.size() == expect;
}

bool parse_year(std::string_view s, int& year) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, year);
    return ec == std::errc() && ptr == last && !s.empty();
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

struct TransparentHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

using IdIndex = std::unordered_map<std::string, std::uint32_t, TransparentHash, std::equal_to<>>;

}  // namespace

DocType parse_doc_type(std::string_view s) {
    std::string l = lower(s);
    if (l == "article") return DocType::article;
    if (l == "review") return DocType::review;
    return DocType::other;
}

std::string_view to_string(DocType t) {
    switch (t) {
        case DocType::article: return "article";
        case DocType::review: return "review";
        case DocType::other: return "other";
    }
    return "other";
}

std::size_t ValidationReport::dropped_papers_total() const {
    std::size_t n = 0;
    for (const auto& [reason, count] : dropped_papers_by_reason) n += count;
    return n;
}

std::size_t ValidationReport::dropped_edges_total() const {
    std::size_t n = 0;
    for (const auto& [reason, count] : dropped_edges_by_reason) n += count;
    return n;
}

Corpus Corpus::from_parts(std::vector<PaperRecord> papers, std::vector<CitationEdge> edges) {
    Corpus c;

    // Canonical paper order: by id. Remap edge endpoints accordingly.
    std::vector<std::uint32_t> order(papers.size());
    for (std::uint32_t i = 0; i < papers.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return papers[a].id < papers[b].id;
    });
    std::vector<std::uint32_t> rank(papers.size());
    for (std::uint32_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;

    c.papers_.reserve(papers.size());
    for (std::uint32_t pos = 0; pos < order.size(); ++pos)
        c.papers_.push_back(std::move(papers[order[pos]]));

    c.edges_.reserve(edges.size());
    for (const CitationEdge& e : edges)
        c.edges_.push_back({rank[e.citing], rank[e.cited]});
    std::sort(c.edges_.begin(), c.edges_.end(), [](const CitationEdge& a, const CitationEdge& b) {
        return a.citing != b.citing ? a.citing < b.citing : a.cited < b.cited;
    });

    if (!c.papers_.empty()) {
        c.year_min_ = c.papers_.front().year;
        c.year_max_ = c.papers_.front().year;
        for (const PaperRecord& p : c.papers_) {
            c.year_min_ = std::min(c.year_min_, p.year);
            c.year_max_ = std::max(c.year_max_, p.year);
        }
        // Bucket paper indices by year (counting sort keeps id order stable
        // within a year).
        const std::size_t n_years = static_cast<std::size_t>(c.year_max_ - c.year_min_) + 1;
        c.year_offsets_.assign(n_years + 1, 0);
        for (const PaperRecord& p : c.papers_)
            ++c.year_offsets_[static_cast<std::size_t>(p.year - c.year_min_) + 1];
        for (std::size_t i = 1; i <= n_years; ++i) c.year_offsets_[i] += c.year_offsets_[i - 1];
        c.year_index_.resize(c.papers_.size());
        std::vector<std::uint32_t> cursor(c.year_offsets_.begin(), c.year_offsets_.end() - 1);
        for (std::uint32_t i = 0; i < c.papers_.size(); ++i) {
            std::size_t y = static_cast<std::size_t>(c.papers_[i].year - c.year_min_);
            c.year_index_[cursor[y]++] = i;
        }
    }
    return c;
}

std::optional<std::uint32_t> Corpus::find(std::string_view id) const {
    auto it = std::lower_bound(papers_.begin(), papers_.end(), id,
                               [](const PaperRecord& p, std::string_view key) { return p.id < key; });
    if (it == papers_.end() || it->id != id) return std::nullopt;
    return static_cast<std::uint32_t>(it - papers_.begin());
}

std::span<const std::uint32_t> Corpus::papers_in_year(int year) const {
    if (papers_.empty() || year < year_min_ || year > year_max_) return {};
    std::size_t y = static_cast<std::size_t>(year - year_min_);
    return {year_index_.data() + year_offsets_[y], year_offsets_[y + 1] - year_offsets_[y]};
}

ValidationReport Corpus::validate() const {
    ValidationReport r;
    r.paper_count = papers_.size();
    r.edge_count = edges_.size();
    r.input_paper_count = papers_.size();
    r.input_edge_count = edges_.size();
    for (const PaperRecord& p : papers_) ++r.year_histogram[p.year];
    for (const CitationEdge& e : edges_) {
        int citing_year = papers_[e.citing].year;
        int cited_year = papers_[e.cited].year;
        if (citing_year < cited_year - 1) ++r.pre_publication_edge_count;
    }
    return r;
}

ValidationReport validate(const Corpus& corpus) { return corpus.validate(); }

LoadResult load_corpus(std::istream& papers_source, std::istream& citations_source,
                       const FilterConfig& filter) {
    if (!filter.allow_article && !filter.allow_review && !filter.allow_other)
        throw_domain("empty allowed_doc_types filter");

    ValidationReport report;

    auto allowed = [&](DocType t) {
        switch (t) {
            case DocType::article: return filter.allow_article;
            case DocType::review: return filter.allow_review;
            case DocType::other: return filter.allow_other;
        }
        return false;
    };

    std::vector<PaperRecord> papers;
    // All ids ever seen, mapped to their slot in `papers` (or to the dropped
    // sentinel) so conflicting duplicates can be detected either way.
    constexpr std::uint32_t kDropped = 0xffffffffu;
    std::unordered_map<std::string, std::uint32_t, TransparentHash, std::equal_to<>> seen;
    std::unordered_map<std::string, PaperRecord, TransparentHash, std::equal_to<>> dropped_records;

    std::string line;
    std::vector<std::string_view> fields;
    std::size_t line_no = 0;
    bool header_skipped = false;
    while (std::getline(papers_source, line)) {
        ++line_no;
        strip_cr(line);
        if (!header_skipped) {
            header_skipped = true;  // header line is required and carries no data
            continue;
        }
        if (line.empty()) continue;
        if (!split_fields(line, 4, fields))
            throw_parse("papers line " + std::to_string(line_no) + ": expected 4 tab-separated fields");
        PaperRecord rec;
        rec.id = std::string(fields[0]);
        if (rec.id.empty())
            throw_parse("papers line " + std::to_string(line_no) + ": empty id");
        if (!parse_year(fields[1], rec.year))
            throw_parse("papers line " + std::to_string(line_no) + ": invalid year '" +
                        std::string(fields[1]) + "'");
        rec.venue = std::string(fields[2]);
        rec.doc_type = parse_doc_type(fields[3]);
        ++report.input_paper_count;

        auto it = seen.find(std::string_view(rec.id));
        if (it != seen.end()) {
            const PaperRecord& prior =
                it->second == kDropped ? dropped_records.at(rec.id) : papers[it->second];
            if (prior != rec)
                throw_parse("papers line " + std::to_string(line_no) + ": duplicate id '" + rec.id +
                            "' with conflicting fields");
            ++report.dropped_papers_by_reason["duplicate"];
            continue;
        }

        bool keep = true;
        if (!allowed(rec.doc_type)) {
            ++report.dropped_papers_by_reason["doc_type"];
            keep = false;
        } else if (rec.year < filter.year_min || rec.year > filter.year_max) {
            ++report.dropped_papers_by_reason["year_range"];
            keep = false;
        }
        if (keep) {
            seen.emplace(rec.id, static_cast<std::uint32_t>(papers.size()));
            papers.push_back(std::move(rec));
        } else {
            seen.emplace(rec.id, kDropped);
            dropped_records.emplace(rec.id, std::move(rec));
        }
    }

    std::vector<CitationEdge> edges;
    line_no = 0;
    header_skipped = false;
    while (std::getline(citations_source, line)) {
        ++line_no;
        strip_cr(line);
        if (!line.empty() && line.front() == '#') continue;
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        if (line.empty()) continue;
        if (!split_fields(line, 2, fields))
            throw_parse("citations line " + std::to_string(line_no) + ": expected 2 tab-separated fields");
        ++report.input_edge_count;
        auto citing = seen.find(fields[0]);
        auto cited = seen.find(fields[1]);
        bool citing_ok = citing != seen.end() && citing->second != kDropped;
        bool cited_ok = cited != seen.end() && cited->second != kDropped;
        if (!citing_ok || !cited_ok) {
            if (!filter.drop_dangling)
                throw_parse("citations line " + std::to_string(line_no) + ": dangling endpoint");
            ++report.dropped_edges_by_reason["dangling"];
            continue;
        }
        if (citing->second == cited->second) {
            ++report.dropped_edges_by_reason["self_citation"];
            continue;
        }
        edges.push_back({citing->second, cited->second});
    }

    // Collapse duplicate edges: a reference list cites a paper once.
    std::sort(edges.begin(), edges.end(), [](const CitationEdge& a, const CitationEdge& b) {
        return a.citing != b.citing ? a.citing < b.citing : a.cited < b.cited;
    });
    auto last = std::unique(edges.begin(), edges.end());
    std::size_t dupes = static_cast<std::size_t>(edges.end() - last);
    if (dupes > 0) report.dropped_edges_by_reason["duplicate"] += dupes;
    edges.erase(last, edges.end());

    LoadResult result{Corpus::from_parts(std::move(papers), std::move(edges)), std::move(report)};

    ValidationReport recount = result.corpus.validate();
    result.report.paper_count = recount.paper_count;
    result.report.edge_count = recount.edge_count;
    result.report.pre_publication_edge_count = recount.pre_publication_edge_count;
    result.report.year_histogram = std::move(recount.year_histogram);
    return result;
}

LoadResult load_corpus_files(const std::string& papers_path, const std::string& citations_path,
                             const FilterConfig& filter) {
    std::ifstream papers(papers_path, std::ios::binary);
    if (!papers) throw_io("cannot open papers file " + papers_path);
    std::ifstream citations(citations_path, std::ios::binary);
    if (!citations) throw_io("cannot open citations file " + citations_path);
    return load_corpus(papers, citations, filter);
}

void write_corpus_files(const Corpus& corpus, const std::string& papers_path,
                        const std::string& citations_path) {
    std::string out;
    out.reserve(corpus.paper_count() * 32 + 32);
    out += "id\tyear\tvenue\tdoc_type\n";
    for (const PaperRecord& p : corpus.papers()) {
        out += p.id;
        out += '\t';
        out += std::to_string(p.year);
        out += '\t';
        out += p.venue;
        out += '\t';
        out += to_string(p.doc_type);
        out += '\n';
    }
    write_file_atomic(papers_path, out);

    out.clear();
    out.reserve(corpus.edge_count() * 20 + 32);
    out += "citing_id\tcited_id\n";
    for (const CitationEdge& e : corpus.edges()) {
        out += corpus.paper(e.citing).id;
        out += '\t';
        out += corpus.paper(e.cited).id;
        out += '\n';
    }
    write_file_atomic(citations_path, out);
}

}  // namespace citenet
