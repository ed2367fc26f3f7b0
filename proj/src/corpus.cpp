#include "corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>

#include <json.hpp>

#include "errors.hpp"
#include "util.hpp"

namespace cend {

namespace {

// Minimal UTF-8 decoding. Invalid sequences degrade to their lead byte so
// that arbitrary input never throws.
struct Codepoint {
    char32_t value;
    int length;
};

Codepoint decode_utf8(std::string_view s, std::size_t pos) {
    unsigned char b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](std::size_t i) {
        return i < s.size() && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(pos + 1)) {
        char32_t v = (b0 & 0x1Fu) << 6 | (static_cast<unsigned char>(s[pos + 1]) & 0x3Fu);
        return {v, 2};
    }
    if ((b0 & 0xF0) == 0xE0 && cont(pos + 1) && cont(pos + 2)) {
        char32_t v = (b0 & 0x0Fu) << 12 | (static_cast<unsigned char>(s[pos + 1]) & 0x3Fu) << 6 |
                     (static_cast<unsigned char>(s[pos + 2]) & 0x3Fu);
        return {v, 3};
    }
    if ((b0 & 0xF8) == 0xF0 && cont(pos + 1) && cont(pos + 2) && cont(pos + 3)) {
        char32_t v = (b0 & 0x07u) << 18 | (static_cast<unsigned char>(s[pos + 1]) & 0x3Fu) << 12 |
                     (static_cast<unsigned char>(s[pos + 2]) & 0x3Fu) << 6 |
                     (static_cast<unsigned char>(s[pos + 3]) & 0x3Fu);
        return {v, 4};
    }
    return {b0, 1};
}

bool is_whitespace(char32_t c) {
    switch (c) {
        case U'\t': case U'\n': case U'\v': case U'\f': case U'\r': case U' ':
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return c >= 0x2000 && c <= 0x200A;
    }
}

bool is_punct(char32_t c) {
    if (c < 0x80) {
        return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
               (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
    }
    if (c == 0xA1 || c == 0xAB || c == 0xB7 || c == 0xBB || c == 0xBF) return true;
    if (c >= 0x2010 && c <= 0x206F) return true;  // general punctuation
    if (c >= 0x3001 && c <= 0x303F) return true;  // CJK symbols
    if (c >= 0xFF01 && c <= 0xFF0F) return true;  // fullwidth forms
    if (c >= 0xFF1A && c <= 0xFF20) return true;
    if (c >= 0xFF3B && c <= 0xFF40) return true;
    if (c >= 0xFF5B && c <= 0xFF65) return true;
    return false;
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

void append_codepoint(std::string& out, std::string_view src, std::size_t pos, int len) {
    for (int i = 0; i < len; ++i) {
        char c = src[pos + i];
        if (len == 1 && c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        out.push_back(c);
    }
}

// Strip leading/trailing punctuation codepoints, classify, lowercase ASCII.
// Empty string result means the token is dropped.
std::string clean_token(std::string_view tok) {
    std::vector<Codepoint> cps;
    std::vector<std::size_t> offsets;
    for (std::size_t i = 0; i < tok.size();) {
        Codepoint cp = decode_utf8(tok, i);
        cps.push_back(cp);
        offsets.push_back(i);
        i += cp.length;
    }
    std::size_t lo = 0, hi = cps.size();
    while (lo < hi && is_punct(cps[lo].value)) ++lo;
    while (hi > lo && is_punct(cps[hi - 1].value)) --hi;
    if (lo >= hi) return {};
    bool all_digits = true;
    for (std::size_t i = lo; i < hi; ++i) {
        if (!is_digit(cps[i].value)) { all_digits = false; break; }
    }
    if (all_digits) return {};
    std::string out;
    for (std::size_t i = lo; i < hi; ++i) append_codepoint(out, tok, offsets[i], cps[i].length);
    return out;
}

} // namespace

VocabMap::VocabMap(std::vector<std::string> words) : words_(std::move(words)) {
    index_.reserve(words_.size());
    for (int i = 0; i < static_cast<int>(words_.size()); ++i) index_.emplace(words_[i], i);
    if (index_.size() != words_.size())
        throw InvalidArgument("vocabulary contains duplicate words");
}

int VocabMap::index_of(std::string_view word) const {
    auto it = index_.find(word);
    return it == index_.end() ? -1 : it->second;
}

const std::string& VocabMap::word(int index) const {
    if (index < 0 || index >= size()) throw InvalidArgument("vocab index out of range");
    return words_[static_cast<std::size_t>(index)];
}

std::size_t TimeSlicedCorpus::num_documents() const {
    std::size_t n = 0;
    for (const auto& s : slices) n += s.size();
    return n;
}

std::size_t TimeSlicedCorpus::slice_token_count(int t) const {
    std::size_t n = 0;
    for (const auto& d : slices.at(static_cast<std::size_t>(t))) n += d.tokens.size();
    return n;
}

std::vector<std::string> normalize(std::string_view raw_text, const LemmaTable* lemmas) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const std::size_t n = raw_text.size();
    while (i < n) {
        while (i < n) {
            Codepoint cp = decode_utf8(raw_text, i);
            if (!is_whitespace(cp.value)) break;
            i += cp.length;
        }
        std::size_t start = i;
        while (i < n) {
            Codepoint cp = decode_utf8(raw_text, i);
            if (is_whitespace(cp.value)) break;
            i += cp.length;
        }
        if (i == start) continue;
        std::string tok = clean_token(raw_text.substr(start, i - start));
        if (tok.empty()) continue;
        if (lemmas) {
            auto it = lemmas->find(tok);
            if (it != lemmas->end()) tok = it->second;
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

VocabMap build_vocabulary(const std::vector<Document>& docs, int cap) {
    if (cap < 1) throw InvalidArgument("vocabulary cap must be >= 1");
    std::unordered_map<std::string, std::uint64_t> counts;
    for (const auto& d : docs)
        for (const auto& t : d.tokens) ++counts[t];
    if (counts.empty()) throw EmptyInput("cannot build vocabulary: documents hold no tokens");

    std::vector<std::pair<std::string, std::uint64_t>> items(counts.begin(), counts.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::size_t keep = std::min(items.size(), static_cast<std::size_t>(cap));
    std::vector<std::string> words;
    words.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) words.push_back(std::move(items[i].first));
    return VocabMap(std::move(words));
}

TimeSlicedCorpus slice_by_time(std::vector<Document> docs, int num_slices,
                               VocabMap vocab, std::string granularity) {
    if (num_slices < 1) throw InvalidArgument("slice count must be >= 1");
    TimeSlicedCorpus corpus;
    corpus.slices.resize(static_cast<std::size_t>(num_slices));
    corpus.vocab = std::move(vocab);
    corpus.slice_granularity = std::move(granularity);
    for (auto& d : docs) {
        if (d.time_index < 0 || d.time_index >= num_slices)
            throw InvalidArgument("document '" + d.id + "' has time_index " +
                                  std::to_string(d.time_index) + " outside [0, " +
                                  std::to_string(num_slices) + ")");
        corpus.slices[static_cast<std::size_t>(d.time_index)].push_back(std::move(d));
    }
    return corpus;
}

LemmaTable load_lemma_table(const std::string& path) {
    LemmaTable table;
    auto lines = util::read_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw ParseError("lemma table " + path + " line " + std::to_string(i + 1) +
                             ": expected surface<TAB>lemma");
        table[line.substr(0, tab)] = line.substr(tab + 1);
    }
    return table;
}

std::vector<Document> load_jsonl_documents(const std::string& path, const LemmaTable* lemmas) {
    auto lines = util::read_lines(path);
    std::vector<Document> docs;
    docs.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(lines[i]);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + " line " + std::to_string(i + 1) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("text") ||
            !j.contains("category") || !j.contains("time_index"))
            throw ParseError(path + " line " + std::to_string(i + 1) +
                             ": expected fields id, text, category, time_index");
        Document d;
        try {
            d.id = j.at("id").get<std::string>();
            d.category = j.at("category").get<std::string>();
            d.time_index = j.at("time_index").get<int>();
            d.tokens = normalize(j.at("text").get<std::string>(), lemmas);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + " line " + std::to_string(i + 1) + ": " + e.what());
        }
        docs.push_back(std::move(d));
    }
    return docs;
}

TimeSlicedCorpus load_jsonl_corpus(const std::string& path, const CorpusLoadOptions& options) {
    LemmaTable lemmas;
    const LemmaTable* lemma_ptr = nullptr;
    if (options.lemma_path) {
        lemmas = load_lemma_table(*options.lemma_path);
        lemma_ptr = &lemmas;
    }
    auto docs = load_jsonl_documents(path, lemma_ptr);
    if (docs.empty()) throw EmptyInput("corpus file holds no documents: " + path);
    int num_slices = options.num_slices;
    if (num_slices <= 0) {
        int max_t = 0;
        for (const auto& d : docs) max_t = std::max(max_t, d.time_index);
        num_slices = max_t + 1;
    }
    VocabMap vocab = build_vocabulary(docs, options.vocab_cap);
    return slice_by_time(std::move(docs), num_slices, std::move(vocab), options.granularity);
}

void save_jsonl_corpus(const TimeSlicedCorpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + path);
    for (const auto& slice : corpus.slices) {
        for (const auto& d : slice) {
            std::string text;
            for (std::size_t i = 0; i < d.tokens.size(); ++i) {
                if (i) text.push_back(' ');
                text += d.tokens[i];
            }
            nlohmann::ordered_json j{{"id", d.id},
                                     {"text", text},
                                     {"category", d.category},
                                     {"time_index", d.time_index}};
            out << j.dump() << '\n';
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

void save_vocab_file(const VocabMap& vocab, const std::string& path) {
    std::string content;
    for (const auto& w : vocab.words()) {
        content += w;
        content.push_back('\n');
    }
    util::write_file(path, content);
}

VocabMap load_vocab_file(const std::string& path) {
    auto lines = util::read_lines(path);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return VocabMap(std::move(lines));
}

} // namespace cend
