#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cend {

// One tokenized text unit. Tokens are already normalized: lowercased,
// no empty / pure-punctuation / pure-numeral entries.
struct Document {
    std::string id;
    std::vector<std::string> tokens;
    std::string category;
    int time_index = 0;
};

using LemmaTable = std::unordered_map<std::string, std::string>;

// Dense bidirectional word <-> index mapping, index order is
// (frequency desc, word asc).
class VocabMap {
public:
    VocabMap() = default;
    explicit VocabMap(std::vector<std::string> words);

    int index_of(std::string_view word) const; // -1 when absent
    const std::string& word(int index) const;
    int size() const { return static_cast<int>(words_.size()); }
    const std::vector<std::string>& words() const { return words_; }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    std::vector<std::string> words_;
    std::unordered_map<std::string, int, Hash, std::equal_to<>> index_;
};

struct TimeSlicedCorpus {
    std::vector<std::vector<Document>> slices;
    VocabMap vocab;
    std::string slice_granularity = "slice";

    int num_slices() const { return static_cast<int>(slices.size()); }
    std::size_t num_documents() const;
    // Token count of slice t after normalization, in- and out-of-vocab alike.
    std::size_t slice_token_count(int t) const;
};

// Lowercase, split on Unicode whitespace, strip leading/trailing punctuation,
// drop empty / punctuation-only / all-digit tokens, then map through the
// lemma table (single lookup, surviving tokens kept verbatim when absent).
std::vector<std::string> normalize(std::string_view raw_text,
                                   const LemmaTable* lemmas = nullptr);

// The `cap` most frequent words over all documents, ties broken
// lexicographically. Throws EmptyInput when the documents hold no tokens.
VocabMap build_vocabulary(const std::vector<Document>& docs, int cap);

// Group documents into `num_slices` buckets by time_index, preserving input
// order inside a slice. Out-of-range time_index throws.
TimeSlicedCorpus slice_by_time(std::vector<Document> docs, int num_slices,
                               VocabMap vocab, std::string granularity = "slice");

// Two-column TSV: surface<TAB>lemma.
LemmaTable load_lemma_table(const std::string& path);

// One JSON object per line: {"id": str, "text": str, "category": str,
// "time_index": int}. Text is normalized on load.
std::vector<Document> load_jsonl_documents(const std::string& path,
                                           const LemmaTable* lemmas = nullptr);

struct CorpusLoadOptions {
    int num_slices = 0;        // 0: infer as max(time_index) + 1
    int vocab_cap = 20000;
    std::optional<std::string> lemma_path;
    std::string granularity = "slice";
};

TimeSlicedCorpus load_jsonl_corpus(const std::string& path,
                                   const CorpusLoadOptions& options);

void save_jsonl_corpus(const TimeSlicedCorpus& corpus, const std::string& path);

void save_vocab_file(const VocabMap& vocab, const std::string& path);
VocabMap load_vocab_file(const std::string& path);

} // namespace cend
