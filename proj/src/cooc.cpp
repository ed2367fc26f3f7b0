#include "cooc.hpp"

#include "errors.hpp"

namespace cend {

CooccurrenceCounts::CooccurrenceCounts(int vocab_size, int window_size)
    : window_size_(window_size) {
    if (vocab_size < 1) throw InvalidArgument("vocab size must be >= 1");
    if (window_size < 1) throw InvalidArgument("window size must be >= 1");
    rows_.resize(static_cast<std::size_t>(vocab_size));
    marginals_.assign(static_cast<std::size_t>(vocab_size), 0.0);
}

void CooccurrenceCounts::add_pair(int x, int y) {
    rows_[static_cast<std::size_t>(x)][y] += 1.0;
    rows_[static_cast<std::size_t>(y)][x] += 1.0;
    marginals_[static_cast<std::size_t>(x)] += 1.0;
    marginals_[static_cast<std::size_t>(y)] += 1.0;
    total_mass_ += 2.0;
}

void CooccurrenceCounts::accumulate(std::span<const Document> docs, const VocabMap& vocab) {
    std::vector<int> ids;
    for (const auto& doc : docs) {
        ids.clear();
        ids.reserve(doc.tokens.size());
        for (const auto& tok : doc.tokens) ids.push_back(vocab.index_of(tok));
        const std::size_t n = ids.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (ids[i] < 0) continue;
            std::size_t hi = std::min(n, i + static_cast<std::size_t>(window_size_) + 1);
            for (std::size_t j = i + 1; j < hi; ++j) {
                if (ids[j] < 0) continue;
                add_pair(ids[i], ids[j]);
            }
        }
    }
}

double CooccurrenceCounts::count(int x, int y) const {
    const auto& row = rows_[static_cast<std::size_t>(x)];
    auto it = row.find(y);
    return it == row.end() ? 0.0 : it->second;
}

std::size_t CooccurrenceCounts::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

} // namespace cend
