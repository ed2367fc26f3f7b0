#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "corpus.hpp"

namespace cend {

// Symmetric co-occurrence counts, accumulated across slices. A pair of
// in-vocab tokens at distance <= window_size inside one document adds 1 to
// both directed cells; windows never cross document boundaries.
// Out-of-vocab tokens keep their positions but contribute no pairs.
class CooccurrenceCounts {
public:
    explicit CooccurrenceCounts(int vocab_size, int window_size = 5);

    void accumulate(std::span<const Document> docs, const VocabMap& vocab);

    double count(int x, int y) const;
    double marginal(int x) const { return marginals_[static_cast<std::size_t>(x)]; }
    double total_mass() const { return total_mass_; }
    int vocab_size() const { return static_cast<int>(rows_.size()); }
    int window_size() const { return window_size_; }

    const std::unordered_map<std::int32_t, double>& row(int x) const {
        return rows_[static_cast<std::size_t>(x)];
    }

    std::size_t nonzero_count() const;

private:
    void add_pair(int x, int y);

    int window_size_;
    std::vector<std::unordered_map<std::int32_t, double>> rows_;
    std::vector<double> marginals_;
    double total_mass_ = 0.0;
};

} // namespace cend
