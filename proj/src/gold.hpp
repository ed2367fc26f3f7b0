#pragma once

#include <string>
#include <vector>

#include "corpus.hpp"

namespace cend {

// Multinomial Naive Bayes with add-one smoothing over the fixed vocabulary.
// Out-of-vocabulary tokens are ignored everywhere.
class NBModel {
public:
    static NBModel train(const TimeSlicedCorpus& corpus);

    const std::vector<std::string>& categories() const { return categories_; }
    int category_index(std::string_view name) const;
    const VocabMap& vocab() const { return vocab_; }

    double log_prior(int category) const {
        return log_prior_[static_cast<std::size_t>(category)];
    }
    // log P(word | category)
    double log_likelihood(int category, int word) const {
        return log_likelihood_[static_cast<std::size_t>(category)]
                              [static_cast<std::size_t>(word)];
    }
    // log P(word | union of all other categories), same smoothing
    double log_likelihood_rest(int category, int word) const;

    // Argmax of log prior + sum of token log likelihoods; ties break
    // lexicographically by category name. Empty documents fall back to the
    // prior alone.
    const std::string& classify(const Document& doc) const;

    double training_accuracy(const TimeSlicedCorpus& corpus) const;

private:
    VocabMap vocab_;
    std::vector<std::string> categories_; // sorted by name
    std::vector<double> log_prior_;
    std::vector<std::vector<double>> log_likelihood_;  // category x word
    std::vector<std::vector<double>> token_counts_;    // category x word, raw
    std::vector<double> category_token_totals_;
};

struct ScoredWord {
    std::string word;
    double score;
};

// Words ranked by log P(w | category) - log P(w | rest), descending, ties
// broken lexicographically. Requires at least two categories.
std::vector<ScoredWord> top_discriminative(const NBModel& model,
                                           const std::string& category, int k = 100);

struct GoldStandard {
    // category -> ordered scored words, exactly min(k, V) entries each
    std::vector<std::pair<std::string, std::vector<ScoredWord>>> entries;

    const std::vector<ScoredWord>* find(const std::string& category) const;
    std::string to_json() const;
    static GoldStandard from_json(const std::string& text);
};

GoldStandard build_gold_standard(const NBModel& model, int k = 100);

} // namespace cend
