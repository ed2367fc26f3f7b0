#include "gold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <json.hpp>

#include "errors.hpp"

namespace cend {

NBModel NBModel::train(const TimeSlicedCorpus& corpus) {
    const int V = corpus.vocab.size();
    if (V == 0) throw EmptyInput("cannot train on an empty vocabulary");

    // Categories sorted by name so tie-breaks and indices are stable.
    std::map<std::string, std::size_t> cat_index;
    std::size_t total_docs = 0;
    for (const auto& slice : corpus.slices) {
        for (const auto& d : slice) {
            cat_index.emplace(d.category, 0);
            ++total_docs;
        }
    }
    if (cat_index.empty()) throw EmptyInput("cannot train on an empty corpus");

    NBModel m;
    m.vocab_ = corpus.vocab;
    for (auto& [name, idx] : cat_index) {
        idx = m.categories_.size();
        m.categories_.push_back(name);
    }
    const std::size_t C = m.categories_.size();
    m.token_counts_.assign(C, std::vector<double>(static_cast<std::size_t>(V), 0.0));
    m.category_token_totals_.assign(C, 0.0);
    std::vector<std::size_t> doc_counts(C, 0);

    for (const auto& slice : corpus.slices) {
        for (const auto& d : slice) {
            std::size_t c = cat_index.at(d.category);
            ++doc_counts[c];
            for (const auto& tok : d.tokens) {
                int w = corpus.vocab.index_of(tok);
                if (w < 0) continue;
                m.token_counts_[c][static_cast<std::size_t>(w)] += 1.0;
                m.category_token_totals_[c] += 1.0;
            }
        }
    }

    m.log_prior_.resize(C);
    m.log_likelihood_.assign(C, std::vector<double>(static_cast<std::size_t>(V), 0.0));
    for (std::size_t c = 0; c < C; ++c) {
        m.log_prior_[c] = std::log(static_cast<double>(doc_counts[c])) -
                          std::log(static_cast<double>(total_docs));
        double denom = std::log(m.category_token_totals_[c] + V);
        for (int w = 0; w < V; ++w)
            m.log_likelihood_[c][static_cast<std::size_t>(w)] =
                std::log(m.token_counts_[c][static_cast<std::size_t>(w)] + 1.0) - denom;
    }
    return m;
}

int NBModel::category_index(std::string_view name) const {
    for (std::size_t i = 0; i < categories_.size(); ++i)
        if (categories_[i] == name) return static_cast<int>(i);
    return -1;
}

double NBModel::log_likelihood_rest(int category, int word) const {
    double count = 0.0, total = 0.0;
    for (std::size_t c = 0; c < categories_.size(); ++c) {
        if (static_cast<int>(c) == category) continue;
        count += token_counts_[c][static_cast<std::size_t>(word)];
        total += category_token_totals_[c];
    }
    return std::log(count + 1.0) - std::log(total + vocab_.size());
}

const std::string& NBModel::classify(const Document& doc) const {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_c = 0;
    for (std::size_t c = 0; c < categories_.size(); ++c) {
        double score = log_prior_[c];
        for (const auto& tok : doc.tokens) {
            int w = vocab_.index_of(tok);
            if (w >= 0) score += log_likelihood_[c][static_cast<std::size_t>(w)];
        }
        if (score > best) { // strict: first (lexicographically least) wins ties
            best = score;
            best_c = c;
        }
    }
    return categories_[best_c];
}

double NBModel::training_accuracy(const TimeSlicedCorpus& corpus) const {
    std::size_t correct = 0, total = 0;
    for (const auto& slice : corpus.slices) {
        for (const auto& d : slice) {
            ++total;
            if (classify(d) == d.category) ++correct;
        }
    }
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

std::vector<ScoredWord> top_discriminative(const NBModel& model,
                                           const std::string& category, int k) {
    if (k < 1) throw InvalidArgument("k must be >= 1");
    if (model.categories().size() < 2)
        throw EmptyInput("discriminative scores need at least two categories");
    int c = model.category_index(category);
    if (c < 0) throw InvalidArgument("unknown category: " + category);

    const VocabMap& vocab = model.vocab();
    const int V = vocab.size();
    std::vector<ScoredWord> scored;
    scored.reserve(static_cast<std::size_t>(V));
    for (int w = 0; w < V; ++w)
        scored.push_back({vocab.word(w),
                          model.log_likelihood(c, w) - model.log_likelihood_rest(c, w)});
    std::sort(scored.begin(), scored.end(), [](const ScoredWord& a, const ScoredWord& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.word < b.word;
    });
    scored.resize(static_cast<std::size_t>(std::min(k, V)));
    return scored;
}

const std::vector<ScoredWord>* GoldStandard::find(const std::string& category) const {
    for (const auto& [name, words] : entries)
        if (name == category) return &words;
    return nullptr;
}

std::string GoldStandard::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [name, words] : entries) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& sw : words)
            arr.push_back(nlohmann::ordered_json{{"word", sw.word}, {"score", sw.score}});
        j[name] = std::move(arr);
    }
    return j.dump(2);
}

GoldStandard GoldStandard::from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("gold standard JSON: ") + e.what());
    }
    GoldStandard gs;
    for (auto& [name, arr] : j.items()) {
        std::vector<ScoredWord> words;
        for (auto& item : arr)
            words.push_back({item.at("word").get<std::string>(), item.at("score").get<double>()});
        gs.entries.emplace_back(name, std::move(words));
    }
    return gs;
}

GoldStandard build_gold_standard(const NBModel& model, int k) {
    GoldStandard gs;
    for (const auto& name : model.categories())
        gs.entries.emplace_back(name, top_discriminative(model, name, k));
    return gs;
}

} // namespace cend
