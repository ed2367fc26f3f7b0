#include "injection.hpp"

#include <cmath>

#include <json.hpp>

#include "errors.hpp"
#include "rng.hpp"

namespace cend {

double LogisticSchedule::t_of_slice(int i) const {
    double delta = 20.0 / num_slices;
    return (i - num_slices / 2.0) * delta;
}

void LogisticSchedule::validate() const {
    if (total_volume <= 0.0) throw InvalidArgument("schedule: total volume must be positive");
    if (alpha <= 0.0) throw InvalidArgument("schedule: alpha must be positive");
    if (rate <= 0.0) throw InvalidArgument("schedule: rate must be positive");
    if (num_slices < 1) throw InvalidArgument("schedule: slice count must be >= 1");
}

long InjectionPlan::total() const {
    long n = 0;
    for (long c : per_slice_counts) n += c;
    return n;
}

std::string InjectionPlan::to_json() const {
    nlohmann::ordered_json j{{"seed", rng_seed},
                             {"mode", mode},
                             {"rate", rate},
                             {"per_slice_counts", per_slice_counts}};
    return j.dump(2);
}

double logistic_volume(double t, const LogisticSchedule& schedule) {
    schedule.validate();
    return schedule.total_volume / (1.0 + schedule.alpha * std::exp(-schedule.rate * t));
}

std::vector<long> cumulative_round_counts(const std::vector<double>& cumulative) {
    std::vector<long> counts(cumulative.size());
    long prev = 0;
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
        long cur = std::llround(cumulative[i]);
        counts[i] = cur - prev;
        if (counts[i] < 0)
            throw InvalidArgument("cumulative volume must be non-decreasing");
        prev = cur;
    }
    return counts;
}

InjectionPlan plan_injection(std::size_t category_size, const LogisticSchedule& schedule,
                             std::uint64_t rng_seed) {
    schedule.validate();
    if (category_size == 0) throw EmptyInput("cannot plan injection of an empty category");
    const int T = schedule.num_slices;
    double final_volume = logistic_volume(schedule.t_of_slice(T - 1), schedule);
    double scale = static_cast<double>(category_size) / final_volume;
    std::vector<double> cumulative(static_cast<std::size_t>(T));
    for (int i = 0; i < T; ++i)
        cumulative[static_cast<std::size_t>(i)] =
            scale * logistic_volume(schedule.t_of_slice(i), schedule);
    cumulative.back() = static_cast<double>(category_size); // pin against roundoff

    InjectionPlan plan;
    plan.per_slice_counts = cumulative_round_counts(cumulative);
    plan.rate = schedule.rate;
    plan.rng_seed = rng_seed;
    plan.mode = "logistic";
    return plan;
}

InjectionPlan plan_control(std::size_t category_size, int num_slices,
                           std::uint64_t rng_seed, double noise_level) {
    if (num_slices < 1) throw InvalidArgument("slice count must be >= 1");
    if (noise_level < 0.0 || noise_level >= 1.0)
        throw InvalidArgument("noise level must lie in [0, 1)");
    if (category_size == 0) throw EmptyInput("cannot plan injection of an empty category");

    auto gen = rng::derive_engine(rng_seed, 0x636f6e74726f6cULL);
    std::vector<double> weights(static_cast<std::size_t>(num_slices));
    double sum = 0.0;
    for (auto& w : weights) {
        w = rng::uniform(gen, 1.0 - noise_level, 1.0 + noise_level);
        sum += w;
    }
    std::vector<double> cumulative(weights.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        cumulative[i] = static_cast<double>(category_size) * acc / sum;
    }
    cumulative.back() = static_cast<double>(category_size);

    InjectionPlan plan;
    plan.per_slice_counts = cumulative_round_counts(cumulative);
    plan.rate = 0.0;
    plan.rng_seed = rng_seed;
    plan.mode = "control";
    return plan;
}

TimeSlicedCorpus apply_plan(const TimeSlicedCorpus& base_corpus, const InjectionPlan& plan,
                            const std::vector<Document>& category_docs) {
    if (static_cast<int>(plan.per_slice_counts.size()) != base_corpus.num_slices())
        throw InvalidArgument("plan covers " + std::to_string(plan.per_slice_counts.size()) +
                              " slices but corpus has " +
                              std::to_string(base_corpus.num_slices()));
    if (plan.total() > static_cast<long>(category_docs.size()))
        throw InvalidArgument("plan places " + std::to_string(plan.total()) +
                              " documents but the category holds " +
                              std::to_string(category_docs.size()));

    std::vector<std::size_t> order(category_docs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto gen = rng::derive_engine(plan.rng_seed, 0x73687566666c65ULL);
    rng::shuffle(order, gen);

    TimeSlicedCorpus merged = base_corpus;
    std::size_t next = 0;
    for (int t = 0; t < merged.num_slices(); ++t) {
        long count = plan.per_slice_counts[static_cast<std::size_t>(t)];
        for (long k = 0; k < count; ++k) {
            Document d = category_docs[order[next++]];
            d.time_index = t;
            merged.slices[static_cast<std::size_t>(t)].push_back(std::move(d));
        }
    }
    return merged;
}

} // namespace cend
