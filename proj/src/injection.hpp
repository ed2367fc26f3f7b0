#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corpus.hpp"

namespace cend {

// Cumulative volume curve K / (1 + alpha * exp(-rate * t)). Slice i maps to
// t = (i - T/2) * delta with delta = 20 / T, so the curve is centered on the
// middle of the corpus and the grid covers t in [-10, 10).
struct LogisticSchedule {
    double total_volume = 0.0; // K, set to the held-out category size
    double alpha = 1.0;
    double rate = 0.5;
    int num_slices = 0;

    double t_of_slice(int i) const;
    void validate() const;
};

struct InjectionPlan {
    std::vector<long> per_slice_counts;
    double rate = 0.0;   // 0 marks a control plan
    std::uint64_t rng_seed = 0;
    std::string mode = "logistic"; // logistic | control

    long total() const;
    std::string to_json() const;
};

double logistic_volume(double t, const LogisticSchedule& schedule);

// Difference of rounded cumulative sums; total equals llround of the final
// cumulative value and no per-slice drift accumulates.
std::vector<long> cumulative_round_counts(const std::vector<double>& cumulative);

// Quantize the logistic curve onto the slice grid. The cumulative curve is
// scaled so its final grid point equals the full category size: every
// document is placed by the last slice regardless of rate.
InjectionPlan plan_injection(std::size_t category_size, const LogisticSchedule& schedule,
                             std::uint64_t rng_seed);

// Near-uniform schedule with multiplicative noise in
// [1 - noise_level, 1 + noise_level], renormalized to the full size.
InjectionPlan plan_control(std::size_t category_size, int num_slices,
                           std::uint64_t rng_seed, double noise_level);

// Append held-out documents to the base corpus following the plan. Documents
// are shuffled under plan.rng_seed and take the time_index of the slice they
// land in. The vocabulary is left untouched.
TimeSlicedCorpus apply_plan(const TimeSlicedCorpus& base_corpus, const InjectionPlan& plan,
                            const std::vector<Document>& category_docs);

} // namespace cend
