#pragma once

#include <optional>
#include <ostream>

#include "polarga/decoder.hpp"
#include "polarga/error_stats.hpp"
#include "polarga/rng.hpp"

namespace polarga {

// One member of a population: an A-vector plus its measured fitness.
// Every candidate ever created satisfies sum(a) = k.
struct Candidate {
    BitVec a;
    std::optional<ErrorStats> fitness;
    int birth_generation = 0;
};

enum class FitnessMetric { Ber, Bler };

struct GenAlgConfig {
    int n = 6;  // block length 2^n
    int k = 32;
    int elite_count = 5;  // T; population size S = (T^2 + 3T) / 2
    DecoderSpec decoder;
    double snr_genalg_db = 2.0;
    uint64_t frames_per_eval = 10'000;
    int max_generations = 100;
    uint64_t master_seed = 1;
    FitnessMetric fitness_metric = FitnessMetric::Ber;
    std::vector<double> init_epsilons = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    bool include_hybrid_seeds = true;

    int block_length() const { return 1 << n; }
};

// S = T + T(T-1)/2 + T = (T^2 + 3T)/2. Throws for T < 2.
int population_size(int elite_count);

// Bhattacharyya seeds for each epsilon (plus hybrid seeds when enabled),
// deduplicated, padded to S with rate-preserving mutations of the seeds.
std::vector<Candidate> init_population(const GenAlgConfig& cfg);

// Flips one random position, then one random position of the opposite value;
// the child differs from the parent in exactly two positions and keeps k ones.
Candidate mutate(const Candidate& parent, RandomStream& rng);

// Single midpoint crossover (first half of x, second half of w), repaired to
// k ones by flipping random positions of the overrepresented value.
Candidate crossover(const Candidate& x, const Candidate& w, RandomStream& rng);

// Monte-Carlo fitness at the design SNR: frames and noise are derived from
// (eval_seed, frame index) only, so every candidate evaluated with the same
// eval_seed sees identical data and noise (common random numbers).
ErrorStats evaluate_fitness(const Candidate& candidate, const GenAlgConfig& cfg,
                            uint64_t eval_seed);

// The per-generation evaluation seed used by run().
uint64_t generation_eval_seed(const GenAlgConfig& cfg, int generation);

// Ranks by the configured metric (ascending error count, stable on ties) and
// produces the next population: T elites carried with their cached fitness,
// one crossover per elite pair, one mutant per elite.
std::vector<Candidate> select_next(const std::vector<Candidate>& population,
                                   const GenAlgConfig& cfg, RandomStream& rng, int generation);

struct GenerationRecord {
    int generation = 0;
    double best_ber = 0.0;
    double median_ber = 0.0;
    uint64_t best_digest = 0;
};

struct GenAlgResult {
    Candidate best;
    std::vector<GenerationRecord> history;
    int saturated_generations = 0;  // generations where > T candidates had zero errors
};

// The full loop: init -> repeat { evaluate unevaluated candidates;
// select_next } for max_generations. Elite fitness is cached, never
// re-measured, which makes the best-fitness history exactly monotone.
// Evaluations of distinct candidates run on `threads` workers; results are
// identical for any thread count. When more than T candidates of a
// generation show zero errors a warning is emitted to `warnings` (the
// ranking is saturated; raise frames_per_eval or lower snr_genalg_db).
GenAlgResult genalg_run(const GenAlgConfig& cfg, int threads = 1,
                        std::ostream* warnings = nullptr);

}  // namespace polarga
