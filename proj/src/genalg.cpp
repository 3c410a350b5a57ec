#include "polarga/genalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#include "polarga/code_file.hpp"
#include "polarga/parallel.hpp"
#include "polarga/reliability.hpp"
#include "polarga/simulate.hpp"

namespace polarga {

int population_size(int elite_count) {
    if (elite_count < 2) throw std::invalid_argument("population_size: need T >= 2");
    return (elite_count * elite_count + 3 * elite_count) / 2;
}

namespace {

int ones_count(const BitVec& a) {
    return static_cast<int>(std::count(a.begin(), a.end(), uint8_t{1}));
}

// Uniformly random position holding `value`, excluding `excluded` (pass -1
// to allow all). Caller guarantees at least one such position exists.
int random_position_with_value(const BitVec& a, uint8_t value, int excluded, RandomStream& rng) {
    int count = 0;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (a[i] == value && i != excluded) ++count;
    assert(count > 0);
    int pick = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(count));
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (a[i] == value && i != excluded && pick-- == 0) return i;
    }
    assert(false);
    return -1;
}

void validate_code_params(const GenAlgConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 20) throw std::invalid_argument("GenAlgConfig: n out of range");
    if (cfg.k < 1 || cfg.k >= cfg.block_length())
        throw std::invalid_argument("GenAlgConfig: need 0 < k < N for the evolutionary moves");
}

}  // namespace

Candidate mutate(const Candidate& parent, RandomStream& rng) {
    const int len = static_cast<int>(parent.a.size());
    const int k = ones_count(parent.a);
    if (k == 0 || k == len)
        throw std::invalid_argument("mutate: k = 0 or k = N admits no rate-preserving mutation");
    Candidate child;
    child.a = parent.a;
    const int first = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(len));
    child.a[first] ^= 1;
    // The value now overrepresented is the one the first flip created.
    const uint8_t over = child.a[first];
    const int second = random_position_with_value(child.a, over, first, rng);
    child.a[second] ^= 1;
    return child;
}

Candidate crossover(const Candidate& x, const Candidate& w, RandomStream& rng) {
    if (x.a.size() != w.a.size())
        throw std::invalid_argument("crossover: parents have different lengths");
    const int len = static_cast<int>(x.a.size());
    const int k = ones_count(x.a);
    if (ones_count(w.a) != k)
        throw std::invalid_argument("crossover: parents have different rates");
    Candidate child;
    child.a.assign(x.a.begin(), x.a.begin() + len / 2);
    child.a.insert(child.a.end(), w.a.begin() + len / 2, w.a.end());
    int ones = ones_count(child.a);
    while (ones != k) {
        const uint8_t over = ones > k ? 1 : 0;
        const int pos = random_position_with_value(child.a, over, -1, rng);
        child.a[pos] ^= 1;
        ones += over ? -1 : 1;
    }
    return child;
}

std::vector<Candidate> init_population(const GenAlgConfig& cfg) {
    validate_code_params(cfg);
    const int target = population_size(cfg.elite_count);

    std::vector<Candidate> seeds;
    for (double eps : cfg.init_epsilons) {
        const ReliabilityProfile profile = bhattacharyya_bec(cfg.n, eps);
        seeds.push_back({info_set_from_profile(profile, cfg.k).a, std::nullopt, 0});
        if (cfg.include_hybrid_seeds) {
            const int mw = default_hybrid_min_weight(cfg.n, cfg.k, profile);
            seeds.push_back({rm_polar_hybrid(cfg.n, cfg.k, profile, mw).a, std::nullopt, 0});
        }
    }

    std::vector<Candidate> population;
    std::set<BitVec> unique;
    for (auto& seed : seeds)
        if (unique.insert(seed.a).second) population.push_back(std::move(seed));
    if (static_cast<int>(population.size()) > target) population.resize(target);

    RandomStream rng(seed_hash({cfg.master_seed, 0x1217u}));
    size_t source = 0;
    const size_t seed_count = population.size();
    while (static_cast<int>(population.size()) < target) {
        population.push_back(mutate(population[source % seed_count], rng));
        ++source;
    }
    return population;
}

uint64_t generation_eval_seed(const GenAlgConfig& cfg, int generation) {
    return seed_hash({cfg.master_seed, 0xEA71u, static_cast<uint64_t>(generation)});
}

ErrorStats evaluate_fitness(const Candidate& candidate, const GenAlgConfig& cfg,
                            uint64_t eval_seed) {
    if (cfg.frames_per_eval == 0)
        throw std::invalid_argument("evaluate_fitness: frames_per_eval must be >= 1");
    const PolarCode code = PolarCode::from_a_vector(candidate.a);
    FrameSimulator sim(code, cfg.decoder, cfg.snr_genalg_db);
    ErrorStats stats;
    for (uint64_t frame = 0; frame < cfg.frames_per_eval; ++frame)
        stats.merge(sim.run_frame(seed_hash({eval_seed, frame})));
    return stats;
}

namespace {

uint64_t metric_count(const ErrorStats& stats, FitnessMetric metric) {
    return metric == FitnessMetric::Ber ? stats.bit_errors : stats.block_errors;
}

// Indices of `population` ranked ascending by error count, stable on ties.
std::vector<int> rank_population(const std::vector<Candidate>& population, FitnessMetric metric) {
    std::vector<int> order(population.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return metric_count(*population[lhs].fitness, metric) <
               metric_count(*population[rhs].fitness, metric);
    });
    return order;
}

}  // namespace

std::vector<Candidate> select_next(const std::vector<Candidate>& population,
                                   const GenAlgConfig& cfg, RandomStream& rng, int generation) {
    for (const auto& c : population)
        if (!c.fitness) throw std::logic_error("select_next: unevaluated candidate in population");
    const int elites = cfg.elite_count;
    if (static_cast<int>(population.size()) < elites)
        throw std::logic_error("select_next: population smaller than the elite count");

    const std::vector<int> order = rank_population(population, cfg.fitness_metric);
    std::vector<Candidate> next;
    next.reserve(static_cast<size_t>(population_size(elites)));
    for (int e = 0; e < elites; ++e) next.push_back(population[order[e]]);
    for (int i = 0; i < elites; ++i)
        for (int j = i + 1; j < elites; ++j) {
            Candidate child = crossover(population[order[i]], population[order[j]], rng);
            child.birth_generation = generation;
            next.push_back(std::move(child));
        }
    for (int e = 0; e < elites; ++e) {
        Candidate child = mutate(population[order[e]], rng);
        child.birth_generation = generation;
        next.push_back(std::move(child));
    }
    return next;
}

GenAlgResult genalg_run(const GenAlgConfig& cfg, int threads, std::ostream* warnings) {
    validate_code_params(cfg);
    if (cfg.max_generations < 1)
        throw std::invalid_argument("genalg_run: max_generations must be >= 1");

    std::vector<Candidate> population = init_population(cfg);
    // Fail fast on decoder/code mismatches (e.g. CRC size >= k).
    make_decoder(PolarCode::from_a_vector(population.front().a), cfg.decoder);
    GenAlgResult result;
    bool have_best = false;
    uint64_t best_count = 0;

    for (int generation = 0; generation < cfg.max_generations; ++generation) {
        const uint64_t eval_seed = generation_eval_seed(cfg, generation);
        std::vector<int> todo;
        for (int i = 0; i < static_cast<int>(population.size()); ++i)
            if (!population[i].fitness) todo.push_back(i);
        parallel_for_ranges(0, static_cast<int64_t>(todo.size()), threads,
                            [&](int64_t lo, int64_t hi, int /*slot*/) {
                                for (int64_t t = lo; t < hi; ++t) {
                                    Candidate& c = population[todo[static_cast<size_t>(t)]];
                                    c.fitness = evaluate_fitness(c, cfg, eval_seed);
                                }
                            });

        int zero_error = 0;
        for (const auto& c : population)
            if (metric_count(*c.fitness, cfg.fitness_metric) == 0) ++zero_error;
        if (zero_error > cfg.elite_count) {
            ++result.saturated_generations;
            if (warnings)
                *warnings << "warning: generation " << generation << ": " << zero_error
                          << " candidates with zero errors; ranking is saturated (increase "
                             "frames_per_eval or lower snr_genalg_db)\n";
        }

        const std::vector<int> order = rank_population(population, cfg.fitness_metric);
        const Candidate& gen_best = population[order.front()];
        const uint64_t gen_best_count = metric_count(*gen_best.fitness, cfg.fitness_metric);
        if (!have_best || gen_best_count < best_count) {
            result.best = gen_best;
            best_count = gen_best_count;
            have_best = true;
        }

        std::vector<double> bers(population.size());
        for (size_t i = 0; i < population.size(); ++i) bers[i] = population[i].fitness->ber();
        std::sort(bers.begin(), bers.end());
        GenerationRecord record;
        record.generation = generation;
        record.best_ber = gen_best.fitness->ber();
        record.median_ber = bers[(bers.size() - 1) / 2];
        record.best_digest = code_digest(PolarCode::from_a_vector(gen_best.a));
        result.history.push_back(record);

        if (generation + 1 < cfg.max_generations) {
            RandomStream evolve_rng(
                seed_hash({cfg.master_seed, 0xE01u, static_cast<uint64_t>(generation)}));
            population = select_next(population, cfg, evolve_rng, generation + 1);
        }
    }
    return result;
}

}  // namespace polarga
