#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bcmm/pattern_set.hpp"
#include "bcmm/rng.hpp"

namespace bcmm {

enum class ReportFormat { text, json, csv };

/// Knobs shared by both experiments. The demo shape (7 elements, 6 vectors)
/// is the default; everything else is overridable plumbing.
struct ExperimentConfig {
    std::size_t dimension = 7;
    std::size_t pattern_count = 6;
    std::size_t trials = 100;
    std::uint64_t seed = kDefaultSeed;
    double key_density = 0.5;
    /// Replace the sampled keys of every trial with the identity basis
    /// (requires pattern_count <= dimension). Keys then consume no generator
    /// draws; values are still sampled.
    bool identity_keys = false;
    /// Re-run every trial through the element-wise reference implementation
    /// and fail on any divergence.
    bool oracle_cross_check = false;
};

/// One storage-capacity trial: orthonormalize sampled keys, train on the
/// basis, recall every original key.
struct CapacityTrial {
    std::size_t trial = 0;
    std::uint64_t derived_seed = 0;
    /// verify_orthonormal on the basis found no intersecting pair. Zero
    /// basis vectors are expected and tracked separately, so they do not
    /// fail this flag.
    bool orthonormal_pass = false;
    std::size_t nonzero_basis = 0;
    std::size_t perfect_recalls = 0;
    /// Total response bits differing from the stored values over all
    /// pattern_count recalls of the trial.
    std::size_t error_bits = 0;
};

/// One raw-versus-preprocessed comparison trial over a shared sample.
struct CrosstalkTrial {
    std::size_t trial = 0;
    std::uint64_t derived_seed = 0;
    std::size_t raw_error_bits = 0;
    std::size_t raw_perfect_recalls = 0;
    std::size_t preprocessed_error_bits = 0;
    std::size_t preprocessed_perfect_recalls = 0;
};

struct MetricSummary {
    std::size_t min = 0;
    std::size_t max = 0;
    double mean = 0.0;
};

struct CapacityExperimentReport {
    ExperimentConfig config;
    std::vector<CapacityTrial> trials;
    std::size_t orthonormal_pass_count = 0;
    MetricSummary nonzero_basis;
    MetricSummary perfect_recalls;
    MetricSummary error_bits;
    /// Wall-clock time; excluded from every determinism guarantee.
    double elapsed_seconds = 0.0;
};

struct CrosstalkExperimentReport {
    ExperimentConfig config;
    std::vector<CrosstalkTrial> trials;
    MetricSummary raw_error_bits;
    MetricSummary raw_perfect_recalls;
    MetricSummary preprocessed_error_bits;
    MetricSummary preprocessed_perfect_recalls;
    double elapsed_seconds = 0.0;
};

/// Runs one capacity trial on explicit inputs. Exposed so tests can force
/// key sets (e.g. the identity basis) while keeping the recorded fields
/// identical to sampled runs.
CapacityTrial run_capacity_trial(std::size_t trial_index, std::uint64_t derived_seed,
                                 const PatternSet& keys, const PatternSet& values,
                                 bool oracle_cross_check);

/// Trial t draws its keys then its values from a fresh generator seeded
/// with derive_trial_seed(config.seed, t), so results do not depend on
/// execution order.
CapacityExperimentReport run_capacity_experiment(const ExperimentConfig& config);

CrosstalkTrial run_crosstalk_trial(std::size_t trial_index, std::uint64_t derived_seed,
                                   const PatternSet& keys, const PatternSet& values,
                                   bool oracle_cross_check);

CrosstalkExperimentReport run_crosstalk_experiment(const ExperimentConfig& config);

void write_report(const CapacityExperimentReport& report, std::ostream& out,
                  ReportFormat format);
void write_report(const CrosstalkExperimentReport& report, std::ostream& out,
                  ReportFormat format);

}  // namespace bcmm
