#include "bcmm/experiment.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <string>

#include "json.hpp"

#include "bcmm/errors.hpp"
#include "bcmm/memory.hpp"
#include "bcmm/oracle.hpp"

namespace bcmm {

namespace {

using json = nlohmann::ordered_json;

void validate(const ExperimentConfig& config) {
    if (config.dimension == 0) {
        throw DimensionError("dimension must be at least 1");
    }
    if (config.pattern_count == 0) {
        throw DimensionError("pattern count must be at least 1");
    }
    if (config.trials == 0) {
        throw DimensionError("trial count must be at least 1");
    }
    if (config.key_density < 0.0 || config.key_density > 1.0) {
        throw DimensionError("key density must lie in [0, 1]");
    }
    if (config.identity_keys && config.pattern_count > config.dimension) {
        throw DimensionError("identity keys require pattern count <= dimension");
    }
}

PatternSet sample_keys(SplitMix64& rng, const ExperimentConfig& config) {
    if (config.identity_keys) {
        return PatternSet::identity_basis(config.dimension, config.pattern_count);
    }
    return random_pattern_set(rng, config.dimension, config.pattern_count, config.key_density);
}

void require_equal(bool condition, const char* what) {
    if (!condition) {
        throw VerificationError(std::string("reference implementation disagrees: ") + what);
    }
}

MetricSummary summarize(const std::vector<std::size_t>& values) {
    MetricSummary s;
    s.min = values.front();
    s.max = values.front();
    double total = 0.0;
    for (std::size_t v : values) {
        if (v < s.min) s.min = v;
        if (v > s.max) s.max = v;
        total += static_cast<double>(v);
    }
    s.mean = total / static_cast<double>(values.size());
    return s;
}

json config_to_json(const ExperimentConfig& config) {
    return json{{"dimension", config.dimension},
                {"pattern_count", config.pattern_count},
                {"trials", config.trials},
                {"seed", config.seed},
                {"key_density", config.key_density},
                {"identity_keys", config.identity_keys},
                {"oracle_cross_check", config.oracle_cross_check}};
}

json summary_to_json(const MetricSummary& s) {
    return json{{"min", s.min}, {"max", s.max}, {"mean", s.mean}};
}

void write_config_text(const ExperimentConfig& config, std::ostream& out) {
    out << "dimension " << config.dimension << ", patterns " << config.pattern_count
        << ", trials " << config.trials << ", seed " << config.seed << ", key density "
        << config.key_density;
    if (config.identity_keys) out << ", identity keys";
    if (config.oracle_cross_check) out << ", oracle cross-check";
    out << '\n';
}

void write_summary_text(const char* name, const MetricSummary& s, std::ostream& out) {
    out << "  " << name << ": mean " << std::fixed << std::setprecision(4) << s.mean
        << std::defaultfloat << " (min " << s.min << ", max " << s.max << ")\n";
}

}  // namespace

CapacityTrial run_capacity_trial(std::size_t trial_index, std::uint64_t derived_seed,
                                 const PatternSet& keys, const PatternSet& values,
                                 bool oracle_cross_check) {
    TrainedMemory mem = train(keys, values, true);
    const OrthonormalBasis& basis = *mem.basis;

    CapacityTrial t;
    t.trial = trial_index;
    t.derived_seed = derived_seed;
    t.orthonormal_pass = verify_orthonormal(basis.basis).is_orthogonal;
    t.nonzero_basis = capacity_report(basis).storable_count;

    oracle::NaiveMatrix naive_matrix;
    std::vector<oracle::NaiveVector> naive_basis;
    if (oracle_cross_check) {
        naive_basis = oracle::naive_bop(oracle::to_naive(keys));
        require_equal(oracle::pattern_set_from_naive(naive_basis) == basis.basis,
                      "orthonormalized basis");
        naive_matrix = oracle::naive_train(naive_basis, oracle::to_naive(values));
        require_equal(oracle::to_naive(mem.matrix) == naive_matrix, "trained matrix");
    }

    for (std::size_t k = 0; k < keys.size(); ++k) {
        RecallResult r = recall(mem, keys[k], values[k]);
        if (r.exact.value()) ++t.perfect_recalls;
        t.error_bits += hamming_distance(r.response, values[k]);
        if (oracle_cross_check) {
            const oracle::NaiveVector naive_response =
                oracle::naive_recall(naive_matrix, naive_basis[r.matched_index.value()]);
            require_equal(oracle::from_naive(naive_response) == r.response, "recall response");
        }
    }
    return t;
}

CapacityExperimentReport run_capacity_experiment(const ExperimentConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();

    CapacityExperimentReport report;
    report.config = config;
    report.trials.reserve(config.trials);
    std::vector<std::size_t> nonzero, perfect, errors;
    for (std::size_t t = 0; t < config.trials; ++t) {
        const std::uint64_t derived = derive_trial_seed(config.seed, t);
        SplitMix64 rng(derived);
        const PatternSet keys = sample_keys(rng, config);
        const PatternSet values =
            random_pattern_set(rng, config.dimension, config.pattern_count, config.key_density);
        CapacityTrial trial =
            run_capacity_trial(t, derived, keys, values, config.oracle_cross_check);
        if (trial.orthonormal_pass) ++report.orthonormal_pass_count;
        nonzero.push_back(trial.nonzero_basis);
        perfect.push_back(trial.perfect_recalls);
        errors.push_back(trial.error_bits);
        report.trials.push_back(trial);
    }
    report.nonzero_basis = summarize(nonzero);
    report.perfect_recalls = summarize(perfect);
    report.error_bits = summarize(errors);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

CrosstalkTrial run_crosstalk_trial(std::size_t trial_index, std::uint64_t derived_seed,
                                   const PatternSet& keys, const PatternSet& values,
                                   bool oracle_cross_check) {
    TrainedMemory raw = train(keys, values, false);
    TrainedMemory pre = train(keys, values, true);

    CrosstalkTrial t;
    t.trial = trial_index;
    t.derived_seed = derived_seed;

    oracle::NaiveMatrix naive_raw;
    oracle::NaiveMatrix naive_pre;
    std::vector<oracle::NaiveVector> naive_basis;
    if (oracle_cross_check) {
        const auto naive_keys = oracle::to_naive(keys);
        const auto naive_values = oracle::to_naive(values);
        naive_raw = oracle::naive_train(naive_keys, naive_values);
        require_equal(oracle::to_naive(raw.matrix) == naive_raw, "raw trained matrix");
        naive_basis = oracle::naive_bop(naive_keys);
        naive_pre = oracle::naive_train(naive_basis, naive_values);
        require_equal(oracle::to_naive(pre.matrix) == naive_pre, "preprocessed trained matrix");
    }

    for (std::size_t k = 0; k < keys.size(); ++k) {
        RecallResult raw_result = recall(raw, keys[k], values[k]);
        if (raw_result.exact.value()) ++t.raw_perfect_recalls;
        t.raw_error_bits += hamming_distance(raw_result.response, values[k]);

        RecallResult pre_result = recall(pre, keys[k], values[k]);
        if (pre_result.exact.value()) ++t.preprocessed_perfect_recalls;
        t.preprocessed_error_bits += hamming_distance(pre_result.response, values[k]);

        if (oracle_cross_check) {
            require_equal(oracle::from_naive(oracle::naive_recall(
                              naive_raw, oracle::to_naive(keys[k]))) == raw_result.response,
                          "raw recall response");
            require_equal(oracle::from_naive(oracle::naive_recall(
                              naive_pre, naive_basis[pre_result.matched_index.value()])) ==
                              pre_result.response,
                          "preprocessed recall response");
        }
    }
    return t;
}

CrosstalkExperimentReport run_crosstalk_experiment(const ExperimentConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();

    CrosstalkExperimentReport report;
    report.config = config;
    report.trials.reserve(config.trials);
    std::vector<std::size_t> raw_errors, raw_perfect, pre_errors, pre_perfect;
    for (std::size_t t = 0; t < config.trials; ++t) {
        const std::uint64_t derived = derive_trial_seed(config.seed, t);
        SplitMix64 rng(derived);
        const PatternSet keys = sample_keys(rng, config);
        const PatternSet values =
            random_pattern_set(rng, config.dimension, config.pattern_count, config.key_density);
        CrosstalkTrial trial =
            run_crosstalk_trial(t, derived, keys, values, config.oracle_cross_check);
        raw_errors.push_back(trial.raw_error_bits);
        raw_perfect.push_back(trial.raw_perfect_recalls);
        pre_errors.push_back(trial.preprocessed_error_bits);
        pre_perfect.push_back(trial.preprocessed_perfect_recalls);
        report.trials.push_back(trial);
    }
    report.raw_error_bits = summarize(raw_errors);
    report.raw_perfect_recalls = summarize(raw_perfect);
    report.preprocessed_error_bits = summarize(pre_errors);
    report.preprocessed_perfect_recalls = summarize(pre_perfect);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void write_report(const CapacityExperimentReport& report, std::ostream& out,
                  ReportFormat format) {
    switch (format) {
        case ReportFormat::json: {
            json doc{{"experiment", "capacity"}, {"config", config_to_json(report.config)}};
            json trials = json::array();
            for (const CapacityTrial& t : report.trials) {
                trials.push_back(json{{"trial", t.trial},
                                      {"derived_seed", t.derived_seed},
                                      {"orthonormal_pass", t.orthonormal_pass},
                                      {"nonzero_basis", t.nonzero_basis},
                                      {"perfect_recalls", t.perfect_recalls},
                                      {"error_bits", t.error_bits}});
            }
            doc["trials"] = std::move(trials);
            doc["summary"] = json{{"orthonormal_pass_count", report.orthonormal_pass_count},
                                  {"nonzero_basis", summary_to_json(report.nonzero_basis)},
                                  {"perfect_recalls", summary_to_json(report.perfect_recalls)},
                                  {"error_bits", summary_to_json(report.error_bits)},
                                  {"elapsed_seconds", report.elapsed_seconds}};
            out << doc.dump(2) << '\n';
            break;
        }
        case ReportFormat::csv: {
            out << "trial,derived_seed,orthonormal_pass,nonzero_basis,perfect_recalls,"
                   "error_bits\n";
            for (const CapacityTrial& t : report.trials) {
                out << t.trial << ',' << t.derived_seed << ',' << (t.orthonormal_pass ? 1 : 0)
                    << ',' << t.nonzero_basis << ',' << t.perfect_recalls << ',' << t.error_bits
                    << '\n';
            }
            break;
        }
        case ReportFormat::text: {
            out << "capacity experiment\n";
            write_config_text(report.config, out);
            for (const CapacityTrial& t : report.trials) {
                out << "trial " << t.trial << ": orthonormal "
                    << (t.orthonormal_pass ? "pass" : "FAIL") << ", nonzero basis "
                    << t.nonzero_basis << ", perfect recalls " << t.perfect_recalls << "/"
                    << report.config.pattern_count << ", error bits " << t.error_bits << '\n';
            }
            out << "summary (" << report.orthonormal_pass_count << "/" << report.trials.size()
                << " orthonormal):\n";
            write_summary_text("nonzero basis", report.nonzero_basis, out);
            write_summary_text("perfect recalls", report.perfect_recalls, out);
            write_summary_text("error bits", report.error_bits, out);
            out << "elapsed " << report.elapsed_seconds << " s\n";
            break;
        }
    }
}

void write_report(const CrosstalkExperimentReport& report, std::ostream& out,
                  ReportFormat format) {
    switch (format) {
        case ReportFormat::json: {
            json doc{{"experiment", "crosstalk"}, {"config", config_to_json(report.config)}};
            json trials = json::array();
            for (const CrosstalkTrial& t : report.trials) {
                trials.push_back(
                    json{{"trial", t.trial},
                         {"derived_seed", t.derived_seed},
                         {"raw_error_bits", t.raw_error_bits},
                         {"raw_perfect_recalls", t.raw_perfect_recalls},
                         {"preprocessed_error_bits", t.preprocessed_error_bits},
                         {"preprocessed_perfect_recalls", t.preprocessed_perfect_recalls}});
            }
            doc["trials"] = std::move(trials);
            doc["summary"] =
                json{{"raw_error_bits", summary_to_json(report.raw_error_bits)},
                     {"raw_perfect_recalls", summary_to_json(report.raw_perfect_recalls)},
                     {"preprocessed_error_bits", summary_to_json(report.preprocessed_error_bits)},
                     {"preprocessed_perfect_recalls",
                      summary_to_json(report.preprocessed_perfect_recalls)},
                     {"elapsed_seconds", report.elapsed_seconds}};
            out << doc.dump(2) << '\n';
            break;
        }
        case ReportFormat::csv: {
            out << "trial,derived_seed,raw_error_bits,raw_perfect_recalls,"
                   "preprocessed_error_bits,preprocessed_perfect_recalls\n";
            for (const CrosstalkTrial& t : report.trials) {
                out << t.trial << ',' << t.derived_seed << ',' << t.raw_error_bits << ','
                    << t.raw_perfect_recalls << ',' << t.preprocessed_error_bits << ','
                    << t.preprocessed_perfect_recalls << '\n';
            }
            break;
        }
        case ReportFormat::text: {
            out << "crosstalk experiment (raw vs preprocessed)\n";
            write_config_text(report.config, out);
            for (const CrosstalkTrial& t : report.trials) {
                out << "trial " << t.trial << ": raw errors " << t.raw_error_bits << " (perfect "
                    << t.raw_perfect_recalls << "/" << report.config.pattern_count
                    << "), preprocessed errors " << t.preprocessed_error_bits << " (perfect "
                    << t.preprocessed_perfect_recalls << "/" << report.config.pattern_count
                    << ")\n";
            }
            out << "summary:\n";
            write_summary_text("raw error bits", report.raw_error_bits, out);
            write_summary_text("raw perfect recalls", report.raw_perfect_recalls, out);
            write_summary_text("preprocessed error bits", report.preprocessed_error_bits, out);
            write_summary_text("preprocessed perfect recalls",
                               report.preprocessed_perfect_recalls, out);
            out << "elapsed " << report.elapsed_seconds << " s\n";
            break;
        }
    }
}

}  // namespace bcmm
