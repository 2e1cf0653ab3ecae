#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bcmm/errors.hpp"
#include "bcmm/experiment.hpp"
#include "bcmm/io.hpp"
#include "bcmm/memory.hpp"
#include "bcmm/oracle.hpp"
#include "bcmm/rng.hpp"

namespace {

/// Command-line misuse detected after CLI11 parsing (bad key strings, bad
/// environment overrides). Mapped to exit code 2 like CLI11's own errors.
struct UsageError : bcmm::Error {
    using bcmm::Error::Error;
};

/// BCMM_SEED, when set and non-empty, wins over --seed.
void apply_seed_override(std::uint64_t& seed) {
    const char* env = std::getenv("BCMM_SEED");
    if (env == nullptr || *env == '\0') return;
    char* end = nullptr;
    errno = 0;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0') {
        throw UsageError("BCMM_SEED must be a decimal unsigned 64-bit integer");
    }
    seed = value;
}

bcmm::BinaryVector parse_key_string(const std::string& text, std::size_t dimension) {
    if (text.size() != dimension) {
        throw UsageError("key has " + std::to_string(text.size()) +
                         " characters but the memory dimension is " + std::to_string(dimension));
    }
    bcmm::BinaryVector v(dimension);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            v.set(i, bcmm::Bit::one);
        } else if (text[i] != '0') {
            throw UsageError("key may contain only '0' and '1' characters");
        }
    }
    return v;
}

void print_orthonormality_report(const bcmm::OrthonormalityReport& report, std::ostream& out) {
    out << "orthogonal: " << (report.is_orthogonal ? "pass" : "FAIL")
        << ", all vectors nonzero: " << (report.zero_vectors.empty() ? "yes" : "no") << '\n';
    if (!report.zero_vectors.empty()) {
        out << "zero vector indices:";
        for (std::size_t i : report.zero_vectors) out << ' ' << i;
        out << '\n';
    }
    if (!report.violating_pairs.empty()) {
        out << "intersecting pairs:";
        for (const auto& [a, b] : report.violating_pairs) out << " (" << a << "," << b << ")";
        out << '\n';
    }
}

struct BopOptions {
    std::string input;
    std::string output;
    bool verify = false;
    bool oracle = false;
    std::size_t dimension = 7;
    std::size_t patterns = 6;
    double density = 0.5;
    std::uint64_t seed = bcmm::kDefaultSeed;
};

void run_bop(const BopOptions& opt) {
    std::uint64_t seed = opt.seed;
    apply_seed_override(seed);

    std::optional<bcmm::PatternSet> input;
    if (!opt.input.empty()) {
        input = bcmm::read_pattern_set(std::filesystem::path(opt.input));
    } else {
        bcmm::SplitMix64 rng(seed);
        input = bcmm::random_pattern_set(rng, opt.dimension, opt.patterns, opt.density);
    }

    const bcmm::OrthonormalBasis basis = bcmm::orthonormalize(*input);
    if (opt.oracle) {
        const auto naive = bcmm::oracle::naive_bop(bcmm::oracle::to_naive(*input));
        if (bcmm::oracle::pattern_set_from_naive(naive) != basis.basis) {
            throw bcmm::VerificationError("reference implementation disagrees on the basis");
        }
    }

    if (!opt.output.empty()) {
        bcmm::write_pattern_set(basis.basis, std::filesystem::path(opt.output));
    } else {
        bcmm::write_pattern_set(basis.basis, std::cout);
    }

    if (opt.verify) {
        const bcmm::OrthonormalityReport report = bcmm::verify_orthonormal(basis.basis);
        print_orthonormality_report(report, std::cerr);
        if (!report.is_orthogonal) {
            throw bcmm::VerificationError("output basis has intersecting vector pairs");
        }
    }
}

struct TrainOptions {
    std::string keys;
    std::string values;
    std::string output;
    bool preprocess = false;
    bool oracle = false;
};

void run_train(const TrainOptions& opt) {
    const bcmm::PatternSet keys = bcmm::read_pattern_set(std::filesystem::path(opt.keys));
    const bcmm::PatternSet values = bcmm::read_pattern_set(std::filesystem::path(opt.values));
    const bcmm::TrainedMemory mem = bcmm::train(keys, values, opt.preprocess);

    if (opt.oracle) {
        std::vector<bcmm::oracle::NaiveVector> effective = bcmm::oracle::to_naive(keys);
        if (opt.preprocess) {
            effective = bcmm::oracle::naive_bop(effective);
            if (bcmm::oracle::pattern_set_from_naive(effective) != mem.basis->basis) {
                throw bcmm::VerificationError("reference implementation disagrees on the basis");
            }
        }
        const auto naive =
            bcmm::oracle::naive_train(effective, bcmm::oracle::to_naive(values));
        if (bcmm::oracle::to_naive(mem.matrix) != naive) {
            throw bcmm::VerificationError(
                "reference implementation disagrees on the trained matrix");
        }
    }

    if (mem.all_keys_zero) {
        std::cerr << "warning: every effective key is zero; nothing can be recalled\n";
    }
    bcmm::write_memory(mem, std::filesystem::path(opt.output));
}

struct RecallOptions {
    std::string memory;
    std::string key;
    std::string key_file;
    std::string mode = "auto";
    bool oracle = false;
};

void recall_one(const bcmm::TrainedMemory& mem, const bcmm::BinaryVector& key,
                bcmm::RecallMode mode, bool oracle) {
    const bcmm::RecallResult result = bcmm::recall(mem, key, mode);
    if (oracle) {
        const bcmm::BinaryVector& probe =
            result.matched_index ? mem.basis->basis[*result.matched_index] : key;
        const auto naive = bcmm::oracle::naive_recall(bcmm::oracle::to_naive(mem.matrix),
                                                      bcmm::oracle::to_naive(probe));
        if (bcmm::oracle::from_naive(naive) != result.response) {
            throw bcmm::VerificationError("reference implementation disagrees on the response");
        }
    }
    if (result.matched_zero_basis) {
        std::cerr << "note: query matched stored key " << *result.matched_index
                  << " whose basis vector is zero; the response is empty\n";
    }
    std::cout << result.response.to_bit_string();
    if (result.matched_index) std::cout << " matched=" << *result.matched_index;
    std::cout << '\n';
}

void run_recall(const RecallOptions& opt) {
    if (opt.key.empty() == opt.key_file.empty()) {
        throw UsageError("exactly one of --key and --key-file is required");
    }
    bcmm::RecallMode mode = bcmm::RecallMode::automatic;
    if (opt.mode == "raw") {
        mode = bcmm::RecallMode::raw;
    } else if (opt.mode == "preprocessed") {
        mode = bcmm::RecallMode::preprocessed;
    } else if (opt.mode != "auto") {
        throw UsageError("mode must be raw, preprocessed, or auto");
    }

    const bcmm::TrainedMemory mem = bcmm::read_memory(std::filesystem::path(opt.memory));
    if (!opt.key.empty()) {
        recall_one(mem, parse_key_string(opt.key, mem.dimension), mode, opt.oracle);
        return;
    }
    const bcmm::PatternSet probes = bcmm::read_pattern_set(std::filesystem::path(opt.key_file));
    for (std::size_t k = 0; k < probes.size(); ++k) {
        recall_one(mem, probes[k], mode, opt.oracle);
    }
}

struct ExperimentOptions {
    bcmm::ExperimentConfig config;
    std::string format = "text";
    std::string output;
};

bcmm::ReportFormat parse_format(const std::string& name) {
    if (name == "text") return bcmm::ReportFormat::text;
    if (name == "json") return bcmm::ReportFormat::json;
    if (name == "csv") return bcmm::ReportFormat::csv;
    throw UsageError("format must be text, json, or csv");
}

template <typename Report>
void emit_report(const Report& report, const ExperimentOptions& opt) {
    const bcmm::ReportFormat format = parse_format(opt.format);
    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) {
            throw bcmm::IoError("cannot open " + opt.output + " for writing");
        }
        bcmm::write_report(report, out, format);
    } else {
        bcmm::write_report(report, std::cout, format);
    }
}

void run_experiment(ExperimentOptions& opt, bool crosstalk) {
    apply_seed_override(opt.config.seed);
    if (crosstalk) {
        emit_report(bcmm::run_crosstalk_experiment(opt.config), opt);
    } else {
        emit_report(bcmm::run_capacity_experiment(opt.config), opt);
    }
}

void add_experiment_options(CLI::App* cmd, ExperimentOptions& opt) {
    cmd->add_option("-p,--dimension", opt.config.dimension, "Vector dimension")
        ->capture_default_str();
    cmd->add_option("-q,--patterns", opt.config.pattern_count, "Associations per trial")
        ->capture_default_str();
    cmd->add_option("-t,--trials", opt.config.trials, "Trial count")->capture_default_str();
    cmd->add_option("--seed", opt.config.seed, "Master seed (BCMM_SEED overrides)")
        ->capture_default_str();
    cmd->add_option("--density", opt.config.key_density, "Probability of a 1 bit")
        ->capture_default_str();
    cmd->add_flag("--identity-keys", opt.config.identity_keys,
                  "Use the identity basis as keys in every trial");
    cmd->add_flag("--oracle", opt.config.oracle_cross_check,
                  "Cross-check every trial against the reference implementation");
    cmd->add_option("--format", opt.format, "Report format: text, json, or csv")
        ->capture_default_str();
    cmd->add_option("-o,--output", opt.output, "Write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bit-packed Boolean associative memory toolkit"};
    app.require_subcommand(1);

    BopOptions bop;
    CLI::App* bop_cmd =
        app.add_subcommand("bop", "Orthonormalize a pattern set (seeded demo set by default)");
    bop_cmd->add_option("-i,--input", bop.input, "Pattern-set file; omit for the demo set");
    bop_cmd->add_option("-o,--output", bop.output, "Write the basis here instead of stdout");
    bop_cmd->add_flag("--verify", bop.verify, "Check and report pairwise orthogonality");
    bop_cmd->add_flag("--oracle", bop.oracle, "Cross-check against the reference implementation");
    bop_cmd->add_option("-p,--dimension", bop.dimension, "Demo set dimension")
        ->capture_default_str();
    bop_cmd->add_option("-q,--patterns", bop.patterns, "Demo set size")->capture_default_str();
    bop_cmd->add_option("--density", bop.density, "Demo set density")->capture_default_str();
    bop_cmd->add_option("--seed", bop.seed, "Demo set seed (BCMM_SEED overrides)")
        ->capture_default_str();

    TrainOptions train;
    CLI::App* train_cmd = app.add_subcommand("train", "Build a memory from key/value files");
    train_cmd->add_option("-k,--keys", train.keys, "Key pattern-set file")->required();
    train_cmd->add_option("-v,--values", train.values, "Value pattern-set file")->required();
    train_cmd->add_option("-o,--output", train.output, "Memory file to write")->required();
    train_cmd->add_flag("--preprocess", train.preprocess,
                        "Orthonormalize the keys before association");
    train_cmd->add_flag("--oracle", train.oracle,
                        "Cross-check against the reference implementation");

    RecallOptions recall;
    CLI::App* recall_cmd = app.add_subcommand("recall", "Probe a memory file");
    recall_cmd->add_option("-m,--memory", recall.memory, "Memory file")->required();
    recall_cmd->add_option("--key", recall.key, "Query as a bit string");
    recall_cmd->add_option("--key-file", recall.key_file,
                           "Pattern-set file; every row is queried");
    recall_cmd->add_option("--mode", recall.mode, "raw, preprocessed, or auto")
        ->capture_default_str();
    recall_cmd->add_flag("--oracle", recall.oracle,
                         "Cross-check against the reference implementation");

    ExperimentOptions capacity;
    CLI::App* capacity_cmd = app.add_subcommand(
        "experiment-capacity", "Seeded storage-capacity trials over random pattern sets");
    add_experiment_options(capacity_cmd, capacity);

    ExperimentOptions crosstalk;
    CLI::App* crosstalk_cmd = app.add_subcommand(
        "experiment-crosstalk", "Seeded raw-versus-preprocessed recall error comparison");
    add_experiment_options(crosstalk_cmd, crosstalk);

    try {
        app.parse(argc, argv);
        if (bop_cmd->parsed()) run_bop(bop);
        if (train_cmd->parsed()) run_train(train);
        if (recall_cmd->parsed()) run_recall(recall);
        if (capacity_cmd->parsed()) run_experiment(capacity, false);
        if (crosstalk_cmd->parsed()) run_experiment(crosstalk, true);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bcmm::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const bcmm::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const bcmm::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const bcmm::VerificationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const bcmm::DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bcmm::EmptySetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bcmm::StateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
