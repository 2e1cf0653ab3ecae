#include "bcmm/io.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bcmm/errors.hpp"

namespace bcmm {

namespace {

constexpr char kMagic[4] = {'B', 'C', 'M', 'M'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::uint8_t kFlagPreprocessed = 0x01;

std::size_t bytes_per_row(std::size_t dimension) { return (dimension + 7) / 8; }

void pack_row(const BinaryVector& v, std::string& out) {
    const std::size_t nbytes = bytes_per_row(v.dimension());
    for (std::size_t b = 0; b < nbytes; ++b) {
        std::uint8_t byte = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            const std::size_t index = b * 8 + j;
            if (index < v.dimension() && to_bool(v.test(index))) {
                byte |= static_cast<std::uint8_t>(1u << j);
            }
        }
        out.push_back(static_cast<char>(byte));
    }
}

BinaryVector unpack_row(const std::string& data, std::size_t offset, std::size_t dimension,
                        const char* what) {
    const std::size_t nbytes = bytes_per_row(dimension);
    BinaryVector v(dimension);
    for (std::size_t b = 0; b < nbytes; ++b) {
        const auto byte = static_cast<std::uint8_t>(data[offset + b]);
        for (std::size_t j = 0; j < 8; ++j) {
            const std::size_t index = b * 8 + j;
            if ((byte >> j) & 1u) {
                if (index >= dimension) {
                    throw FormatError(std::string(what) +
                                      " row has nonzero padding bits past the dimension");
                }
                v.set(index, Bit::one);
            }
        }
    }
    return v;
}

void append_u32_le(std::uint32_t value, std::string& out) {
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<char>((value >> (8 * i)) & 0xFFu));
    }
}

std::uint32_t read_u32_le(const std::string& data, std::size_t offset) {
    std::uint32_t value = 0;
    for (int i = 0; i < 4; ++i) {
        value |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(data[offset + i]))
                 << (8 * i);
    }
    return value;
}

std::uint32_t to_u32(std::size_t value, const char* what) {
    if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw FormatError(std::string(what) + " does not fit the 32-bit format field");
    }
    return static_cast<std::uint32_t>(value);
}

}  // namespace

PatternSet read_pattern_set(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("missing header line", 1);
    }
    if (line.find_first_not_of("0123456789 ") != std::string::npos) {
        throw ParseError("header must be two decimal numbers \"p q\"", 1);
    }
    std::istringstream header(line);
    unsigned long long p = 0;
    unsigned long long q = 0;
    if (!(header >> p >> q) || !(header >> std::ws).eof()) {
        throw ParseError("header must be two decimal numbers \"p q\"", 1);
    }
    if (p == 0 || q == 0) {
        throw ParseError("dimension and pattern count must both be at least 1", 1);
    }

    std::vector<BinaryVector> patterns;
    patterns.reserve(q);
    for (unsigned long long k = 0; k < q; ++k) {
        const std::size_t line_number = static_cast<std::size_t>(k) + 2;
        if (!std::getline(in, line)) {
            throw ParseError("expected a pattern line", line_number);
        }
        if (line.size() != p) {
            throw ParseError("pattern line has " + std::to_string(line.size()) +
                                 " characters, expected " + std::to_string(p),
                             line_number);
        }
        BinaryVector v(p);
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '1') {
                v.set(i, Bit::one);
            } else if (line[i] != '0') {
                throw ParseError(std::string("invalid character '") + line[i] +
                                     "' in pattern line",
                                 line_number);
            }
        }
        patterns.push_back(std::move(v));
    }
    if (std::getline(in, line)) {
        throw ParseError("unexpected content after the last pattern", q + 2);
    }
    return PatternSet(p, std::move(patterns));
}

PatternSet read_pattern_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    return read_pattern_set(in);
}

void write_pattern_set(const PatternSet& set, std::ostream& out) {
    out << set.dimension() << ' ' << set.size() << '\n';
    for (std::size_t k = 0; k < set.size(); ++k) {
        out << set[k].to_bit_string() << '\n';
    }
    if (!out) {
        throw IoError("pattern set write failed");
    }
}

void write_pattern_set(const PatternSet& set, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    write_pattern_set(set, out);
}

TrainedMemory read_memory(std::istream& in) {
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (data.size() < 14) {
        throw FormatError("memory file is too short for the header");
    }
    if (!std::equal(kMagic, kMagic + 4, data.begin())) {
        throw FormatError("bad magic bytes; not a memory file");
    }
    if (static_cast<std::uint8_t>(data[4]) != kVersion) {
        throw FormatError("unsupported format version");
    }
    const auto flags = static_cast<std::uint8_t>(data[5]);
    if ((flags & ~kFlagPreprocessed) != 0) {
        throw FormatError("unknown flag bits set");
    }
    const bool preprocessed = (flags & kFlagPreprocessed) != 0;
    const std::uint32_t p = read_u32_le(data, 6);
    const std::uint32_t q = read_u32_le(data, 10);
    if (p == 0 || q == 0) {
        throw FormatError("dimension and association count must both be at least 1");
    }

    const std::size_t row_bytes = bytes_per_row(p);
    const std::size_t extra_rows = preprocessed ? 2 * static_cast<std::size_t>(q) : 0;
    const std::size_t expected = 14 + row_bytes * (static_cast<std::size_t>(p) + extra_rows);
    if (data.size() != expected) {
        throw FormatError("file length " + std::to_string(data.size()) +
                          " does not match the header (expected " + std::to_string(expected) +
                          " bytes)");
    }

    std::size_t offset = 14;
    BooleanMatrix matrix(p);
    for (std::uint32_t i = 0; i < p; ++i) {
        matrix.or_row(i, unpack_row(data, offset, p, "matrix"));
        offset += row_bytes;
    }

    TrainedMemory mem;
    mem.matrix = std::move(matrix);
    mem.dimension = p;
    mem.pattern_count = q;
    mem.preprocessed = preprocessed;

    if (preprocessed) {
        std::vector<BinaryVector> keys;
        keys.reserve(q);
        for (std::uint32_t k = 0; k < q; ++k) {
            keys.push_back(unpack_row(data, offset, p, "stored-key"));
            offset += row_bytes;
        }
        std::vector<BinaryVector> basis_vectors;
        basis_vectors.reserve(q);
        std::vector<std::size_t> source_index(q);
        std::vector<bool> zero_flags(q, false);
        std::size_t nonzero_count = 0;
        for (std::uint32_t k = 0; k < q; ++k) {
            BinaryVector c = unpack_row(data, offset, p, "basis");
            offset += row_bytes;
            source_index[k] = k;
            if (c.is_zero()) {
                zero_flags[k] = true;
            } else {
                ++nonzero_count;
            }
            basis_vectors.push_back(std::move(c));
        }
        mem.stored_keys = PatternSet(p, std::move(keys));
        mem.basis = OrthonormalBasis{PatternSet(p, std::move(basis_vectors)),
                                     std::move(source_index), std::move(zero_flags),
                                     nonzero_count};
        mem.all_keys_zero = (nonzero_count == 0);
    }
    return mem;
}

TrainedMemory read_memory(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    return read_memory(in);
}

void write_memory(const TrainedMemory& mem, std::ostream& out) {
    std::string data;
    data.append(kMagic, 4);
    data.push_back(static_cast<char>(kVersion));
    data.push_back(static_cast<char>(mem.preprocessed ? kFlagPreprocessed : 0));
    append_u32_le(to_u32(mem.dimension, "dimension"), data);
    append_u32_le(to_u32(mem.pattern_count, "association count"), data);

    for (std::size_t i = 0; i < mem.dimension; ++i) {
        pack_row(mem.matrix.row(i), data);
    }
    if (mem.preprocessed) {
        if (!mem.stored_keys || !mem.basis) {
            throw StateError("preprocessed memory is missing stored keys or basis");
        }
        for (std::size_t k = 0; k < mem.stored_keys->size(); ++k) {
            pack_row((*mem.stored_keys)[k], data);
        }
        for (std::size_t k = 0; k < mem.basis->basis.size(); ++k) {
            pack_row(mem.basis->basis[k], data);
        }
    }

    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw IoError("memory write failed");
    }
}

void write_memory(const TrainedMemory& mem, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    write_memory(mem, out);
}

}  // namespace bcmm
