#pragma once

#include <filesystem>
#include <iosfwd>

#include "bcmm/memory.hpp"
#include "bcmm/pattern_set.hpp"

namespace bcmm {

/// Pattern-set text format. Header line "p q"; then q lines of exactly p
/// characters from {'0','1'}, one vector per line, character i carrying bit
/// i. Reads are strict: wrong line lengths, stray characters, or trailing
/// content raise ParseError with a 1-based line number (the header is line
/// 1). The final newline is optional on read and always written.
PatternSet read_pattern_set(std::istream& in);
PatternSet read_pattern_set(const std::filesystem::path& path);
void write_pattern_set(const PatternSet& set, std::ostream& out);
void write_pattern_set(const PatternSet& set, const std::filesystem::path& path);

/// Memory binary format. Layout, all fields in order:
///   bytes 0..3   magic "BCMM"
///   byte  4      format version, 0x01
///   byte  5      flags; bit 0 = preprocessed, all other bits must be zero
///   bytes 6..9   dimension p, 32-bit little-endian unsigned
///   bytes 10..13 association count q, 32-bit little-endian unsigned
///   then p matrix rows, each ceil(p/8) bytes, LSB-first within each byte;
///   if the preprocessed flag is set, q stored-key rows then q basis rows in
///   the same row encoding.
/// Reads are strict: bad magic or version, unknown flag bits, nonzero
/// padding bits, or a length that disagrees with the header raise
/// FormatError. Round-trips are byte-exact.
TrainedMemory read_memory(std::istream& in);
TrainedMemory read_memory(const std::filesystem::path& path);
void write_memory(const TrainedMemory& mem, std::ostream& out);
void write_memory(const TrainedMemory& mem, const std::filesystem::path& path);

}  // namespace bcmm
