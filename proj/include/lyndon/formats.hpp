#pragma once

// On-disk formats.
//
// LYAR: "LYAR", version 1, width byte (4 or 8), n as u64 LE, then n LE values.
// LBPS: "LBPS", version 1, n as u64 LE, then ceil((2n+2)/8) bytes of
//       parentheses, first bit in the most significant position, open = 1,
//       zero padding in the last byte.

#include "lyndon/bps.hpp"
#include "lyndon/construct.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace lyndon::formats {

void write_lyar(std::ostream& out, const LyndonArray& lambda);
/// IntegrityError on a malformed stream.
LyndonArray read_lyar(std::istream& in);

/// The sequence must be a complete tree (2n+2 bits).
void write_lbps(std::ostream& out, const AppendOnlyBps& bps);
SuccinctPssTree read_lbps(std::istream& in, BpsConfig config = {});

/// Whole-file helpers; IoError on failure.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> to_bytes(const LyndonArray& lambda);
std::vector<std::uint8_t> to_bytes(const AppendOnlyBps& bps);

} // namespace lyndon::formats
