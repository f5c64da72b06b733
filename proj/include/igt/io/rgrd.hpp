#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace igt::io {

/// RGRD binary grid file:
///   magic "RGRD" (4 bytes), version u16 = 1, flags u16 = 0, ndim u16,
///   reserved u16, dims ndim x u64, payload float64 row-major with the last
///   index fastest. All little-endian. Roundtrips are byte-exact.
struct GridData {
  std::vector<std::size_t> dims;
  std::vector<double> data;
};

void write_grid(const std::filesystem::path& path, std::span<const std::size_t> dims,
                std::span<const double> data);
GridData read_grid(const std::filesystem::path& path);

/// FNV-1a 64-bit content hash, hex-encoded; used by the run manifest.
std::uint64_t fnv1a64(std::span<const unsigned char> bytes);
std::string file_hash_hex(const std::filesystem::path& path);

} // namespace igt::io
