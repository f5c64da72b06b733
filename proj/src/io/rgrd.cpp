#include "igt/io/rgrd.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "igt/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "RGRD writer assumes a little-endian host");

namespace igt::io {

namespace {

constexpr char kMagic[4] = {'R', 'G', 'R', 'D'};
constexpr std::uint16_t kVersion = 1;

template <class T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T take(std::ifstream& in, const char* what) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw io_error(std::string("read_grid: truncated file while reading ") + what);
  return v;
}

} // namespace

void write_grid(const std::filesystem::path& path, std::span<const std::size_t> dims,
                std::span<const double> data) {
  if (dims.empty() || dims.size() > 8)
    throw invalid_argument("write_grid: ndim must be in [1, 8]");
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (total != data.size())
    throw invalid_argument("write_grid: payload length must equal product(dims)");

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("write_grid: cannot open " + path.string());
  out.write(kMagic, 4);
  put<std::uint16_t>(out, kVersion);
  put<std::uint16_t>(out, 0); // flags
  put<std::uint16_t>(out, static_cast<std::uint16_t>(dims.size()));
  put<std::uint16_t>(out, 0); // reserved
  for (std::size_t d : dims) put<std::uint64_t>(out, static_cast<std::uint64_t>(d));
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size() * sizeof(double)));
  if (!out) throw io_error("write_grid: write failed for " + path.string());
}

GridData read_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("read_grid: cannot open " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw io_error("read_grid: bad magic in " + path.string());
  const auto version = take<std::uint16_t>(in, "version");
  if (version != kVersion)
    throw io_error("read_grid: unsupported version " + std::to_string(version));
  take<std::uint16_t>(in, "flags");
  const auto ndim = take<std::uint16_t>(in, "ndim");
  take<std::uint16_t>(in, "reserved");
  if (ndim == 0 || ndim > 8) throw io_error("read_grid: ndim out of range");

  GridData g;
  std::size_t total = 1;
  for (int i = 0; i < ndim; ++i) {
    const auto d = take<std::uint64_t>(in, "dims");
    g.dims.push_back(static_cast<std::size_t>(d));
    total *= static_cast<std::size_t>(d);
  }
  g.data.resize(total);
  in.read(reinterpret_cast<char*>(g.data.data()),
          static_cast<std::streamsize>(total * sizeof(double)));
  if (!in) throw io_error("read_grid: truncated payload in " + path.string());
  char extra;
  if (in.read(&extra, 1)) throw io_error("read_grid: trailing bytes in " + path.string());
  return g;
}

std::uint64_t fnv1a64(std::span<const unsigned char> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string file_hash_hex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("file_hash_hex: cannot open " + path.string());
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[65536];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ull;
    }
    if (got < static_cast<std::streamsize>(sizeof(buf))) break;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return std::string(out);
}

} // namespace igt::io
