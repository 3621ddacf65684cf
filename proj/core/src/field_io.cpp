#include "nsgf/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace nsgf::io {
namespace {

constexpr char kMagic[4] = {'N', 'S', 'G', 'F'};
constexpr std::uint32_t kVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "field I/O assumes a little-endian host");

template <class T>
void put(std::ofstream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw IoError("field file truncated");
  return v;
}

}  // namespace

void write_binary(const std::string& path, const grid::ScalarField& field) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open for writing: " + path);
  os.write(kMagic, 4);
  put<std::uint32_t>(os, kVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(field.grid.dim));
  for (int a = 0; a < field.grid.dim; ++a)
    put<std::uint32_t>(os, static_cast<std::uint32_t>(field.grid.extents[a]));
  put<double>(os, field.grid.spacing);
  for (int a = 0; a < field.grid.dim; ++a) put<double>(os, field.grid.origin[a]);
  os.write(reinterpret_cast<const char*>(field.values.data()),
           static_cast<std::streamsize>(field.values.size() * sizeof(double)));
  if (!os) throw IoError("write failed: " + path);
}

grid::ScalarField read_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open for reading: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("not an NSGF field file: " + path);
  const auto version = get<std::uint32_t>(is);
  if (version != kVersion) throw IoError("unsupported NSGF version");
  const auto dim = get<std::uint32_t>(is);
  if (dim < 1 || dim > 3) throw IoError("corrupt NSGF header: dim");
  std::array<int, 3> extents{1, 1, 1};
  for (std::uint32_t a = 0; a < dim; ++a)
    extents[a] = static_cast<int>(get<std::uint32_t>(is));
  const double h = get<double>(is);
  std::array<double, 3> origin{0.0, 0.0, 0.0};
  for (std::uint32_t a = 0; a < dim; ++a) origin[a] = get<double>(is);
  auto g = grid::UniformGrid::make(static_cast<int>(dim), extents, h, origin);
  grid::ScalarField field = grid::ScalarField::zeros(g);
  is.read(reinterpret_cast<char*>(field.values.data()),
          static_cast<std::streamsize>(field.values.size() * sizeof(double)));
  if (!is) throw IoError("field file truncated: " + path);
  return field;
}

void write_csv(const std::string& path, const grid::ScalarField& field) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw IoError("cannot open for writing: " + path);
  const int d = field.grid.dim;
  std::fprintf(fp, "#");
  for (int a = 0; a < d; ++a) std::fprintf(fp, " i%d", a);
  std::fprintf(fp, " value\n");
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    const auto idx = field.grid.multi_index(i);
    for (int a = 0; a < d; ++a) std::fprintf(fp, "%d,", idx[a]);
    std::fprintf(fp, "%.17g\n", field.values[i]);
  }
  if (std::fclose(fp) != 0) throw IoError("write failed: " + path);
}

}  // namespace nsgf::io
