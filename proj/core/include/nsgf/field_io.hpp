#pragma once

// Field persistence.
//
// Binary format "NSGF": little-endian header
//   magic   4 bytes  "NSGF"
//   version u32      currently 1
//   dim     u32
//   extents dim x u32
//   h       f64
//   origin  dim x f64
// followed by the samples as f64, row-major (last axis fastest).
//
// CSV export writes one line per sample: index coordinates, then the
// value, with enough digits to round-trip a double.

#include <stdexcept>
#include <string>

#include "nsgf/grid.hpp"

namespace nsgf::io {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

void write_binary(const std::string& path, const grid::ScalarField& field);
grid::ScalarField read_binary(const std::string& path);

void write_csv(const std::string& path, const grid::ScalarField& field);

}  // namespace nsgf::io
