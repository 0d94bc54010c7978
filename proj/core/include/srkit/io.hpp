#pragma once

#include <iosfwd>
#include <string>

#include "srkit/matrix.hpp"

namespace srkit::io {

/// Raised on malformed input or filesystem failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Reads Matrix Market (array or coordinate, real general) or CSV, picking
/// the format by content. Entries parse with full double precision.
Matrix read_matrix(std::istream& in, const std::string& name = "<stream>");
Matrix read_matrix_file(const std::string& path);

/// Writers emit 17 significant digits, so write-then-read round-trips
/// bit-exactly.
void write_matrix_market(std::ostream& out, const Matrix& m);
void write_csv(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);  // by extension (.csv or MM)

/// FNV-1a digest of the dimensions and the canonical decimal serialization.
std::string digest(const Matrix& m);

}  // namespace srkit::io
