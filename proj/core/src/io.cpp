#include "srkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace srkit::io {

namespace {

std::string format_entry(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

double parse_entry(const std::string& token, const std::string& name) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw IoError(name + ": malformed number '" + token + "'");
    return v;
  } catch (const std::invalid_argument&) {
    throw IoError(name + ": malformed number '" + token + "'");
  } catch (const std::out_of_range&) {
    throw IoError(name + ": number out of range '" + token + "'");
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Matrix read_matrix_market(std::istream& in, const std::string& header, const std::string& name) {
  std::istringstream head(lower(header));
  std::string banner, object, format, field, symmetry;
  head >> banner >> object >> format >> field >> symmetry;
  if (object != "matrix" || (format != "array" && format != "coordinate")) {
    throw IoError(name + ": unsupported MatrixMarket header");
  }
  if (field != "real" || (symmetry != "general" && !symmetry.empty() && symmetry != "")) {
    if (field != "real" || symmetry != "general") {
      throw IoError(name + ": only real general matrices are supported");
    }
  }

  std::string line;
  auto next_data_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r\n");
      if (first == std::string::npos) continue;
      if (line[first] == '%') continue;
      return line;
    }
    throw IoError(name + ": unexpected end of file");
  };

  std::istringstream sizes(next_data_line());
  std::size_t rows = 0, cols = 0, entries = 0;
  if (format == "array") {
    if (!(sizes >> rows >> cols)) throw IoError(name + ": bad size line");
  } else {
    if (!(sizes >> rows >> cols >> entries)) throw IoError(name + ": bad size line");
  }
  if (rows == 0 || cols == 0) throw IoError(name + ": empty matrix");

  Matrix m(rows, cols);
  if (format == "array") {
    // Column-major stream of rows*cols values.
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t r = 0; r < rows; ++r) {
        std::istringstream value(next_data_line());
        std::string token;
        if (!(value >> token)) throw IoError(name + ": missing entry");
        m(r, c) = parse_entry(token, name);
      }
    }
  } else {
    for (std::size_t e = 0; e < entries; ++e) {
      std::istringstream triple(next_data_line());
      std::size_t r = 0, c = 0;
      std::string token;
      if (!(triple >> r >> c >> token)) throw IoError(name + ": bad coordinate entry");
      if (r == 0 || c == 0 || r > rows || c > cols) throw IoError(name + ": index out of range");
      m(r - 1, c - 1) = parse_entry(token, name);
    }
  }
  return m;
}

Matrix read_csv(std::istream& in, const std::string& first_line, const std::string& name) {
  std::vector<std::vector<double>> rows;
  std::string line = first_line;
  do {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    std::vector<double> row;
    std::string token;
    std::istringstream cells(line);
    while (std::getline(cells, token, ',')) {
      const auto lo = token.find_first_not_of(" \t\r\n");
      if (lo == std::string::npos) throw IoError(name + ": empty CSV cell");
      const auto hi = token.find_last_not_of(" \t\r\n");
      row.push_back(parse_entry(token.substr(lo, hi - lo + 1), name));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw IoError(name + ": ragged CSV rows");
    }
    rows.push_back(std::move(row));
  } while (std::getline(in, line));

  if (rows.empty() || rows.front().empty()) throw IoError(name + ": empty matrix");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

Matrix read_matrix(std::istream& in, const std::string& name) {
  std::string first;
  if (!std::getline(in, first)) throw IoError(name + ": empty input");
  if (lower(first).rfind("%%matrixmarket", 0) == 0) {
    return read_matrix_market(in, first, name);
  }
  return read_csv(in, first, name);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open for reading");
  return read_matrix(in, path);
}

void write_matrix_market(std::ostream& out, const Matrix& m) {
  out << "%%MatrixMarket matrix array real general\n";
  out << m.rows() << " " << m.cols() << "\n";
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out << format_entry(m(r, c)) << "\n";
}

void write_csv(std::ostream& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ",";
      out << format_entry(m(r, c));
    }
    out << "\n";
  }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError(path + ": cannot open for writing");
  if (path.size() >= 4 && lower(path.substr(path.size() - 4)) == ".csv") {
    write_csv(out, m);
  } else {
    write_matrix_market(out, m);
  }
  if (!out) throw IoError(path + ": write failed");
}

std::string digest(const Matrix& m) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  const auto mix = [&hash](const std::string& s) {
    for (unsigned char ch : s) {
      hash ^= ch;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ";");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mix(format_entry(m(r, c)));
      mix(",");
    }
  }
  char buffer[24];
  std::snprintf(buffer, sizeof buffer, "%016" PRIx64, hash);
  return buffer;
}

}  // namespace srkit::io
