#include "widthlab/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace widthlab {

bool all_finite(const Matrix& m) {
  return m.size() == 0 || m.allFinite();
}

void require_finite(const Matrix& m, const char* what) {
  if (!all_finite(m))
    throw InputError(std::string(what) + ": matrix has non-finite entries");
}

void require_orthonormal_columns(const Matrix& y, double tol, const char* what) {
  if (y.cols() == 0) return;
  const Matrix gram = y.transpose() * y;
  const double dev = (gram - Matrix::Identity(y.cols(), y.cols())).cwiseAbs().maxCoeff();
  if (!(dev <= tol))
    throw InputError(std::string(what) + ": columns are not orthonormal (max |Y^T Y - I| = " +
                     format_real(dev) + ")");
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

Matrix read_matrix(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;

  auto next_nonblank = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_nonblank()) parse_fail(source, lineno + 1, "missing `rows cols` header");
  long long rows = -1, cols = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> rows >> cols) || (hs >> extra))
      parse_fail(source, lineno, "header must be two integers `rows cols`");
  }
  if (rows < 0 || cols < 0) parse_fail(source, lineno, "negative dimension in header");

  Matrix m(rows, cols);
  for (long long i = 0; i < rows; ++i) {
    if (!next_nonblank())
      parse_fail(source, lineno + 1, "expected " + std::to_string(rows) + " rows, got " + std::to_string(i));
    std::istringstream rs(line);
    for (long long j = 0; j < cols; ++j) {
      std::string tok;
      if (!(rs >> tok))
        parse_fail(source, lineno, "row has " + std::to_string(j) + " entries, expected " + std::to_string(cols));
      char* end = nullptr;
      const double v = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str() || *end != '\0')
        parse_fail(source, lineno, "column " + std::to_string(j + 1) + ": not a number `" + tok + "`");
      if (!std::isfinite(v))
        parse_fail(source, lineno, "column " + std::to_string(j + 1) + ": non-finite entry");
      m(i, j) = v;
    }
    std::string extra;
    if (rs >> extra) parse_fail(source, lineno, "row has more than " + std::to_string(cols) + " entries");
  }
  if (next_nonblank()) parse_fail(source, lineno, "trailing data after " + std::to_string(rows) + " rows");
  return m;
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  return read_matrix(in, path.string());
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_real(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot open for writing");
  write_matrix(out, m);
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace widthlab
