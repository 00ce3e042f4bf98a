#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace widthlab {

/// Dense real matrix; the carrier for every operator and truncation in the lab.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Bad user input: malformed files, shape mismatches, violated preconditions.
/// The CLI maps this family to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InputError when any entry of `m` is NaN or infinite.
void require_finite(const Matrix& m, const char* what);

/// Throws InputError unless the columns of `y` are orthonormal to `tol`.
void require_orthonormal_columns(const Matrix& y, double tol, const char* what);

bool all_finite(const Matrix& m);

// ---------------------------------------------------------------------------
// Text format: first line `rows cols`, then `rows` lines of `cols` numbers.
// Writing uses 17 significant digits so that reading back is exact.

Matrix read_matrix(std::istream& in, const std::string& source = "<stream>");
Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

/// Decimal rendering with 17 significant digits ("%.17g"); reads back exactly.
std::string format_real(double v);

}  // namespace widthlab
