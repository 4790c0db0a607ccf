#pragma once

// Exact integer linear algebra and a Perron-Frobenius eigenvalue estimate.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fbc {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

/// Diagonal d₁ | d₂ | … | d_k, k = min(rows, cols), nonnegative, zeros last.
struct SmithForm {
  std::vector<BigInt> diagonal;

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Bareiss fraction-free elimination. Throws NonSquare.
BigInt determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t matrix_rank(const IntMatrix& m);

struct PowerIterationOptions {
  double tolerance = 1e-8;
  int max_iterations = 100'000;
};

struct EigenEstimate {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Spectral radius of a square nonnegative matrix by power iteration on
/// M + I from the all-ones vector. A capped run returns the last estimate
/// with converged = false. Throws NonSquare, NegativeEntry.
EigenEstimate dominant_eigenvalue(const IntMatrix& m, PowerIterationOptions options = {});

}  // namespace fbc
