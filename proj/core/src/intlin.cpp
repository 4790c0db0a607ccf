#include "fbc/intlin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "fbc/error.hpp"

namespace fbc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw NonSquare("ragged matrix literal");
    for (long long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw NonSquare("dimension mismatch in matrix product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

namespace {

template <typename Op>
IntMatrix elementwise(const IntMatrix& a, const IntMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw NonSquare("dimension mismatch in elementwise matrix operation");
  }
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = op(a(i, j), b(i, j));
  }
  return c;
}

}  // namespace

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  return elementwise(a, b, [](const BigInt& x, const BigInt& y) { return BigInt(x - y); });
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  return elementwise(a, b, [](const BigInt& x, const BigInt& y) { return BigInt(x + y); });
}

namespace {

void swap_rows(IntMatrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

void swap_cols(IntMatrix& m, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, c1), m(i, c2));
}

// row r -= q * row s
void row_axpy(IntMatrix& m, std::size_t r, std::size_t s, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= q * m(s, j);
}

void col_axpy(IntMatrix& m, std::size_t c, std::size_t s, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) -= q * m(i, s);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t k_max = std::min(m.rows(), m.cols());
  SmithForm out;
  out.diagonal.reserve(k_max);

  for (std::size_t k = 0; k < k_max; ++k) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pr = k, pc = k;
      bool found = false;
      BigInt best;
      for (std::size_t i = k; i < m.rows(); ++i) {
        for (std::size_t j = k; j < m.cols(); ++j) {
          if (m(i, j) == 0) continue;
          BigInt a = abs(m(i, j));
          if (!found || a < best) {
            best = std::move(a);
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      if (!found) break;
      swap_rows(m, k, pr);
      swap_cols(m, k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < m.rows(); ++i) {
        if (m(i, k) == 0) continue;
        row_axpy(m, i, k, BigInt(m(i, k) / m(k, k)));
        if (m(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        if (m(k, j) == 0) continue;
        col_axpy(m, j, k, BigInt(m(k, j) / m(k, k)));
        if (m(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = k + 1; i < m.rows() && divides; ++i) {
        for (std::size_t j = k + 1; j < m.cols(); ++j) {
          if (m(i, j) % m(k, k) != 0) {
            for (std::size_t jj = 0; jj < m.cols(); ++jj) m(k, jj) += m(i, jj);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.diagonal.push_back(abs(m(k, k)));
  }
  return out;
}

BigInt determinant(const IntMatrix& input) {
  if (!input.square()) {
    throw NonSquare("determinant of a " + std::to_string(input.rows()) + "x" +
                    std::to_string(input.cols()) + " matrix");
  }
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t matrix_rank(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  return static_cast<std::size_t>(
      std::count_if(s.diagonal.begin(), s.diagonal.end(), [](const BigInt& d) { return d != 0; }));
}

EigenEstimate dominant_eigenvalue(const IntMatrix& m, PowerIterationOptions options) {
  if (!m.square()) throw NonSquare("dominant_eigenvalue needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0) throw NegativeEntry("dominant_eigenvalue needs a nonnegative matrix");
      a[i * n + j] = m(i, j).convert_to<double>() + (i == j ? 1.0 : 0.0);
    }
  }
  EigenEstimate est;
  if (n == 0) return est;

  std::vector<double> x(n, 1.0), y(n);
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int it = 1; it <= options.max_iterations; ++it) {
    double xy = 0.0, xx = 0.0, ymax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a[i * n + j] * x[j];
      y[i] = s;
      xy += x[i] * s;
      xx += x[i] * x[i];
      ymax = std::max(ymax, std::abs(s));
    }
    const double rayleigh = xy / xx;
    est.value = rayleigh - 1.0;
    est.iterations = it;
    if (std::abs(rayleigh - previous) <= options.tolerance * std::max(1.0, std::abs(rayleigh))) {
      est.converged = true;
      break;
    }
    previous = rayleigh;
    if (ymax == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ymax;
  }
  return est;
}

}  // namespace fbc
