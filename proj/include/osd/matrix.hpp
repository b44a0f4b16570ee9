#ifndef OSD_MATRIX_HPP
#define OSD_MATRIX_HPP

#include "osd/polynomial.hpp"

#include <vector>

namespace osd {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  /// Principal submatrix on the given index set.
  IntMatrix submatrix(const std::vector<std::size_t>& idx) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Matrix-vector product.
std::vector<Integer> apply(const IntMatrix& m, const std::vector<Integer>& v);

}  // namespace osd

#endif  // OSD_MATRIX_HPP
