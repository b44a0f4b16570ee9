#include "osd/matrix.hpp"

#include <stdexcept>

namespace osd {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& idx) const {
  IntMatrix s(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) s(r, c) = (*this)(idx[r], idx[c]);
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

std::vector<Integer> apply(const IntMatrix& m, const std::vector<Integer>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Integer> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace osd
