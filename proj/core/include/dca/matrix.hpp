#ifndef DCA_MATRIX_HPP
#define DCA_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dca {

/// Small dense matrix over an exact or floating scalar. The algebras here
/// are tiny (dimension a few dozen), so a straightforward row-major store
/// beats pulling in a linear-algebra package that does not know about
/// exact rationals.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T{}) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == T{}) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }
  friend Mat operator*(const T& s, const Mat& x) {
    Mat r = x;
    for (auto& v : r.a_) v = s * v;
    return r;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == T{})) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

}  // namespace dca

#endif
