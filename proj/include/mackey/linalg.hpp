#pragma once

// Dense exact linear algebra over any field type with the GF/Rationals interface.

#include <optional>
#include <stdexcept>
#include <vector>

#include "mackey/error.hpp"

namespace mackey {

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
struct Mat {
  using T = typename F::value_type;
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c, const F& f) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, f.zero()) {}
  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Mat identity(int n, const F& f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  Vec<F> row(int i) const { return Vec<F>(a.begin() + static_cast<std::size_t>(i) * cols, a.begin() + static_cast<std::size_t>(i + 1) * cols); }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class F>
Mat<F> from_rows(const std::vector<Vec<F>>& rows, int cols, const F& f) {
  Mat<F> m(static_cast<int>(rows.size()), cols, f);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<int> rref(const F& f, Mat<F>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!f.is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    auto iv = f.inv(m(r, c));
    for (int j = c; j < m.cols; ++j) m(r, j) = f.mul(m(r, j), iv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto s = m(i, c);
      for (int j = c; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(s, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(const F& f, Mat<F> m) {
  return static_cast<int>(rref(f, m).size());
}

/// Basis of {v : m v = 0}.
template <class F>
std::vector<Vec<F>> nullspace(const F& f, Mat<F> m) {
  auto piv = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec<F>> out;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.neg(m(static_cast<int>(r), free));
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
Mat<F> matmul(const F& f, const Mat<F>& x, const Mat<F>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul shape mismatch");
  Mat<F> z(x.rows, y.cols, f);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (f.is_zero(x(i, k))) continue;
      auto s = x(i, k);
      for (int j = 0; j < y.cols; ++j) z(i, j) = f.add(z(i, j), f.mul(s, y(k, j)));
    }
  return z;
}

template <class F>
Vec<F> apply(const F& f, const Mat<F>& m, const Vec<F>& v) {
  Vec<F> out(m.rows, f.zero());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!f.is_zero(v[j])) out[i] = f.add(out[i], f.mul(m(i, j), v[j]));
  return out;
}

template <class F>
std::optional<Mat<F>> inverse(const F& f, const Mat<F>& m) {
  int n = m.rows;
  Mat<F> aug(n, 2 * n, f);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto piv = rref(f, aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<F> inv(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
void axpy(const F& f, Vec<F>& y, const typename F::value_type& a, const Vec<F>& x) {
  if (f.is_zero(a)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!f.is_zero(x[i])) y[i] = f.add(y[i], f.mul(a, x[i]));
}

template <class F>
Vec<F> scaled(const F& f, const typename F::value_type& a, Vec<F> x) {
  for (auto& v : x) v = f.mul(a, v);
  return x;
}

/// Incrementally built subspace that remembers how each echelon row was made
/// from the vectors fed to `add`, so membership queries return coordinates.
template <class F>
class Subspace {
 public:
  using T = typename F::value_type;

  Subspace(const F& f, int length) : f_(f), n_(length) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int length() const { return n_; }
  /// Independent input vectors, in the order they were accepted.
  const std::vector<Vec<F>>& basis() const { return originals_; }

  /// Adds v if it is independent of the current span; returns whether it was.
  bool add(const Vec<F>& v) {
    Vec<F> r = v;
    Vec<F> c(originals_.size() + 1, f_.zero());
    reduce_into(r, c);
    int piv = -1;
    for (int i = 0; i < n_; ++i)
      if (!f_.is_zero(r[i])) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    T iv = f_.inv(r[piv]);
    for (auto& x : r) x = f_.mul(x, iv);
    // r = v + sum_i c_i rows_i
    for (auto& row : combos_) row.push_back(f_.zero());
    Vec<F> combo(originals_.size() + 1, f_.zero());
    combo.back() = iv;
    for (std::size_t i = 0; i < rows_.size(); ++i) axpy(f_, combo, f_.mul(iv, c[i]), combos_[i]);
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(combo));
    pivots_.push_back(piv);
    originals_.push_back(v);
    return true;
  }

  bool contains(const Vec<F>& v) const {
    Vec<F> r = v;
    Vec<F> c(originals_.size(), f_.zero());
    reduce_into(r, c);
    return is_zero_vec(f_, r);
  }

  /// Coordinates of v with respect to basis(), if v lies in the span.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    Vec<F> r = v;
    Vec<F> c(originals_.size(), f_.zero());
    reduce_into(r, c);
    if (!is_zero_vec(f_, r)) return std::nullopt;
    // v = sum c_i rows_i, rows_i = sum combos_i[j] originals_j ; c holds -(coefficients)
    Vec<F> out(originals_.size(), f_.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i) axpy(f_, out, f_.neg(c[i]), combos_[i]);
    return out;
  }

  /// Residual of v after reduction against the echelon rows.
  Vec<F> reduce(const Vec<F>& v) const {
    Vec<F> r = v;
    Vec<F> c(originals_.size(), f_.zero());
    reduce_into(r, c);
    return r;
  }

 private:
  // Reduces r in place; c[i] accumulates minus the multiple of echelon row i removed.
  // When c is longer than the number of rows, the extra slot is left alone.
  void reduce_into(Vec<F>& r, Vec<F>& c) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T& x = r[pivots_[i]];
      if (f_.is_zero(x)) continue;
      T s = x;
      const Vec<F>& row = rows_[i];
      for (int j = 0; j < n_; ++j)
        if (!f_.is_zero(row[j])) r[j] = f_.sub(r[j], f_.mul(s, row[j]));
      c[i] = f_.sub(c[i], s);
    }
  }

  F f_;
  int n_;
  std::vector<Vec<F>> rows_;
  std::vector<Vec<F>> combos_;
  std::vector<int> pivots_;
  std::vector<Vec<F>> originals_;
};

}  // namespace mackey
