#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isotype/field.hpp"

namespace isotype {

// Dense element vector. Elements of algebras are dense; structure constants
// are sparse (see SparseVec).
template <Scalar K> using Vec = std::vector<K>;

template <Scalar K> Vec<K> zero_vec(std::size_t n) { return Vec<K>(n, K{}); }

template <Scalar K> Vec<K> unit_vec(std::size_t n, std::size_t i) {
  Vec<K> v(n, K{});
  v[i] = K{1};
  return v;
}

template <Scalar K> bool is_zero_vec(const Vec<K> &v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

template <Scalar K> void add_scaled(Vec<K> &dst, const K &c, const Vec<K> &src) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] += c * src[i];
}

template <Scalar K> Vec<K> scaled(const Vec<K> &v, const K &c) {
  Vec<K> out(v);
  for (auto &x : out)
    x *= c;
  return out;
}

template <Scalar K> Vec<K> vec_add(const Vec<K> &a, const Vec<K> &b) {
  Vec<K> out(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += b[i];
  return out;
}

template <Scalar K> Vec<K> vec_sub(const Vec<K> &a, const Vec<K> &b) {
  Vec<K> out(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] -= b[i];
  return out;
}

// Sorted sparse vector: strictly increasing indices, no stored zeros.
template <Scalar K> struct SparseVec {
  std::vector<std::pair<std::uint32_t, K>> terms;

  SparseVec() = default;

  static SparseVec unit(std::uint32_t i, K c = K{1}) {
    SparseVec v;
    if (!c.is_zero())
      v.terms.push_back({i, std::move(c)});
    return v;
  }

  static SparseVec from_dense(const Vec<K> &d) {
    SparseVec v;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!d[i].is_zero())
        v.terms.push_back({(std::uint32_t)i, d[i]});
    return v;
  }

  Vec<K> to_dense(std::size_t n) const {
    Vec<K> d(n, K{});
    for (const auto &[i, c] : terms)
      d[i] = c;
    return d;
  }

  bool is_zero() const { return terms.empty(); }
  std::size_t nnz() const { return terms.size(); }
  std::uint32_t leading() const { return terms.front().first; }
  const K &leading_coeff() const { return terms.front().second; }

  K coeff(std::uint32_t i) const {
    for (const auto &[j, c] : terms)
      if (j == i)
        return c;
      else if (j > i)
        break;
    return K{};
  }

  void push(std::uint32_t i, const K &c) {
    if (!c.is_zero())
      terms.push_back({i, c});
  }

  SparseVec scaled(const K &c) const {
    SparseVec out;
    if (c.is_zero())
      return out;
    out.terms.reserve(terms.size());
    for (const auto &[i, x] : terms)
      out.push(i, x * c);
    return out;
  }

  friend bool operator==(const SparseVec &a, const SparseVec &b) {
    if (a.terms.size() != b.terms.size())
      return false;
    for (std::size_t k = 0; k < a.terms.size(); ++k)
      if (a.terms[k].first != b.terms[k].first ||
          !(a.terms[k].second == b.terms[k].second))
        return false;
    return true;
  }
};

// dst = a + c*b, sorted merge
template <Scalar K>
SparseVec<K> sv_axpy(const SparseVec<K> &a, const K &c, const SparseVec<K> &b) {
  if (c.is_zero())
    return a;
  SparseVec<K> out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j >= b.terms.size() ||
        (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      out.terms.push_back(a.terms[i++]);
    } else if (i >= a.terms.size() || b.terms[j].first < a.terms[i].first) {
      out.push(b.terms[j].first, c * b.terms[j].second);
      ++j;
    } else {
      K v = a.terms[i].second + c * b.terms[j].second;
      out.push(a.terms[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <Scalar K>
SparseVec<K> sv_add(const SparseVec<K> &a, const SparseVec<K> &b) {
  return sv_axpy(a, K{1}, b);
}

template <Scalar K>
SparseVec<K> sv_sub(const SparseVec<K> &a, const SparseVec<K> &b) {
  return sv_axpy(a, K{-1}, b);
}

template <Scalar K>
void accumulate(Vec<K> &dst, const K &c, const SparseVec<K> &src) {
  if (c.is_zero())
    return;
  for (const auto &[i, x] : src.terms)
    dst[i] += c * x;
}

// Dense matrix, row-major. Used for operator algebra at desk scale.
template <Scalar K> struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, K{}) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, i) = K{1};
    return m;
  }

  K &at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const K &at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  Vec<K> apply(const Vec<K> &v) const {
    Vec<K> out(rows, K{});
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero())
          out[i] += at(i, j) * v[j];
    return out;
  }

  Vec<K> column(std::size_t j) const {
    Vec<K> out(rows, K{});
    for (std::size_t i = 0; i < rows; ++i)
      out[i] = at(i, j);
    return out;
  }

  Mat compose(const Mat &rhs) const { // this * rhs
    Mat out(rows, rhs.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        const K &c = at(i, k);
        if (c.is_zero())
          continue;
        for (std::size_t j = 0; j < rhs.cols; ++j)
          if (!rhs.at(k, j).is_zero())
            out.at(i, j) += c * rhs.at(k, j);
      }
    return out;
  }

  Mat commutator(const Mat &rhs) const {
    Mat ab = compose(rhs), ba = rhs.compose(*this);
    for (std::size_t i = 0; i < a.size(); ++i)
      ab.a[i] -= ba.a[i];
    return ab;
  }

  Mat scaled(const K &c) const {
    Mat out(*this);
    for (auto &x : out.a)
      x *= c;
    return out;
  }

  Mat add(const Mat &rhs) const {
    Mat out(*this);
    for (std::size_t i = 0; i < a.size(); ++i)
      out.a[i] += rhs.a[i];
    return out;
  }

  Mat sub(const Mat &rhs) const {
    Mat out(*this);
    for (std::size_t i = 0; i < a.size(); ++i)
      out.a[i] -= rhs.a[i];
    return out;
  }

  bool is_zero() const {
    for (const auto &x : a)
      if (!x.is_zero())
        return false;
    return true;
  }

  K trace() const {
    K t{};
    for (std::size_t i = 0; i < rows; ++i)
      t += at(i, i);
    return t;
  }

  Vec<K> flatten() const { return a; }

  friend bool operator==(const Mat &x, const Mat &y) {
    return x.rows == y.rows && x.cols == y.cols &&
           [&] {
             for (std::size_t i = 0; i < x.a.size(); ++i)
               if (!(x.a[i] == y.a[i]))
                 return false;
             return true;
           }();
  }
};

} // namespace isotype
