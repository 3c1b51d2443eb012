#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "akm/errors.hpp"
#include "akm/rational.hpp"

namespace akm {

using Vector = std::vector<Rational>;

/// (contravariant, covariant) slot counts of a Tensor.
struct TensorRank {
  int contravariant = 0;
  int covariant = 0;
  int total() const { return contravariant + covariant; }
  friend bool operator==(const TensorRank&, const TensorRank&) = default;
};

/// Dense array of Rationals over frame indices.
///
/// Index order is fixed: all contravariant slots first, then all covariant
/// slots, each running over 0..dim-1, stored row-major. So a (1,1) tensor A
/// has A(i, j) = coefficient of e_i in A(e_j), and the (1,2) structure
/// tensor c has c(k, i, j) = coefficient of e_k in [e_i, e_j].
class Tensor {
 public:
  Tensor(TensorRank rank, int dim)
      : rank_(rank), dim_(dim), entries_(flat_size(rank, dim), Rational(0)) {
    if (dim < 1) throw ShapeError("tensor dimension must be positive");
    if (rank.contravariant < 0 || rank.covariant < 0)
      throw ShapeError("tensor rank counts must be non-negative");
  }

  const TensorRank& rank() const { return rank_; }
  int dim() const { return dim_; }

  const Rational& at(std::span<const int> idx) const { return entries_[offset(idx)]; }
  Rational& at(std::span<const int> idx) { return entries_[offset(idx)]; }

  const Rational& operator()(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  Rational& operator()(std::initializer_list<int> idx) {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.rank_ == b.rank_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  Tensor& operator+=(const Tensor& o) {
    require_same_shape(o);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same_shape(o);
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  Tensor& operator*=(const Rational& c) {
    for (auto& e : entries_) e *= c;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& c, Tensor t) { return t *= c; }
  friend Tensor operator-(Tensor t) {
    for (auto& e : t.entries_) e = -e;
    return t;
  }

 private:
  static size_t flat_size(TensorRank rank, int dim) {
    size_t n = 1;
    for (int i = 0; i < rank.total(); ++i) n *= static_cast<size_t>(dim);
    return n;
  }

  size_t offset(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != rank_.total())
      throw ShapeError("tensor indexed with wrong number of indices");
    size_t off = 0;
    for (int i : idx) {
      if (i < 0 || i >= dim_) throw ShapeError("tensor index out of range");
      off = off * static_cast<size_t>(dim_) + static_cast<size_t>(i);
    }
    return off;
  }

  void require_same_shape(const Tensor& o) const {
    if (!(rank_ == o.rank_) || dim_ != o.dim_)
      throw ShapeError("tensor shapes do not match");
  }

  TensorRank rank_;
  int dim_;
  std::vector<Rational> entries_;
};

/// Identity as a (1,1) tensor.
inline Tensor identity_endomorphism(int dim) {
  Tensor id({1, 1}, dim);
  for (int i = 0; i < dim; ++i) id({i, i}) = 1;
  return id;
}

/// Applies a (1,1) tensor to component vector x.
inline Vector apply_endo(const Tensor& a, const Vector& x) {
  if (!(a.rank() == TensorRank{1, 1})) throw ShapeError("apply_endo needs a (1,1) tensor");
  if (static_cast<int>(x.size()) != a.dim())
    throw ShapeError("apply_endo: vector length does not match tensor dimension");
  Vector y(x.size(), Rational(0));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) y[i] += a({i, j}) * x[j];
  return y;
}

/// Composition a ∘ b of (1,1) tensors.
inline Tensor compose_endo(const Tensor& a, const Tensor& b) {
  if (!(a.rank() == TensorRank{1, 1}) || !(b.rank() == TensorRank{1, 1}) || a.dim() != b.dim())
    throw ShapeError("compose_endo needs two (1,1) tensors of equal dimension");
  Tensor c({1, 1}, a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) c({i, j}) += a({i, k}) * b({k, j});
  return c;
}

inline Rational endo_trace(const Tensor& a) {
  if (!(a.rank() == TensorRank{1, 1})) throw ShapeError("endo_trace needs a (1,1) tensor");
  Rational t(0);
  for (int i = 0; i < a.dim(); ++i) t += a({i, i});
  return t;
}

}  // namespace akm
