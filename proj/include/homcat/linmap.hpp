#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "homcat/field.hpp"

namespace homcat {

using Vec = std::vector<FieldElem>;

// Flat index of basis tensor e_i (x) e_j when the right factor has dimension dimJ.
// Nested tensors flatten left to right, so ((i,j),k) and (i,(j,k)) agree.
constexpr std::size_t flatten(std::size_t i, std::size_t j, std::size_t dimJ) {
  return i * dimJ + j;
}

std::size_t flatten(std::span<const std::size_t> index, std::span<const std::size_t> dims);
std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> dims);

Vec unit_vector(Field f, std::size_t n, std::size_t i);

// Dense row-major matrix over a single field.
class LinMap {
 public:
  LinMap() = default;
  LinMap(Field f, std::size_t rows, std::size_t cols);

  static LinMap identity(Field f, std::size_t n);
  static LinMap scalar(const FieldElem& s, std::size_t n);
  static LinMap diagonal(std::span<const FieldElem> d);
  static LinMap from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows);
  static LinMap column(const Vec& v);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const FieldElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElem& at(std::size_t i, std::size_t j) const;

  Vec col(std::size_t j) const;
  bool is_zero() const;
  LinMap transpose() const;
  LinMap scaled(const FieldElem& s) const;
  // Columns [first, first + count).
  LinMap col_block(std::size_t first, std::size_t count) const;

  LinMap& operator+=(const LinMap& o);
  // this += s * o
  void add_scaled(const FieldElem& s, const LinMap& o);
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  friend bool operator==(const LinMap& a, const LinMap& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

// g after f.
LinMap compose(const LinMap& g, const LinMap& f);
// compose(fs[0], compose(fs[1], ...)): the last map is applied first.
LinMap compose(std::initializer_list<LinMap> fs);
LinMap kron(const LinMap& f, const LinMap& g);
LinMap kron(std::initializer_list<LinMap> fs);
Vec apply(const LinMap& f, const Vec& v);

// e_i (x) e_j  ->  e_j (x) e_i for i < dU, j < dV.
LinMap flip_map(Field f, std::size_t dU, std::size_t dV);
// Reorders tensor factors: output factor k is input factor order[k].
LinMap tensor_permutation(Field f, std::span<const std::size_t> dims,
                          std::span<const std::size_t> order);

LinMap inverse(const LinMap& f);
std::size_t rank(const LinMap& f);
LinMap power(const LinMap& f, unsigned k);

}  // namespace homcat
