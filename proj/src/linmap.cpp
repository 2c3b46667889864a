#include "homcat/linmap.hpp"

#include <string>

#include "homcat/error.hpp"

namespace homcat {
namespace {

void require_field(const LinMap& a, const LinMap& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("maps over " + a.field().name() + " and " + b.field().name());
}

std::string shape(const LinMap& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

std::size_t flatten(std::span<const std::size_t> index, std::span<const std::size_t> dims) {
  if (index.size() != dims.size()) throw DimensionMismatch("multi-index arity");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (index[k] >= dims[k]) throw DimensionMismatch("multi-index out of range");
    flat = flat * dims[k] + index[k];
  }
  return flat;
}

std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  return idx;
}

Vec unit_vector(Field f, std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionMismatch("basis index out of range");
  Vec v(n, FieldElem(f, 0));
  v[i] = FieldElem(f, 1);
  return v;
}

LinMap::LinMap(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, FieldElem(f, 0)) {}

LinMap LinMap::identity(Field f, std::size_t n) {
  LinMap m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem(f, 1);
  return m;
}

LinMap LinMap::scalar(const FieldElem& s, std::size_t n) {
  LinMap m(s.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

LinMap LinMap::diagonal(std::span<const FieldElem> d) {
  LinMap m(d.empty() ? Field() : d.front().field(), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

LinMap LinMap::from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  LinMap m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = FieldElem(f, v);
    ++i;
  }
  return m;
}

LinMap LinMap::column(const Vec& v) {
  LinMap m(v.empty() ? Field() : v.front().field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

const FieldElem& LinMap::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw DimensionMismatch("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + shape(*this));
  return (*this)(i, j);
}

Vec LinMap::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

bool LinMap::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

LinMap LinMap::transpose() const {
  LinMap t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LinMap LinMap::scaled(const FieldElem& s) const {
  LinMap m = *this;
  for (auto& e : m.data_) e *= s;
  return m;
}

LinMap LinMap::col_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DimensionMismatch("column block outside " + shape(*this));
  LinMap m(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

LinMap& LinMap::operator+=(const LinMap& o) {
  require_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("sum of " + shape(*this) + " and " + shape(o));
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

void LinMap::add_scaled(const FieldElem& s, const LinMap& o) {
  require_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("sum of " + shape(*this) + " and " + shape(o));
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k].add_product(s, o.data_[k]);
}

LinMap operator-(const LinMap& a, const LinMap& b) {
  LinMap d = a;
  d.add_scaled(FieldElem(a.field(), -1), b);
  return d;
}

bool operator==(const LinMap& a, const LinMap& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

LinMap compose(const LinMap& g, const LinMap& f) {
  require_field(g, f);
  if (g.cols() != f.rows())
    throw DimensionMismatch("cannot compose " + shape(g) + " after " + shape(f));
  // Row-sparse view of f; the maps we build are mostly permutation-like.
  std::vector<std::vector<std::size_t>> nz(f.rows());
  for (std::size_t k = 0; k < f.rows(); ++k)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (!f(k, j).is_zero()) nz[k].push_back(j);
  LinMap out(g.field(), g.rows(), f.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const FieldElem& a = g(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j : nz[k]) out(i, j).add_product(a, f(k, j));
    }
  return out;
}

LinMap compose(std::initializer_list<LinMap> fs) {
  if (fs.size() == 0) throw DimensionMismatch("empty composition");
  auto it = fs.end();
  LinMap acc = *--it;
  while (it != fs.begin()) acc = compose(*--it, acc);
  return acc;
}

LinMap kron(const LinMap& f, const LinMap& g) {
  require_field(f, g);
  LinMap out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const FieldElem& a = f(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const FieldElem& b = g(k, l);
          if (!b.is_zero()) out(flatten(i, k, g.rows()), flatten(j, l, g.cols())) = a * b;
        }
    }
  return out;
}

LinMap kron(std::initializer_list<LinMap> fs) {
  if (fs.size() == 0) throw DimensionMismatch("empty tensor product");
  auto it = fs.begin();
  LinMap acc = *it++;
  for (; it != fs.end(); ++it) acc = kron(acc, *it);
  return acc;
}

Vec apply(const LinMap& f, const Vec& v) {
  if (v.size() != f.cols()) throw DimensionMismatch("vector length vs " + shape(f));
  Vec out(f.rows(), FieldElem(f.field(), 0));
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out[i].add_product(f(i, j), v[j]);
  return out;
}

LinMap flip_map(Field f, std::size_t dU, std::size_t dV) {
  LinMap m(f, dU * dV, dU * dV);
  for (std::size_t i = 0; i < dU; ++i)
    for (std::size_t j = 0; j < dV; ++j) m(flatten(j, i, dU), flatten(i, j, dV)) = FieldElem(f, 1);
  return m;
}

LinMap tensor_permutation(Field f, std::span<const std::size_t> dims,
                          std::span<const std::size_t> order) {
  if (order.size() != dims.size()) throw DimensionMismatch("permutation arity");
  std::vector<std::size_t> out_dims;
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t k : order) {
    if (k >= dims.size() || seen[k]) throw DimensionMismatch("not a permutation");
    seen[k] = true;
    out_dims.push_back(dims[k]);
  }
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  LinMap m(f, total, total);
  std::vector<std::size_t> out_idx(dims.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    auto idx = unflatten(flat, dims);
    for (std::size_t k = 0; k < order.size(); ++k) out_idx[k] = idx[order[k]];
    m(flatten(out_idx, out_dims), flat) = FieldElem(f, 1);
  }
  return m;
}

namespace {

// Gauss-Jordan on a copy; returns rank, optionally tracking the inverse.
std::size_t eliminate(LinMap a, LinMap* inv) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
      if (inv)
        for (std::size_t j = 0; j < inv->cols(); ++j) std::swap((*inv)(piv, j), (*inv)(r, j));
    }
    FieldElem s = a(r, c).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= s;
    if (inv)
      for (std::size_t j = 0; j < inv->cols(); ++j) (*inv)(r, j) *= s;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      FieldElem t = -a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j).add_product(t, a(r, j));
      if (inv)
        for (std::size_t j = 0; j < inv->cols(); ++j)
          if (!(*inv)(r, j).is_zero()) (*inv)(i, j).add_product(t, (*inv)(r, j));
    }
    ++r;
  }
  return r;
}

}  // namespace

LinMap inverse(const LinMap& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square " + shape(a));
  LinMap inv = LinMap::identity(a.field(), a.rows());
  if (eliminate(a, &inv) != a.rows()) throw SingularMatrix("matrix is singular");
  return inv;
}

std::size_t rank(const LinMap& a) { return eliminate(a, nullptr); }

LinMap power(const LinMap& f, unsigned k) {
  if (!f.is_square()) throw DimensionMismatch("power of non-square " + shape(f));
  LinMap acc = LinMap::identity(f.field(), f.rows());
  for (unsigned i = 0; i < k; ++i) acc = compose(f, acc);
  return acc;
}

}  // namespace homcat
