#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sn/rational.hpp"

namespace sn {

using SparseVec = std::map<std::size_t, Rational>;

/// Row-major sparse matrix over Q.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> data;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}

  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;
  bool is_zero() const;
  std::size_t nonzeros() const;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseVec apply(const SparseMatrix& a, const SparseVec& v);

/// Rank by fraction-free elimination on primitive integer rows.
std::size_t rank(const SparseMatrix& a);

/// Reduced row echelon form of the row space; rows ordered by pivot column.
std::vector<SparseVec> rref_rows(std::vector<SparseVec> rows);

/// Basis of {v : a v = 0}, returned as the reduced echelon basis (rows
/// ordered by ascending pivot column, pivots equal to 1).
std::vector<SparseVec> nullspace(const SparseMatrix& a);

/// Some solution of a v = b, or nullopt when inconsistent.
std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b);

}  // namespace sn
