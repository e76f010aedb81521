#include "sn/linalg.hpp"

#include "sn/errors.hpp"

namespace sn {

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows || c >= cols) throw DomainError("index-out-of-range", "matrix entry out of range");
  if (sn::is_zero(v)) return;
  auto [it, inserted] = data[r].emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (sn::is_zero(it->second)) data[r].erase(it);
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data[r].find(c);
  return it == data[r].end() ? Rational(0) : it->second;
}

bool SparseMatrix::is_zero() const {
  for (const auto& row : data) {
    if (!row.empty()) return false;
  }
  return true;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t k = 0;
  for (const auto& row : data) k += row.size();
  return k;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw DomainError("dimension-mismatch", "matrix product dimensions differ");
  SparseMatrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (const auto& [k, v] : a.data[r]) {
      for (const auto& [c, w] : b.data[k]) out.add(r, c, v * w);
    }
  }
  return out;
}

SparseVec apply(const SparseMatrix& a, const SparseVec& v) {
  SparseVec out;
  for (std::size_t r = 0; r < a.rows; ++r) {
    Rational acc = 0;
    for (const auto& [c, w] : a.data[r]) {
      auto it = v.find(c);
      if (it != v.end()) acc += w * it->second;
    }
    if (!sn::is_zero(acc)) out.emplace(r, acc);
  }
  return out;
}

namespace {

using IntRow = std::map<std::size_t, Integer>;

IntRow to_primitive(const SparseVec& v) {
  Integer den = 1;
  for (const auto& [c, x] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntRow out;
  Integer g = 0;
  for (const auto& [c, x] : v) {
    Integer z = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.emplace(c, z);
  }
  if (g > 1) {
    for (auto& [c, z] : out) z /= g;
  }
  return out;
}

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& [c, z] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g > 1) {
    for (auto& [c, z] : row) z /= g;
  }
}

// row <- p*row - r*pivot where p, r are the entries in the pivot column.
void eliminate(IntRow& row, const IntRow& pivot, std::size_t col) {
  Integer p = pivot.at(col);
  Integer r = row.at(col);
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), r.get_mpz_t());
  Integer pf = p / g, rf = r / g;
  for (auto& [c, z] : row) z *= pf;
  for (const auto& [c, z] : pivot) {
    auto [it, inserted] = row.emplace(c, -rf * z);
    if (!inserted) {
      it->second -= rf * z;
      if (it->second == 0) row.erase(it);
    }
  }
  make_primitive(row);
}

void subtract_scaled(SparseVec& row, const SparseVec& pivot, const Rational& f) {
  for (const auto& [c, v] : pivot) {
    auto [it, inserted] = row.emplace(c, -f * v);
    if (!inserted) {
      it->second -= f * v;
      if (sn::is_zero(it->second)) row.erase(it);
    }
  }
}

}  // namespace

std::size_t rank(const SparseMatrix& a) {
  std::map<std::size_t, IntRow> pivots;
  for (const auto& src : a.data) {
    if (src.empty()) continue;
    IntRow row = to_primitive(src);
    while (!row.empty()) {
      auto lead = row.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        break;
      }
      eliminate(row, it->second, lead);
    }
  }
  return pivots.size();
}

std::vector<SparseVec> rref_rows(std::vector<SparseVec> rows) {
  std::map<std::size_t, SparseVec> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto lead = row.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Rational inv = 1 / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(lead, std::move(row));
        break;
      }
      Rational f = row.begin()->second;
      subtract_scaled(row, it->second, f);
    }
  }
  // Back substitution, highest pivot first.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    for (auto jt = pivots.begin(); jt->first != it->first; ++jt) {
      auto hit = jt->second.find(it->first);
      if (hit != jt->second.end()) {
        Rational f = hit->second;
        subtract_scaled(jt->second, it->second, f);
      }
    }
  }
  std::vector<SparseVec> out;
  for (auto& [c, row] : pivots) out.push_back(std::move(row));
  return out;
}

std::vector<SparseVec> nullspace(const SparseMatrix& a) {
  std::vector<SparseVec> r = rref_rows(a.data);
  std::vector<bool> is_pivot(a.cols, false);
  for (const auto& row : r) is_pivot[row.begin()->first] = true;
  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < a.cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    v.emplace(f, Rational(1));
    for (const auto& row : r) {
      auto it = row.find(f);
      if (it != row.end()) v.emplace(row.begin()->first, -it->second);
    }
    basis.push_back(std::move(v));
  }
  return rref_rows(std::move(basis));
}

std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b) {
  // Augment with the right-hand side in column a.cols.
  std::vector<SparseVec> rows = a.data;
  for (std::size_t r = 0; r < a.rows; ++r) {
    auto it = b.find(r);
    if (it != b.end()) rows[r].emplace(a.cols, it->second);
  }
  std::vector<SparseVec> red = rref_rows(std::move(rows));
  SparseVec x;
  for (const auto& row : red) {
    std::size_t lead = row.begin()->first;
    if (lead == a.cols) return std::nullopt;
    auto it = row.find(a.cols);
    if (it != row.end()) x.emplace(lead, it->second);
  }
  return x;
}

}  // namespace sn
