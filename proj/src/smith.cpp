#include "xh/smith.hpp"

#include <algorithm>
#include <utility>

namespace xh {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Extended Euclid with g = x*a + y*b >= 0.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

void pad(IntMatrix& m, std::size_t columns) {
  for (auto& row : m) row.resize(columns, 0);
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix a, std::size_t columns) {
  pad(a, columns);
  const std::size_t rows = a.size();
  std::vector<BigInt> diagonal;

  for (std::size_t t = 0; t < rows && t < columns; ++t) {
    // Partial pivoting: move the entry of least absolute value to (t, t).
    auto bring_min_to_pivot = [&](bool whole_block) {
      bool found = false;
      std::size_t bi = t, bj = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < columns; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (a[i][j] == 0) continue;
          BigInt v = abs_value(a[i][j]);
          if (!found || v < best) {
            found = true;
            best = v;
            bi = i;
            bj = j;
          }
        }
      }
      if (!found) return false;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      return true;
    };

    if (!bring_min_to_pivot(true)) break;

    while (true) {
      const BigInt p = a[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / p;
        for (std::size_t j = t; j < columns; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        bring_min_to_pivot(false);
        continue;
      }
      // Pivot must divide the remaining block; fold an offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < columns; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < columns; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diagonal.push_back(abs_value(a[t][t]));
  }
  return diagonal;
}

std::string AbelianInvariants::to_string() const {
  std::string out = "rank " + std::to_string(rank) + ", torsion [";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += ", ";
    out += torsion[i].str();
  }
  return out + "]";
}

AbelianInvariants abelian_invariants_of_matrix(const IntMatrix& rows,
                                               std::size_t columns) {
  auto diagonal = smith_diagonal(rows, columns);
  AbelianInvariants inv;
  inv.rank = columns - diagonal.size();
  for (auto& d : diagonal)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

AbelianInvariants abelian_invariants(std::size_t generators,
                                     const std::vector<Word>& relators) {
  IntMatrix m;
  m.reserve(relators.size());
  for (const auto& r : relators) {
    auto ev = exponent_vector(r, generators);
    m.emplace_back(ev.begin(), ev.end());
  }
  return abelian_invariants_of_matrix(m, generators);
}

IntegerLattice::IntegerLattice(const IntMatrix& rows, std::size_t columns)
    : columns_(columns) {
  for (auto v : rows) {
    v.resize(columns, 0);
    while (true) {
      auto c = static_cast<std::size_t>(
          std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; }) -
          v.begin());
      if (c == columns) break;
      auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
      if (static_cast<std::size_t>(pos) == pivots_.size() ||
          pivots_[static_cast<std::size_t>(pos)] != c) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        basis_.insert(basis_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, c);
        break;
      }
      auto& b = basis_[static_cast<std::size_t>(pos)];
      BigInt x, y;
      BigInt g = ext_gcd(b[c], v[c], x, y);
      BigInt fb = b[c] / g;
      BigInt fv = v[c] / g;
      std::vector<BigInt> nb(columns), nv(columns);
      for (std::size_t k = 0; k < columns; ++k) {
        nb[k] = x * b[k] + y * v[k];
        nv[k] = fv * b[k] - fb * v[k];
      }
      b = std::move(nb);
      v = std::move(nv);
    }
  }
}

bool IntegerLattice::contains(const std::vector<BigInt>& w) const {
  auto v = w;
  v.resize(columns_, 0);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const auto c = pivots_[r];
    for (std::size_t k = 0; k < c; ++k)
      if (v[k] != 0) return false;
    if (v[c] % basis_[r][c] != 0) return false;
    BigInt q = v[c] / basis_[r][c];
    for (std::size_t k = c; k < columns_; ++k) v[k] -= q * basis_[r][k];
  }
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

bool IntegerLattice::contains(const std::vector<long long>& w) const {
  return contains(std::vector<BigInt>(w.begin(), w.end()));
}

}  // namespace xh
