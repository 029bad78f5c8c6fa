#pragma once

// Exact integer linear algebra for abelianizations: Smith normal form of the
// relator-exponent matrix, and lattice membership via row echelon form.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xh/word.hpp"

namespace xh {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero diagonal of the Smith normal form: positive, each entry dividing
/// the next. Rows shorter than `columns` are zero-padded.
std::vector<BigInt> smith_diagonal(IntMatrix m, std::size_t columns);

/// Z^rank + sum Z/t_i with every t_i >= 2 and t_i | t_{i+1}.
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;  // "rank 0, torsion [2]"
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Abelianization of <generators | relators>.
AbelianInvariants abelian_invariants(std::size_t generators,
                                     const std::vector<Word>& relators);
AbelianInvariants abelian_invariants_of_matrix(const IntMatrix& rows,
                                               std::size_t columns);

/// The subgroup of Z^n spanned by a set of integer rows.
class IntegerLattice {
 public:
  IntegerLattice(const IntMatrix& rows, std::size_t columns);
  bool contains(const std::vector<BigInt>& v) const;
  bool contains(const std::vector<long long>& v) const;
  std::size_t columns() const { return columns_; }

 private:
  std::size_t columns_;
  // Echelon rows: pivot column strictly increasing, pivot entry positive.
  std::vector<std::vector<BigInt>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace xh
