#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace xh {

/// One letter g_i^{+1} or g_i^{-1}.
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the free group on numbered generators. The constructor does not
/// reduce; use free_reduce.
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word operator*(const Word& a, const Word& b);

/// Free and cyclic reduction, then the least rotation of w or w^{-1}. Two
/// relators with the same canonical form have the same normal closure.
Word canonical_relator(const Word& w);

/// Exponent sum of each generator.
std::vector<long long> exponent_vector(const Word& w, std::size_t generators);

/// "e1 e2^-1" using the supplied 0-based label list; "1" for the empty word.
std::string format_word(const Word& w, const std::vector<std::string>& labels);

}  // namespace xh
