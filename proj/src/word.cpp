#include "xh/word.hpp"

#include <algorithm>

namespace xh {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->generator, -it->exponent});
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].generator == w[hi - 1].generator &&
         w[lo].exponent == -w[hi - 1].exponent) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo),
              w.begin() + static_cast<std::ptrdiff_t>(hi));
}

// Positive letters sort before negative ones so canonical relators read
// e1 e1 rather than e1^-1 e1^-1.
bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const Letter& x, const Letter& y) {
        if (x.generator != y.generator) return x.generator < y.generator;
        return x.exponent > y.exponent;
      });
}

Word least_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (word_less(rot, best)) best = rot;
  }
  return best;
}

}  // namespace

Word canonical_relator(const Word& w) {
  auto r = cyclic_reduce(w);
  if (r.empty()) return r;
  auto a = least_rotation(r);
  auto b = least_rotation(inverse(r));
  return word_less(b, a) ? b : a;
}

std::vector<long long> exponent_vector(const Word& w, std::size_t generators) {
  std::vector<long long> v(generators, 0);
  for (const auto& l : w) v.at(l.generator) += l.exponent;
  return v;
}

std::string format_word(const Word& w, const std::vector<std::string>& labels) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += labels.at(w[i].generator);
    if (w[i].exponent < 0) out += "^-1";
  }
  return out;
}

}  // namespace xh
