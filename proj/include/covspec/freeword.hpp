#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "covspec/intmat.hpp"

namespace covspec {

/// A generator or its inverse. Ordered by (generator, inverse) so x < x^-1 < y.
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return Letter{generator, !inverse}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using FreeWord = std::vector<Letter>;

inline Letter gen(std::uint32_t g, bool inv = false) { return Letter{g, inv}; }

FreeWord inverse(const FreeWord& w);
/// Free reduction (cancels x x^-1 pairs). Idempotent.
FreeWord reduce(const FreeWord& w);
/// Reduced product a*b.
FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord power(const FreeWord& w, long n);
bool is_reduced(const FreeWord& w);
bool is_cyclically_reduced(const FreeWord& w);

/// w = c * core * c^-1 with core cyclically reduced.
struct CyclicSplit {
  FreeWord conjugator;
  FreeWord core;
};
CyclicSplit cyclic_split(const FreeWord& w);
FreeWord cyclic_reduce(const FreeWord& w);

/// Rotation q*p of w = p*q where |p| = k.
FreeWord rotate(const FreeWord& w, std::size_t k);

/// Lexicographically least rotation of w and of w^-1; the input must be cyclically reduced.
FreeWord canonical_cyclic(const FreeWord& w);

/// Exponent-sum vector in Z^rank.
IntVector exponent_sums(const FreeWord& w, std::size_t rank);

/// Replace each generator g by images[g] (inverse letters by the inverse image), then reduce.
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images);

/// "x0 x3^-1 x1"; the empty word prints as "1".
std::string to_string(const FreeWord& w);
/// Parses the to_string format; single letters a..z stand for x0..x25. Throws InputError.
FreeWord parse_word(const std::string& text);

/// Least rotation of a sequence under operator< (Booth-free O(n^2); words here are short).
template <class T>
std::vector<T> least_rotation(const std::vector<T>& w) {
  std::vector<T> best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::vector<T> r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    if (r < best) best = std::move(r);
  }
  return best;
}

}  // namespace covspec
