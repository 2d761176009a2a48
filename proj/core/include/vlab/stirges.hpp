#pragma once

// Stirling and Gessel permutations of {1,1,2,2,...,n,n}, the bijection phi
// from Gessel to Stirling permutations in its recursive, rotation-based and
// trapezoidal-word forms, and the trapezoidal word codings themselves.

#include <cstddef>
#include <optional>
#include <vector>

namespace vlab {

/// Values over 1..n, each value occurring once or twice.
using MultisetPermutation = std::vector<int>;

/// w_i in [1, 2i-1] for i = 1..n (stored 0-indexed).
using TrapezoidalWord = std::vector<int>;

enum class Flavor { stirling, gessel };

struct Classification {
  bool stirling = false;
  bool gessel = false;
};

/// Both predicates. Throws DomainError unless every value 1..n occurs exactly
/// twice (n = length / 2).
Classification classify(const MultisetPermutation& m);

/// Non-throwing predicates; false on wrong multiplicities.
bool is_stirling(const MultisetPermutation& m);
bool is_gessel(const MultisetPermutation& m);

/// Yields each member of the flavor once ((2n-1)!! of them). Built by
/// inserting the first n into one of 2n-1 slots of a size n-1 member; the
/// second n goes immediately after it (Stirling) or at the end (Gessel).
class MultisetStream {
 public:
  MultisetStream(std::size_t n, Flavor flavor);
  std::optional<MultisetPermutation> next();

 private:
  std::size_t n_;
  Flavor flavor_;
  std::vector<std::size_t> choices_;
  bool exhausted_ = false;
};

std::vector<MultisetPermutation> enumerate_multiset(std::size_t n, Flavor flavor);

MultisetPermutation phi_recursive(const MultisetPermutation& g);
MultisetPermutation phi_direct(const MultisetPermutation& g);
MultisetPermutation phi_inverse(const MultisetPermutation& s);

/// w_i = number of entries weakly preceding the first i that are <= i.
TrapezoidalWord trap_encode(const MultisetPermutation& m, Flavor flavor);
MultisetPermutation trap_decode(const TrapezoidalWord& w, Flavor flavor);

}  // namespace vlab
