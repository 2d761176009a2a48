#include "vlab/stirges.hpp"

#include <algorithm>
#include <string>

#include "vlab/error.hpp"

namespace vlab {

namespace {

// first[v], second[v] (0-based positions) for v = 1..n; nullopt if some
// value does not occur exactly twice.
struct Occurrences {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

std::optional<Occurrences> occurrences(const MultisetPermutation& m) {
  if (m.size() % 2 != 0) return std::nullopt;
  const std::size_t n = m.size() / 2;
  Occurrences occ{std::vector<std::size_t>(n + 1, m.size()), std::vector<std::size_t>(n + 1, m.size())};
  for (std::size_t pos = 0; pos < m.size(); ++pos) {
    const int v = m[pos];
    if (v < 1 || static_cast<std::size_t>(v) > n) return std::nullopt;
    if (occ.first[v] == m.size()) {
      occ.first[v] = pos;
    } else if (occ.second[v] == m.size()) {
      occ.second[v] = pos;
    } else {
      return std::nullopt;
    }
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (occ.second[v] == m.size()) return std::nullopt;
  }
  return occ;
}

Occurrences require_occurrences(const MultisetPermutation& m) {
  auto occ = occurrences(m);
  if (!occ) throw DomainError("every value 1..n must occur exactly twice");
  return *occ;
}

bool stirling_property(const MultisetPermutation& m, const Occurrences& occ) {
  const std::size_t n = m.size() / 2;
  for (std::size_t v = 1; v <= n; ++v) {
    for (std::size_t pos = occ.first[v] + 1; pos < occ.second[v]; ++pos) {
      if (m[pos] <= static_cast<int>(v)) return false;
    }
  }
  return true;
}

bool gessel_property(const MultisetPermutation& m, const Occurrences& occ) {
  const std::size_t n = m.size() / 2;
  for (std::size_t v = 2; v <= n; ++v) {
    if (occ.second[v] < occ.second[v - 1]) return false;
  }
  return true;
}

// Largest i < bound whose two occurrences enclose a smaller entry, or 0.
int largest_bracketing(const MultisetPermutation& m, int bound) {
  const auto occ = *occurrences(m);
  for (int i = bound - 1; i >= 1; --i) {
    for (std::size_t pos = occ.first[i] + 1; pos < occ.second[i]; ++pos) {
      if (m[pos] < i) return i;
    }
  }
  return 0;
}

}  // namespace

Classification classify(const MultisetPermutation& m) {
  const auto occ = require_occurrences(m);
  return {stirling_property(m, occ), gessel_property(m, occ)};
}

bool is_stirling(const MultisetPermutation& m) {
  const auto occ = occurrences(m);
  return occ && stirling_property(m, *occ);
}

bool is_gessel(const MultisetPermutation& m) {
  const auto occ = occurrences(m);
  return occ && gessel_property(m, *occ);
}

MultisetStream::MultisetStream(std::size_t n, Flavor flavor) : n_(n), flavor_(flavor), choices_(n, 0) {
  if (n < 1) throw DomainError("multiset enumeration requires n >= 1");
}

std::optional<MultisetPermutation> MultisetStream::next() {
  if (exhausted_) return std::nullopt;
  MultisetPermutation out;
  out.reserve(2 * n_);
  for (std::size_t m = 1; m <= n_; ++m) {
    const auto slot = static_cast<std::ptrdiff_t>(choices_[m - 1]);
    const int v = static_cast<int>(m);
    if (flavor_ == Flavor::stirling) {
      out.insert(out.begin() + slot, {v, v});
    } else {
      out.insert(out.begin() + slot, v);
      out.push_back(v);
    }
  }
  // Advance the mixed-radix counter; the last digit varies fastest.
  std::size_t digit = n_;
  while (digit > 0) {
    --digit;
    if (++choices_[digit] < 2 * (digit + 1) - 1) break;
    choices_[digit] = 0;
    if (digit == 0) exhausted_ = true;
  }
  if (n_ == 0) exhausted_ = true;
  return out;
}

std::vector<MultisetPermutation> enumerate_multiset(std::size_t n, Flavor flavor) {
  std::vector<MultisetPermutation> out;
  MultisetStream stream(n, flavor);
  while (auto m = stream.next()) out.push_back(std::move(*m));
  return out;
}

MultisetPermutation phi_recursive(const MultisetPermutation& g) {
  if (!is_gessel(g)) throw DomainError("phi requires a Gessel permutation");
  const std::size_t n = g.size() / 2;
  // slot[m] = 0-based position of the first m after deleting all values > m.
  std::vector<std::size_t> slot(n + 1, 0);
  MultisetPermutation reduced = g;
  for (std::size_t m = n; m >= 1; --m) {
    const int v = static_cast<int>(m);
    slot[m] = static_cast<std::size_t>(std::find(reduced.begin(), reduced.end(), v) - reduced.begin());
    std::erase(reduced, v);
  }
  MultisetPermutation out;
  out.reserve(g.size());
  for (std::size_t m = 1; m <= n; ++m) {
    const int v = static_cast<int>(m);
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(slot[m]), {v, v});
  }
  return out;
}

MultisetPermutation phi_direct(const MultisetPermutation& g) {
  if (!is_gessel(g)) throw DomainError("phi requires a Gessel permutation");
  MultisetPermutation s = g;
  int bound = static_cast<int>(g.size() / 2) + 1;
  while (int i = largest_bracketing(s, bound)) {
    const auto occ = *occurrences(s);
    // Squares: entries <= i after the first divider up to and including the
    // second occurrence of i.
    std::vector<std::size_t> squares;
    for (std::size_t pos = occ.first[i] + 1; pos <= occ.second[i]; ++pos) {
      if (s[pos] <= i) squares.push_back(pos);
    }
    const int carried = s[squares.back()];
    for (std::size_t t = squares.size() - 1; t > 0; --t) s[squares[t]] = s[squares[t - 1]];
    s[squares.front()] = carried;
    bound = i;
  }
  return s;
}

MultisetPermutation phi_inverse(const MultisetPermutation& s) {
  if (!is_stirling(s)) throw DomainError("phi inverse requires a Stirling permutation");
  MultisetPermutation g = s;
  const int n = static_cast<int>(s.size() / 2);
  for (int i = 1; i <= n; ++i) {
    const auto occ = *occurrences(g);
    std::vector<std::size_t> squares{occ.second[i]};
    for (std::size_t pos = occ.second[i] + 1; pos < g.size(); ++pos) {
      if (g[pos] < i) squares.push_back(pos);
    }
    if (squares.size() == 1) continue;
    const int carried = g[squares.front()];
    for (std::size_t t = 0; t + 1 < squares.size(); ++t) g[squares[t]] = g[squares[t + 1]];
    g[squares.back()] = carried;
  }
  return g;
}

TrapezoidalWord trap_encode(const MultisetPermutation& m, Flavor flavor) {
  const auto occ = require_occurrences(m);
  const bool ok = flavor == Flavor::stirling ? stirling_property(m, occ) : gessel_property(m, occ);
  if (!ok) {
    throw DomainError(flavor == Flavor::stirling ? "trap_encode: not a Stirling permutation"
                                                 : "trap_encode: not a Gessel permutation");
  }
  const std::size_t n = m.size() / 2;
  TrapezoidalWord w(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    int count = 0;
    for (std::size_t pos = 0; pos <= occ.first[i]; ++pos) count += m[pos] <= static_cast<int>(i);
    w[i - 1] = count;
  }
  return w;
}

MultisetPermutation trap_decode(const TrapezoidalWord& w, Flavor flavor) {
  const std::size_t n = w.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (w[i - 1] < 1 || w[i - 1] > static_cast<int>(2 * i - 1)) {
      throw DomainError("invalid word at index " + std::to_string(i));
    }
  }
  MultisetPermutation squares(2 * n, 0);
  std::vector<std::size_t> free_slots;
  for (std::size_t i = n; i >= 1; --i) {
    free_slots.clear();
    for (std::size_t pos = 0; pos < squares.size(); ++pos) {
      if (squares[pos] == 0) free_slots.push_back(pos);
    }
    const auto first = static_cast<std::size_t>(w[i - 1] - 1);
    const std::size_t second = flavor == Flavor::stirling ? first + 1 : free_slots.size() - 1;
    squares[free_slots[first]] = static_cast<int>(i);
    squares[free_slots[second]] = static_cast<int>(i);
  }
  return squares;
}

}  // namespace vlab
