#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include "semiring.hpp"

namespace semiring_lab {

/// Add table then mul table, row-major; the key isomorphism classes are
/// compared and ordered by.
using TableEncoding = std::vector<std::uint8_t>;

namespace detail {

/// Calls f(perm) for every permutation of 0..n-1 fixing 0 and 1.
template <typename F>
void for_each_fixing_permutation(std::size_t n, F&& f) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    f(perm);
  } while (n > 3 && std::next_permutation(perm.begin() + 2, perm.end()));
}

/// Encoding of the tables relabelled by perm (perm[old] = new); `cells`
/// lists the flat tables to encode, each of size n*n.
inline void encode_relabelled(const std::vector<const std::vector<int>*>& cells, std::size_t n,
                              const std::vector<Element>& perm, std::vector<Element>& inverse, TableEncoding& out) {
  for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = static_cast<Element>(i);
  out.clear();
  for (const auto* t : cells)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.push_back(static_cast<std::uint8_t>(perm[(*t)[inverse[i] * n + inverse[j]]]));
}

inline TableEncoding minimal_image(const std::vector<const std::vector<int>*>& cells, std::size_t n) {
  TableEncoding best, cur;
  std::vector<Element> inverse(n);
  for_each_fixing_permutation(n, [&](const std::vector<Element>& perm) {
    encode_relabelled(cells, n, perm, inverse, cur);
    if (best.empty() || cur < best) best = cur;
  });
  return best;
}

inline std::vector<int> flat(const FiniteSemiring& s, bool additive) {
  const std::size_t n = s.order();
  std::vector<int> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = additive ? s.add(static_cast<Element>(i), static_cast<Element>(j))
                              : s.mul(static_cast<Element>(i), static_cast<Element>(j));
  return t;
}

inline FiniteSemiring decode(const TableEncoding& e, std::size_t n) {
  Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add[i][j] = e[i * n + j];
      mul[i][j] = e[n * n + i * n + j];
    }
  return FiniteSemiring::validate(add, mul);
}

}  // namespace detail

/// Lexicographically least table encoding over all relabellings fixing 0 and 1.
inline TableEncoding canonical_encoding(const FiniteSemiring& s) {
  auto add = detail::flat(s, true), mul = detail::flat(s, false);
  return detail::minimal_image({&add, &mul}, s.order());
}

inline FiniteSemiring canonical_form(const FiniteSemiring& s) { return detail::decode(canonical_encoding(s), s.order()); }

inline bool are_isomorphic(const FiniteSemiring& a, const FiniteSemiring& b) {
  return a.order() == b.order() && canonical_encoding(a) == canonical_encoding(b);
}

/// A permutation (perm[old] = new) that carries `s` onto its canonical form.
inline std::vector<Element> canonical_labelling(const FiniteSemiring& s) {
  auto add = detail::flat(s, true), mul = detail::flat(s, false);
  const auto target = canonical_encoding(s);
  std::vector<Element> found, inverse(s.order());
  TableEncoding cur;
  detail::for_each_fixing_permutation(s.order(), [&](const std::vector<Element>& perm) {
    if (!found.empty()) return;
    detail::encode_relabelled({&add, &mul}, s.order(), perm, inverse, cur);
    if (cur == target) found = perm;
  });
  return found;
}

namespace detail {

/// Backtracking over partially filled tables; -1 marks an open cell.
class SemiringSearch {
 public:
  explicit SemiringSearch(std::size_t n) : n_(n) {}

  /// Complete commutative monoid tables with identity 0 that are
  /// lexicographically least among their relabellings fixing 0 and 1.
  std::vector<std::vector<int>> additive_tables() {
    std::vector<int> add(n_ * n_, -1);
    for (std::size_t x = 0; x < n_; ++x) add[x] = add[x * n_] = static_cast<int>(x);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) cells.emplace_back(i, j);
    std::vector<std::vector<int>> out;
    fill(add, cells, 0, [&](const std::vector<int>&) { return associative_so_far(add); },
         [&](const std::vector<int>& t) {
           if (minimal_image({&t}, n_) == encode(t)) out.push_back(t);
         });
    return out;
  }

  /// Every multiplication compatible with `add`, as table encodings.
  void multiplications(const std::vector<int>& add, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> mul(n_ * n_, -1);
    for (std::size_t x = 0; x < n_; ++x) {
      mul[x] = mul[x * n_] = 0;
      mul[n_ + x] = mul[x * n_ + 1] = static_cast<int>(x);
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 2; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) cells.emplace_back(i, j);
    fill(mul, cells, 0, [&](const std::vector<int>& m) { return associative_so_far(m) && distributive_so_far(add, m); },
         emit);
  }

 private:
  template <typename Ok, typename Emit>
  void fill(std::vector<int>& t, const std::vector<std::pair<std::size_t, std::size_t>>& cells, std::size_t k, Ok&& ok,
            Emit&& emit) {
    if (k == cells.size()) {
      emit(t);
      return;
    }
    auto [i, j] = cells[k];
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      t[i * n_ + j] = t[j * n_ + i] = v;
      if (ok(t)) fill(t, cells, k + 1, ok, emit);
    }
    t[i * n_ + j] = t[j * n_ + i] = -1;
  }

  TableEncoding encode(const std::vector<int>& t) const { return TableEncoding(t.begin(), t.end()); }

  int at(const std::vector<int>& t, int a, int b) const {
    return (a < 0 || b < 0) ? -1 : t[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
  }

  bool associative_so_far(const std::vector<int>& t) const {
    const int n = static_cast<int>(n_);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = at(t, x, y);
        if (xy < 0) continue;
        for (int z = 0; z < n; ++z) {
          const int l = at(t, xy, z);
          const int r = at(t, x, at(t, y, z));
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  bool distributive_so_far(const std::vector<int>& add, const std::vector<int>& mul) const {
    const int n = static_cast<int>(n_);
    for (int x = 2; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = at(mul, x, y);
        if (xy < 0) continue;
        for (int z = 0; z < n; ++z) {
          const int xz = at(mul, x, z);
          const int l = at(mul, x, at(add, y, z));
          if (xz >= 0 && l >= 0 && l != at(add, xy, xz)) return false;
        }
      }
    return true;
  }

  std::size_t n_;
};

inline std::vector<FiniteSemiring> decode_all(const std::set<TableEncoding>& encodings, std::size_t n) {
  std::vector<FiniteSemiring> out;
  out.reserve(encodings.size());
  for (const auto& e : encodings) out.push_back(decode(e, n));
  return out;
}

}  // namespace detail

/// Orders above this need `allow_large`.
inline constexpr std::size_t enumeration_soft_cap = 6;

/// One representative per isomorphism class of commutative semirings with
/// identity of order n, in canonical form, sorted by canonical encoding.
inline std::vector<FiniteSemiring> enumerate_semirings(std::size_t n, bool allow_large = false,
                                                       unsigned threads = std::thread::hardware_concurrency()) {
  if (n < 2) return {};
  if (n > enumeration_soft_cap && !allow_large)
    throw OrderTooLarge("order " + std::to_string(n) + " exceeds the soft cap of " + std::to_string(enumeration_soft_cap));
  if (n > 15) throw OrderTooLarge("table encodings are limited to order 15");
  detail::SemiringSearch search(n);
  const auto additive = search.additive_tables();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(additive.size())));

  // split the search tree at the addition table; each worker owns a stride
  auto work = [&](unsigned offset) {
    std::set<TableEncoding> found;
    detail::SemiringSearch local(n);
    for (std::size_t k = offset; k < additive.size(); k += threads) {
      local.multiplications(additive[k], [&](const std::vector<int>& mul) {
        found.insert(detail::minimal_image({&additive[k], &mul}, n));
      });
    }
    return found;
  };
  std::vector<std::future<std::set<TableEncoding>>> parts;
  for (unsigned t = 0; t < threads; ++t) parts.push_back(std::async(std::launch::async, work, t));
  std::set<TableEncoding> all;
  for (auto& p : parts) all.merge(p.get());
  return detail::decode_all(all, n);
}

/// Reference enumeration: tries every table whose identity rows are pinned,
/// without assuming commutativity, and keeps what validates. Only for n <= 3.
inline std::vector<FiniteSemiring> enumerate_semirings_by_filter(std::size_t n) {
  if (n < 2) return {};
  if (n > 3) throw OrderTooLarge("filter enumeration is limited to order 3");
  std::vector<std::pair<std::size_t, std::size_t>> add_cells, mul_cells;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) add_cells.emplace_back(i, j);
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 2; j < n; ++j) mul_cells.emplace_back(i, j);

  Table add(n, std::vector<int>(n, 0)), mul(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    add[0][x] = add[x][0] = static_cast<int>(x);
    mul[1][x] = mul[x][1] = static_cast<int>(x);
  }
  auto odometer = [n](Table& t, const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
    for (auto [i, j] : cells) {
      if (++t[i][j] < static_cast<int>(n)) return true;
      t[i][j] = 0;
    }
    return false;
  };
  std::set<TableEncoding> all;
  do {
    for (auto [i, j] : mul_cells) mul[i][j] = 0;
    do {
      if (!FiniteSemiring::check_axioms(add, mul)) all.insert(canonical_encoding(FiniteSemiring::validate(add, mul)));
    } while (odometer(mul, mul_cells));
  } while (odometer(add, add_cells));
  return detail::decode_all(all, n);
}

}  // namespace semiring_lab
