#include "mvw/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mvw {

namespace {

// Checks every associativity triple whose three lookups are already defined.
// Entries are -1 while undefined; row/column 0 is the identity.
bool partially_associative(const std::vector<int>& t, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = t[static_cast<std::size_t>(x) * n + y];
      if (xy < 0) continue;
      for (int z = 0; z < n; ++z) {
        int yz = t[static_cast<std::size_t>(y) * n + z];
        if (yz < 0) continue;
        int left = t[static_cast<std::size_t>(xy) * n + z];
        int right = t[static_cast<std::size_t>(x) * n + yz];
        if (left >= 0 && right >= 0 && left != right) return false;
      }
    }
  }
  return true;
}

// Lexicographically least relabeling of the table over all permutations
// fixing the identity 0. Canonical forms coincide iff the monoids are
// isomorphic (for identity-0 tables).
std::vector<int> canonical_form(const std::vector<int>& t, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> relabeled(static_cast<std::size_t>(n) * n);
  do {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        relabeled[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)]) * n +
                  perm[static_cast<std::size_t>(y)]] =
            perm[static_cast<std::size_t>(t[static_cast<std::size_t>(x) * n + y])];
      }
    }
    if (best.empty() || relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

void fill_cells(std::vector<int>& t, int n,
                const std::vector<std::pair<int, int>>& cells, std::size_t at,
                std::set<std::vector<int>>& canonical) {
  if (at == cells.size()) {
    canonical.insert(canonical_form(t, n));
    return;
  }
  auto [i, j] = cells[at];
  for (int v = 0; v < n; ++v) {
    t[static_cast<std::size_t>(i) * n + j] = v;
    if (partially_associative(t, n)) fill_cells(t, n, cells, at + 1, canonical);
  }
  t[static_cast<std::size_t>(i) * n + j] = -1;
}

}  // namespace

std::vector<FiniteMonoid> enumerate_monoids(int order, int order_cap) {
  if (order < 1) {
    throw Error(ErrorKind::range_error, "order must be positive");
  }
  if (order > order_cap) {
    throw Error(ErrorKind::cap_exceeded,
                "enumeration order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(order_cap));
  }
  int n = order;
  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    t[static_cast<std::size_t>(0) * n + x] = x;
    t[static_cast<std::size_t>(x) * n + 0] = x;
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) cells.emplace_back(i, j);
  }
  std::set<std::vector<int>> canonical;
  fill_cells(t, n, cells, 0, canonical);

  std::vector<FiniteMonoid> out;
  out.reserve(canonical.size());
  for (const auto& table : canonical) {
    out.push_back(FiniteMonoid::from_trusted_table(table, n, 0));
  }
  return out;
}

namespace {

struct ElementInvariant {
  bool idempotent;
  int tail;
  int cycle;
  bool operator==(const ElementInvariant&) const = default;
};

ElementInvariant invariant_of(const FiniteMonoid& m, int x) {
  std::vector<int> first_seen(static_cast<std::size_t>(m.size()), -1);
  int cur = x, exponent = 1;
  while (first_seen[static_cast<std::size_t>(cur)] < 0) {
    first_seen[static_cast<std::size_t>(cur)] = exponent;
    cur = m.mul(cur, x);
    ++exponent;
  }
  int tail = first_seen[static_cast<std::size_t>(cur)];
  return {m.is_idempotent(x), tail, exponent - tail};
}

// Every product triple is checked as soon as all three participants are
// mapped, i.e. at step max(x, y, x*y); a completed map is a homomorphism.
bool products_consistent(const FiniteMonoid& m1, const FiniteMonoid& m2,
                         const std::vector<int>& map, int at) {
  for (int x = 0; x <= at; ++x) {
    for (int y = 0; y <= at; ++y) {
      int xy = m1.mul(x, y);
      if (xy > at) continue;
      if (x < at && y < at && xy < at) continue;  // checked earlier
      if (m2.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]) !=
          map[static_cast<std::size_t>(xy)])
        return false;
    }
  }
  return true;
}

bool extend_isomorphism(const FiniteMonoid& m1, const FiniteMonoid& m2,
                        const std::vector<ElementInvariant>& inv1,
                        const std::vector<ElementInvariant>& inv2,
                        std::vector<int>& map, std::vector<bool>& used, int at) {
  int n = m1.size();
  if (at == n) return true;
  for (int image = 0; image < n; ++image) {
    if (used[static_cast<std::size_t>(image)]) continue;
    if ((at == m1.identity()) != (image == m2.identity())) continue;
    if (!(inv1[static_cast<std::size_t>(at)] == inv2[static_cast<std::size_t>(image)]))
      continue;
    map[static_cast<std::size_t>(at)] = image;
    if (products_consistent(m1, m2, map, at)) {
      used[static_cast<std::size_t>(image)] = true;
      if (extend_isomorphism(m1, m2, inv1, inv2, map, used, at + 1)) return true;
      used[static_cast<std::size_t>(image)] = false;
    }
    map[static_cast<std::size_t>(at)] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const FiniteMonoid& m1,
                                            const FiniteMonoid& m2) {
  if (m1.size() != m2.size()) return std::nullopt;
  int n = m1.size();
  std::vector<ElementInvariant> inv1, inv2;
  inv1.reserve(static_cast<std::size_t>(n));
  inv2.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    inv1.push_back(invariant_of(m1, x));
    inv2.push_back(invariant_of(m2, x));
  }
  {
    auto sorted1 = inv1;
    auto sorted2 = inv2;
    auto key = [](const ElementInvariant& a, const ElementInvariant& b) {
      return std::tie(a.idempotent, a.tail, a.cycle) <
             std::tie(b.idempotent, b.tail, b.cycle);
    };
    std::sort(sorted1.begin(), sorted1.end(), key);
    std::sort(sorted2.begin(), sorted2.end(), key);
    if (!(sorted1 == sorted2)) return std::nullopt;
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  if (!extend_isomorphism(m1, m2, inv1, inv2, map, used, 0)) return std::nullopt;
  return map;
}

namespace {

bool subset_closed(const FiniteMonoid& n, const std::vector<int>& elems) {
  std::vector<bool> member(static_cast<std::size_t>(n.size()), false);
  for (int e : elems) member[static_cast<std::size_t>(e)] = true;
  for (int x : elems) {
    for (int y : elems) {
      if (!member[static_cast<std::size_t>(n.mul(x, y))]) return false;
    }
  }
  return true;
}

// Backtracking over images of the subset elements in ascending order;
// products are checked as soon as all three participants are assigned.
bool search_map(const FiniteMonoid& m, const FiniteMonoid& n,
                const std::vector<int>& elems, std::vector<int>& image,
                std::vector<int>& position_of, std::size_t at) {
  std::size_t k = elems.size();
  if (at == k) {
    std::vector<bool> covered(static_cast<std::size_t>(m.size()), false);
    for (int img : image) covered[static_cast<std::size_t>(img)] = true;
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  }
  int x = elems[at];
  bool forced_identity = (x == n.identity());
  for (int candidate = 0; candidate < m.size(); ++candidate) {
    if (forced_identity && candidate != m.identity()) continue;
    bool ok = true;
    for (std::size_t other = 0; other <= at && ok; ++other) {
      int y = elems[other];
      int y_img = (other == at) ? candidate : image[other];
      int xy = n.mul(x, y);
      int yx = n.mul(y, x);
      int xy_pos = position_of[static_cast<std::size_t>(xy)];
      int yx_pos = position_of[static_cast<std::size_t>(yx)];
      if (xy_pos >= 0 && static_cast<std::size_t>(xy_pos) <= at) {
        int want = (static_cast<std::size_t>(xy_pos) == at) ? candidate
                                                            : image[static_cast<std::size_t>(xy_pos)];
        if (m.mul(candidate, y_img) != want) ok = false;
      }
      if (ok && yx_pos >= 0 && static_cast<std::size_t>(yx_pos) <= at) {
        int want = (static_cast<std::size_t>(yx_pos) == at) ? candidate
                                                            : image[static_cast<std::size_t>(yx_pos)];
        if (m.mul(y_img, candidate) != want) ok = false;
      }
    }
    if (!ok) continue;
    image[at] = candidate;
    if (search_map(m, n, elems, image, position_of, at + 1)) return true;
  }
  image[at] = -1;
  return false;
}

}  // namespace

std::optional<DivisionWitness> divides(const FiniteMonoid& m,
                                       const FiniteMonoid& n,
                                       std::size_t ambient_cap) {
  if (static_cast<std::size_t>(n.size()) > ambient_cap ||
      n.size() >= 25) {
    throw Error(ErrorKind::cap_exceeded,
                "division ambient has " + std::to_string(n.size()) +
                    " elements, cap is " + std::to_string(ambient_cap));
  }
  int nn = n.size();
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t mask = 0; mask < (1u << nn); ++mask) {
    if (mask & (1u << n.identity())) subsets.push_back(mask);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
                     return pa != pb ? pa < pb : a < b;
                   });

  for (std::uint32_t mask : subsets) {
    if (__builtin_popcount(mask) < m.size()) continue;  // no surjection possible
    std::vector<int> elems;
    for (int e = 0; e < nn; ++e) {
      if (mask & (1u << e)) elems.push_back(e);
    }
    if (!subset_closed(n, elems)) continue;
    std::vector<int> position_of(static_cast<std::size_t>(nn), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      position_of[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
    }
    std::vector<int> image(elems.size(), -1);
    if (search_map(m, n, elems, image, position_of, 0)) {
      DivisionWitness witness;
      witness.submonoid = elems;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        witness.hom_map.emplace_back(elems[i], image[i]);
      }
      return witness;
    }
  }
  return std::nullopt;
}

}  // namespace mvw
