// Bounded model search. The lattice reduct is fixed first (one bounded
// lattice of size 1, 2 and 3, two of size 4); ' ranges over involutions
// satisfying E2-E4 and DM, and -> over tables with a diagonal of 1s whose
// entries satisfy x /\ (x -> y) = x /\ y. Survivors must pass every axiom.

#include <algorithm>
#include <numeric>

#include "runo/structure.hpp"

namespace runo {

namespace {

struct Skeleton {
  std::size_t n;
  std::vector<Element> join, meet;
};

// Element 0 is the bottom and 1 the top, as in the builtins.
Skeleton from_order(std::size_t n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<char> le(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    le[i * n + i] = 1;
    le[0 * n + i] = 1;
    le[i * n + 1] = 1;
  }
  for (auto [a, b] : covers) le[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)  // transitive closure
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i * n + k] && le[k * n + j]) le[i * n + j] = 1;

  Skeleton s{n, std::vector<Element>(n * n), std::vector<Element>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      // least upper bound: the upper bound below every other upper bound
      for (std::size_t u = 0; u < n; ++u) {
        if (!le[x * n + u] || !le[y * n + u]) continue;
        bool least = true;
        for (std::size_t v = 0; v < n && least; ++v)
          if (le[x * n + v] && le[y * n + v] && !le[u * n + v]) least = false;
        if (least) s.join[x * n + y] = static_cast<Element>(u);
      }
      for (std::size_t l = 0; l < n; ++l) {
        if (!le[l * n + x] || !le[l * n + y]) continue;
        bool greatest = true;
        for (std::size_t v = 0; v < n && greatest; ++v)
          if (le[v * n + x] && le[v * n + y] && !le[v * n + l]) greatest = false;
        if (greatest) s.meet[x * n + y] = static_cast<Element>(l);
      }
    }
  return s;
}

std::vector<Skeleton> skeletons(std::size_t n) {
  switch (n) {
    case 2: return {from_order(2, {})};
    case 3: return {from_order(3, {})};                      // 0 < 2 < 1
    case 4: return {from_order(4, {{2, 3}}),                 // 0 < 2 < 3 < 1
                    from_order(4, {})};                      // atoms 2, 3
    default: return {};
  }
}

std::vector<std::vector<Element>> negations(const Skeleton& s) {
  const std::size_t n = s.n;
  std::vector<std::vector<Element>> out;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (p[0] != 1 || p[1] != 0) continue;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (p[p[x]] != x) ok = false;
      for (std::size_t y = 0; y < n && ok; ++y)
        if (p[s.meet[x * n + y]] != s.join[p[x] * n + p[y]]) ok = false;
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct Space {
  const Skeleton* skel;
  std::vector<Element> neg;
  std::vector<std::vector<Element>> choices;  // per cell of the -> table
  std::uint64_t count = 1;
};

Space make_space(const Skeleton& s, std::vector<Element> neg) {
  const std::size_t n = s.n;
  Space sp{&s, std::move(neg), std::vector<std::vector<Element>>(n * n), 1};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto& c = sp.choices[x * n + y];
      if (x == y) {
        c.push_back(1);
      } else {
        for (std::size_t z = 0; z < n; ++z)
          if (s.meet[x * n + z] == s.meet[x * n + y]) c.push_back(static_cast<Element>(z));
      }
      sp.count *= c.size();
    }
  return sp;
}

std::optional<FiniteAlgebra> candidate(const Space& sp, std::uint64_t index) {
  const std::size_t n = sp.skel->n;
  std::vector<Element> imp(n * n);
  for (std::size_t cell = n * n; cell-- > 0;) {
    const auto& c = sp.choices[cell];
    imp[cell] = c[index % c.size()];
    index /= c.size();
  }
  FiniteAlgebra a = from_trusted_tables("candidate", {}, sp.skel->join, sp.skel->meet,
                                        std::move(imp), sp.neg, 0, 1);
  if (!axiom_profile(a).all_hold()) return std::nullopt;
  return a;
}

template <bool Parallel>
std::vector<FiniteAlgebra> enumerate(int max_size) {
  if (max_size < 1 || max_size > 4) throw std::invalid_argument("max_size must be in 1..4");
  std::vector<FiniteAlgebra> found{trivial_algebra()};

  for (std::size_t n = 2; n <= static_cast<std::size_t>(max_size); ++n) {
    const auto skels = skeletons(n);
    std::vector<FiniteAlgebra> raw;
    for (const auto& s : skels) {
      for (auto& neg : negations(s)) {
        const Space sp = make_space(s, std::move(neg));
        const auto total = static_cast<std::int64_t>(sp.count);
        std::vector<std::optional<FiniteAlgebra>> hits(sp.count);
#pragma omp parallel for schedule(dynamic, 64) if (Parallel)
        for (std::int64_t i = 0; i < total; ++i)
          hits[static_cast<std::size_t>(i)] = candidate(sp, static_cast<std::uint64_t>(i));
        for (auto& h : hits)
          if (h) raw.push_back(std::move(*h));
      }
    }
    // one representative per iso class, first in search order
    std::size_t unnamed = 0;
    std::vector<FiniteAlgebra> reps;
    for (auto& a : raw) {
      bool fresh = true;
      for (const auto& r : reps)
        if (iso(a, r)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(std::move(a));
    }
    for (auto& r : reps) {
      const int b = builtin_index(r);
      found.push_back(r.renamed(b ? "A" + std::to_string(b)
                                  : "M" + std::to_string(n) + "." + std::to_string(++unnamed)));
    }
  }
  return found;
}

}  // namespace

std::vector<FiniteAlgebra> enumerate_runo1(int max_size) { return enumerate<true>(max_size); }
std::vector<FiniteAlgebra> enumerate_runo1_serial(int max_size) {
  return enumerate<false>(max_size);
}

}  // namespace runo
