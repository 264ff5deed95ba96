// Binary clone of a small algebra: every operation f(x, y) reachable from the
// projections and the constants 0, 1 by applying the basic operations
// pointwise. An operation is a base-n number with n^2 digits, digit x*n + y
// being f(x, y). Codes are split into n chunks (one per row x) so a pointwise
// binary operation is n table lookups instead of n^2 digit operations.

#include <atomic>
#include <cstdint>

#include "runo/structure.hpp"

namespace runo {

namespace {

using Code = std::uint32_t;

struct CloneTables {
  std::size_t n = 0;
  Code chunk_base = 1;  // n^n
  Code total = 1;       // n^(n^2)
  std::vector<Code> join, meet, imp;  // [c1 * chunk_base + c2]
  std::vector<Code> neg;              // [c]

  explicit CloneTables(const FiniteAlgebra& a) : n(a.size()) {
    for (std::size_t i = 0; i < n; ++i) chunk_base *= static_cast<Code>(n);
    for (std::size_t i = 0; i < n; ++i) total *= chunk_base;
    const std::size_t B = chunk_base;
    join.resize(B * B);
    meet.resize(B * B);
    imp.resize(B * B);
    neg.resize(B);
    std::vector<Element> d1(n), d2(n);
    auto digits = [&](Code c, std::vector<Element>& d) {
      for (std::size_t k = 0; k < n; ++k) {
        d[k] = static_cast<Element>(c % n);
        c /= static_cast<Code>(n);
      }
    };
    auto pack = [&](auto&& digit) {
      Code c = 0;
      for (std::size_t k = n; k-- > 0;) c = c * static_cast<Code>(n) + digit(k);
      return c;
    };
    for (Code c1 = 0; c1 < B; ++c1) {
      digits(c1, d1);
      neg[c1] = pack([&](std::size_t k) { return a.neg(d1[k]); });
      for (Code c2 = 0; c2 < B; ++c2) {
        digits(c2, d2);
        join[c1 * B + c2] = pack([&](std::size_t k) { return a.join(d1[k], d2[k]); });
        meet[c1 * B + c2] = pack([&](std::size_t k) { return a.meet(d1[k], d2[k]); });
        imp[c1 * B + c2] = pack([&](std::size_t k) { return a.imp(d1[k], d2[k]); });
      }
    }
  }

  Code binary(const std::vector<Code>& t, Code f, Code g) const {
    Code out = 0, scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
      out += t[(f % chunk_base) * chunk_base + (g % chunk_base)] * scale;
      f /= chunk_base;
      g /= chunk_base;
      scale *= chunk_base;
    }
    return out;
  }

  Code unary(Code f) const {
    Code out = 0, scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
      out += neg[f % chunk_base] * scale;
      f /= chunk_base;
      scale *= chunk_base;
    }
    return out;
  }

  Code from_function(auto&& fn) const {
    Code c = 0;
    for (std::size_t i = n * n; i-- > 0;) c = c * static_cast<Code>(n) + fn(i / n, i % n);
    return c;
  }

  std::vector<Code> generators(const FiniteAlgebra& a) const {
    return {from_function([](std::size_t x, std::size_t) { return static_cast<Code>(x); }),
            from_function([](std::size_t, std::size_t y) { return static_cast<Code>(y); }),
            from_function([&](std::size_t, std::size_t) { return static_cast<Code>(a.zero()); }),
            from_function([&](std::size_t, std::size_t) { return static_cast<Code>(a.one()); })};
  }
};

void check_size(const FiniteAlgebra& a) {
  if (a.size() > 3) throw std::invalid_argument("clone closure is limited to |A| <= 3");
}

}  // namespace

std::size_t binary_clone_size_serial(const FiniteAlgebra& a) {
  check_size(a);
  const CloneTables T(a);
  std::vector<char> seen(T.total, 0);
  std::vector<Code> all, frontier;
  auto add = [&](Code c, std::vector<Code>& out) {
    if (!seen[c]) {
      seen[c] = 1;
      out.push_back(c);
    }
  };
  for (Code g : T.generators(a)) add(g, frontier);
  all = frontier;
  while (!frontier.empty() && all.size() < T.total) {
    std::vector<Code> next;
    // semi-naive: each new pair has at least one member from the last round
    for (Code f : frontier) {
      add(T.unary(f), next);
      for (Code g : all) {
        for (const auto* t : {&T.join, &T.meet, &T.imp}) {
          add(T.binary(*t, f, g), next);
          add(T.binary(*t, g, f), next);
        }
      }
      if (all.size() + next.size() == T.total) break;
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier.swap(next);
  }
  return all.size();
}

std::size_t binary_clone_size(const FiniteAlgebra& a) {
  check_size(a);
  const CloneTables T(a);
  std::vector<std::atomic<std::uint8_t>> seen(T.total);
  for (auto& s : seen) s.store(0, std::memory_order_relaxed);
  std::vector<Code> all, frontier;
  for (Code g : T.generators(a))
    if (!seen[g].exchange(1)) frontier.push_back(g);
  all = frontier;
  std::atomic<std::size_t> count{all.size()};

  while (!frontier.empty() && count.load() < T.total) {
    std::vector<Code> next;
    const auto m = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
    {
      std::vector<Code> local;
      auto add = [&](Code c) {
        if (seen[c].load(std::memory_order_relaxed) == 0 && seen[c].exchange(1) == 0) {
          local.push_back(c);
          count.fetch_add(1, std::memory_order_relaxed);
        }
      };
#pragma omp for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < m; ++i) {
        if (count.load(std::memory_order_relaxed) >= T.total) continue;
        const Code f = frontier[static_cast<std::size_t>(i)];
        add(T.unary(f));
        for (Code g : all) {
          for (const auto* t : {&T.join, &T.meet, &T.imp}) {
            add(T.binary(*t, f, g));
            add(T.binary(*t, g, f));
          }
        }
      }
#pragma omp critical
      next.insert(next.end(), local.begin(), local.end());
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier.swap(next);
  }
  return count.load();
}

}  // namespace runo
