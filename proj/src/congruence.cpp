#include <algorithm>
#include <numeric>
#include <set>

#include "runo/structure.hpp"

namespace runo {

namespace {

struct UnionFind {
  std::vector<Element> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Element find(Element x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  Partition partition() {
    std::vector<Element> roots(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) roots[i] = find(static_cast<Element>(i));
    return canonical(roots);
  }
};

}  // namespace

Partition identity_partition(std::size_t n) {
  Partition p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Partition all_partition(std::size_t n) { return Partition(n, 0); }

Partition canonical(std::span<const Element> b) {
  std::vector<int> relabel(b.empty() ? 0 : *std::max_element(b.begin(), b.end()) + 1, -1);
  Partition out(b.size());
  Element next = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (relabel[b[i]] < 0) relabel[b[i]] = next++;
    out[i] = static_cast<Element>(relabel[b[i]]);
  }
  return out;
}

std::size_t block_count(const Partition& p) {
  return p.empty() ? 0 : static_cast<std::size_t>(*std::max_element(p.begin(), p.end())) + 1;
}

bool refines(const Partition& finer, const Partition& coarser) {
  // finer ≤ coarser iff each finer block sits inside one coarser block
  std::vector<int> image(block_count(finer), -1);
  for (std::size_t i = 0; i < finer.size(); ++i) {
    int& slot = image[finer[i]];
    if (slot < 0) slot = coarser[i];
    else if (slot != coarser[i]) return false;
  }
  return true;
}

Partition partition_meet(const Partition& p, const Partition& q) {
  const std::size_t qb = block_count(q);
  std::vector<std::uint32_t> key(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) key[i] = p[i] * static_cast<std::uint32_t>(qb) + q[i];
  Partition out(p.size());
  std::vector<int> relabel(block_count(p) * qb, -1);
  Element next = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (relabel[key[i]] < 0) relabel[key[i]] = next++;
    out[i] = static_cast<Element>(relabel[key[i]]);
  }
  return out;
}

Partition partition_join(const Partition& p, const Partition& q) {
  UnionFind uf(p.size());
  std::vector<int> first_p(block_count(p), -1), first_q(block_count(q), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto e = static_cast<Element>(i);
    if (first_p[p[i]] < 0) first_p[p[i]] = e;
    else uf.unite(static_cast<Element>(first_p[p[i]]), e);
    if (first_q[q[i]] < 0) first_q[q[i]] = e;
    else uf.unite(static_cast<Element>(first_q[q[i]]), e);
  }
  return uf.partition();
}

std::vector<std::vector<Element>> blocks(const Partition& p) {
  std::vector<std::vector<Element>> out(block_count(p));
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]].push_back(static_cast<Element>(i));
  return out;
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  const std::size_t n = a.size();
  if (p.size() != n) return false;
  std::vector<Element> rep(block_count(p), 0);
  for (std::size_t i = n; i-- > 0;) rep[p[i]] = static_cast<Element>(i);
  auto r = [&](Element x) { return rep[p[x]]; };

  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Element>(i);
    if (p[a.neg(x)] != p[a.neg(r(x))]) return false;
  }
  // f(x,y) ~ f(r(x),y) and f(x,y) ~ f(x,r(y)) for all x, y is enough by transitivity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto x = static_cast<Element>(i), y = static_cast<Element>(j);
      for (auto op : {&FiniteAlgebra::join, &FiniteAlgebra::meet, &FiniteAlgebra::imp}) {
        const auto v = p[(a.*op)(x, y)];
        if (v != p[(a.*op)(r(x), y)] || v != p[(a.*op)(x, r(y))]) return false;
      }
    }
  return true;
}

Partition principal_congruence(const FiniteAlgebra& a, Element x, Element y) {
  const std::size_t n = a.size();
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> work{{x, y}};
  // Only pairs that merge two classes need their translations pushed: the
  // merged pairs generate the same equivalence as everything pushed so far.
  while (!work.empty()) {
    const auto [u, v] = work.back();
    work.pop_back();
    if (!uf.unite(u, v)) continue;
    work.emplace_back(a.neg(u), a.neg(v));
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<Element>(i);
      work.emplace_back(a.join(u, c), a.join(v, c));
      work.emplace_back(a.meet(u, c), a.meet(v, c));
      work.emplace_back(a.imp(u, c), a.imp(v, c));
      work.emplace_back(a.imp(c, u), a.imp(c, v));
    }
  }
  return uf.partition();
}

std::size_t CongruenceLattice::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < partitions.size(); ++i)
    if (partitions[i] == p) return i;
  throw std::out_of_range("partition is not in the congruence lattice");
}

std::size_t CongruenceLattice::meet(std::size_t i, std::size_t j) const {
  return index_of(partition_meet(partitions[i], partitions[j]));
}

std::size_t CongruenceLattice::join(std::size_t i, std::size_t j) const {
  return index_of(partition_join(partitions[i], partitions[j]));
}

std::vector<std::size_t> CongruenceLattice::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == bottom()) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < size() && minimal; ++j)
      if (j != i && j != bottom() && leq(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> CongruenceLattice::coatoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == top()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < size() && maximal; ++j)
      if (j != i && j != top() && leq(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

CongruenceLattice congruences(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::set<Partition> principal;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      principal.insert(principal_congruence(a, static_cast<Element>(x), static_cast<Element>(y)));

  // every congruence is a join of principal ones
  std::set<Partition> all{identity_partition(n)};
  for (const auto& p : principal) {
    std::vector<Partition> add;
    for (const auto& q : all) add.push_back(partition_join(p, q));
    all.insert(add.begin(), add.end());
  }

  CongruenceLattice lat;
  lat.partitions.assign(all.begin(), all.end());
  std::stable_sort(lat.partitions.begin(), lat.partitions.end(),
                   [](const Partition& p, const Partition& q) {
                     return block_count(p) > block_count(q);
                   });
  return lat;
}

}  // namespace runo
