#include "runo/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "runo/sweep.hpp"

namespace runo {

NotALattice::NotALattice(std::string law, std::vector<Element> witness)
    : AlgebraError("not a lattice: " + law + " fails"), law_(std::move(law)),
      witness_(std::move(witness)) {}

std::optional<Element> FiniteAlgebra::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Element>(i);
  }
  return std::nullopt;
}

Element FiniteAlgebra::element(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw std::out_of_range("no element labelled '" + std::string(label) + "' in " + name_);
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

RawTables FiniteAlgebra::raw() const {
  RawTables r;
  r.name = name_;
  r.labels = labels_;
  auto rows = [this](const std::vector<Element>& flat) {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) out[x][y] = flat[x * n_ + y];
    return out;
  };
  r.join = rows(join_);
  r.meet = rows(meet_);
  r.imp = rows(imp_);
  r.neg.assign(neg_.begin(), neg_.end());
  r.zero = zero_;
  r.one = one_;
  return r;
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& o) const noexcept {
  return n_ == o.n_ && zero_ == o.zero_ && one_ == o.one_ && join_ == o.join_ &&
         meet_ == o.meet_ && imp_ == o.imp_ && neg_ == o.neg_;
}

namespace {

void check_lattice(std::size_t n, const std::vector<Element>& join,
                   const std::vector<Element>& meet) {
  auto J = [&](std::size_t x, std::size_t y) { return join[x * n + y]; };
  auto M = [&](std::size_t x, std::size_t y) { return meet[x * n + y]; };
  auto e = [](std::size_t x) { return static_cast<Element>(x); };

  for (std::size_t x = 0; x < n; ++x) {
    if (J(x, x) != x) throw NotALattice("join idempotence", {e(x)});
    if (M(x, x) != x) throw NotALattice("meet idempotence", {e(x)});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (J(x, y) != J(y, x)) throw NotALattice("join commutativity", {e(x), e(y)});
      if (M(x, y) != M(y, x)) throw NotALattice("meet commutativity", {e(x), e(y)});
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (J(x, M(x, y)) != x) throw NotALattice("absorption x \\/ (x /\\ y) = x", {e(x), e(y)});
      if (M(x, J(x, y)) != x) throw NotALattice("absorption x /\\ (x \\/ y) = x", {e(x), e(y)});
    }
  auto bad = sweep::first_failure(n, 3, [&](std::span<const Element> t) {
    return J(J(t[0], t[1]), t[2]) == J(t[0], J(t[1], t[2])) &&
           M(M(t[0], t[1]), t[2]) == M(t[0], M(t[1], t[2]));
  });
  if (bad) throw NotALattice("associativity", *bad);
}

}  // namespace

FiniteAlgebra detail_assemble(std::string name, std::vector<std::string> labels,
                              std::vector<Element> join, std::vector<Element> meet,
                              std::vector<Element> imp, std::vector<Element> neg, Element zero,
                              Element one, bool check_laws) {
  const std::size_t n = neg.size();
  if (n == 0) throw ShapeError("empty carrier");
  if (n > kMaxCarrier) throw ShapeError("carrier too large");
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw ShapeError("labels: expected " + std::to_string(n) + " entries");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n)
    throw ShapeError("labels are not distinct");
  for (const auto* t : {&join, &meet, &imp}) {
    if (t->size() != n * n) throw ShapeError("binary table is not " + std::to_string(n) + "x" +
                                             std::to_string(n));
  }
  auto in_range = [n](Element v) { return static_cast<std::size_t>(v) < n; };
  for (const auto* t : {&join, &meet, &imp, &neg}) {
    if (!std::all_of(t->begin(), t->end(), in_range)) throw ShapeError("table entry out of range");
  }
  if (!in_range(zero) || !in_range(one)) throw ShapeError("zero/one out of range");

  if (check_laws) check_lattice(n, join, meet);

  FiniteAlgebra a;
  a.name_ = std::move(name);
  a.n_ = n;
  a.labels_ = std::move(labels);
  a.join_ = std::move(join);
  a.meet_ = std::move(meet);
  a.imp_ = std::move(imp);
  a.neg_ = std::move(neg);
  a.zero_ = zero;
  a.one_ = one;
  a.order_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) a.order_[x * n + y] = a.meet_[x * n + y] == x ? 1 : 0;

  for (std::size_t x = 0; x < n; ++x) {
    if (!a.leq(zero, static_cast<Element>(x)))
      throw BoundsError("zero is not below " + a.labels_[x]);
    if (!a.leq(static_cast<Element>(x), one))
      throw BoundsError("one is not above " + a.labels_[x]);
  }
  return a;
}

FiniteAlgebra from_flat_tables(std::string name, std::vector<std::string> labels,
                               std::vector<Element> join, std::vector<Element> meet,
                               std::vector<Element> imp, std::vector<Element> neg, Element zero,
                               Element one) {
  return detail_assemble(std::move(name), std::move(labels), std::move(join), std::move(meet),
                         std::move(imp), std::move(neg), zero, one, true);
}

FiniteAlgebra from_trusted_tables(std::string name, std::vector<std::string> labels,
                                  std::vector<Element> join, std::vector<Element> meet,
                                  std::vector<Element> imp, std::vector<Element> neg, Element zero,
                                  Element one) {
  return detail_assemble(std::move(name), std::move(labels), std::move(join), std::move(meet),
                         std::move(imp), std::move(neg), zero, one, false);
}

FiniteAlgebra validate(const RawTables& raw) {
  const std::size_t n = raw.neg.size();
  auto flatten = [n](const std::vector<std::vector<int>>& rows, const char* what) {
    if (rows.size() != n) throw ShapeError(std::string(what) + ": expected " + std::to_string(n) + " rows");
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw ShapeError(std::string(what) + ": ragged row");
      for (int v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw ShapeError(std::string(what) + ": entry out of range");
        flat.push_back(static_cast<Element>(v));
      }
    }
    return flat;
  };
  if (n == 0) throw ShapeError("empty carrier");
  if (n > kMaxCarrier) throw ShapeError("carrier too large");
  std::vector<Element> neg;
  for (int v : raw.neg) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ShapeError("neg: entry out of range");
    neg.push_back(static_cast<Element>(v));
  }
  auto constant = [n](int v, const char* what) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ShapeError(std::string(what) + " out of range");
    return static_cast<Element>(v);
  };
  return from_flat_tables(raw.name, raw.labels, flatten(raw.join, "join"),
                          flatten(raw.meet, "meet"), flatten(raw.imp, "imp"), std::move(neg),
                          constant(raw.zero, "zero"), constant(raw.one, "one"));
}

FiniteAlgebra trivial_algebra() {
  return from_flat_tables("trivial", {"0"}, {0}, {0}, {0}, {0}, 0, 0);
}

std::string_view axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::SH1: return "SH1";
    case Axiom::SH2: return "SH2";
    case Axiom::SH3: return "SH3";
    case Axiom::SH4: return "SH4";
    case Axiom::E2: return "E2";
    case Axiom::E3: return "E3";
    case Axiom::E4: return "E4";
    case Axiom::DM: return "DM";
    case Axiom::Unorthodox: return "UNORTHODOX";
    case Axiom::Regular: return "REGULAR";
    case Axiom::Level1: return "LEVEL1";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name) noexcept {
  for (Axiom a : kAllAxioms) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

bool AxiomReport::all_hold() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const auto& kv) { return kv.second.holds; });
}

AxiomReport axiom_profile(const FiniteAlgebra& A) {
  using T = std::span<const Element>;
  const std::size_t n = A.size();
  const Element zero = A.zero(), one = A.one();
  AxiomReport report;

  auto record = [&](Axiom ax, std::size_t arity, auto&& ok) {
    auto bad = sweep::first_failure(n, arity, ok);
    report.results[ax] = AxiomResult{!bad.has_value(), std::move(bad)};
  };

  record(Axiom::SH1, 3, [&](T t) {
    const Element x = t[0], y = t[1], z = t[2];
    return A.join(x, x) == x && A.meet(x, x) == x && A.join(x, y) == A.join(y, x) &&
           A.meet(x, y) == A.meet(y, x) && A.join(x, A.meet(x, y)) == x &&
           A.meet(x, A.join(x, y)) == x &&
           A.join(A.join(x, y), z) == A.join(x, A.join(y, z)) &&
           A.meet(A.meet(x, y), z) == A.meet(x, A.meet(y, z)) && A.leq(zero, x) && A.leq(x, one);
  });
  record(Axiom::SH2, 2, [&](T t) {
    return A.meet(t[0], A.imp(t[0], t[1])) == A.meet(t[0], t[1]);
  });
  record(Axiom::SH3, 3, [&](T t) {
    const Element x = t[0], y = t[1], z = t[2];
    return A.meet(x, A.imp(y, z)) == A.meet(x, A.imp(A.meet(x, y), A.meet(x, z)));
  });
  record(Axiom::SH4, 1, [&](T t) { return A.imp(t[0], t[0]) == one; });
  record(Axiom::E2, 0, [&](T) { return A.neg(zero) == one; });
  record(Axiom::E3, 0, [&](T) { return A.neg(one) == zero; });
  record(Axiom::E4, 2, [&](T t) {
    return A.neg(A.meet(t[0], t[1])) == A.join(A.neg(t[0]), A.neg(t[1]));
  });
  record(Axiom::DM, 1, [&](T t) { return A.neg(A.neg(t[0])) == t[0]; });
  record(Axiom::Unorthodox, 0, [&](T) {
    const Element a = A.imp(zero, one);
    return A.neg(a) == a;
  });
  // x /\ x+ <= y \/ y*, written as an equation
  record(Axiom::Regular, 2, [&](T t) {
    const Element lhs = A.meet(t[0], A.plus(t[0]));
    return A.meet(lhs, A.join(t[1], A.star(t[1]))) == lhs;
  });
  record(Axiom::Level1, 1, [&](T t) {
    const Element d = A.meet(t[0], A.star(A.neg(t[0])));
    return d == A.star(A.neg(d));
  });
  return report;
}

std::size_t height(const FiniteAlgebra& A) {
  const std::size_t n = A.size();
  std::vector<std::size_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (A.leq(static_cast<Element>(y), static_cast<Element>(x))) ++below[x];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });

  std::vector<std::size_t> h(n, 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Element>(order[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const auto y = static_cast<Element>(order[j]);
      if (y != x && A.leq(y, x)) h[x] = std::max(h[x], h[y] + 1);
    }
    best = std::max(best, h[x]);
  }
  return best;
}

}  // namespace runo
