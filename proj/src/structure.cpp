#include "runo/structure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "runo/builtin.hpp"
#include "runo/sweep.hpp"

namespace runo {

namespace {

Element el(std::size_t i) { return static_cast<Element>(i); }

}  // namespace

// ---- subalgebras ----------------------------------------------------------------

Subuniverse generated(const FiniteAlgebra& a, std::span<const Element> seeds) {
  std::vector<char> in(a.size(), 0);
  std::vector<Element> list;
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = 1;
      list.push_back(e);
    }
  };
  add(a.zero());
  add(a.one());
  for (auto s : seeds) add(s);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Element x = list[i];
    add(a.neg(x));
    for (std::size_t j = 0; j <= i; ++j) {
      const Element y = list[j];
      add(a.join(x, y));
      add(a.meet(x, y));
      add(a.imp(x, y));
      add(a.imp(y, x));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<Subuniverse> subalgebras(const FiniteAlgebra& a) {
  std::set<Subuniverse> seen;
  std::vector<Subuniverse> queue{generated(a, {})};
  seen.insert(queue.front());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Subuniverse s = queue[q];
    std::vector<char> in(a.size(), 0);
    for (auto e : s) in[e] = 1;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (in[x]) continue;
      Subuniverse seeds = s;
      seeds.push_back(el(x));
      Subuniverse t = generated(a, seeds);
      if (seen.insert(t).second) queue.push_back(std::move(t));
    }
  }
  std::vector<Subuniverse> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& p, const auto& q) { return p.size() < q.size(); });
  return out;
}

// ---- isomorphism search -----------------------------------------------------------

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const Element> f) {
  if (f.size() != a.size()) return false;
  for (auto v : f)
    if (v >= b.size()) return false;
  if (f[a.zero()] != b.zero() || f[a.one()] != b.one()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Element x = el(i);
    if (f[a.neg(x)] != b.neg(f[x])) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const Element y = el(j);
      if (f[a.join(x, y)] != b.join(f[x], f[y]) || f[a.meet(x, y)] != b.meet(f[x], f[y]) ||
          f[a.imp(x, y)] != b.imp(f[x], f[y]))
        return false;
    }
  }
  return true;
}

namespace {

// Per-element data any isomorphism preserves.
std::vector<std::array<std::size_t, 4>> invariants(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<std::array<std::size_t, 4>> inv(n, {0, 0, 0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    const Element x = el(i);
    inv[i][2] = a.neg(x) == x;
    for (std::size_t j = 0; j < n; ++j) {
      const Element y = el(j);
      inv[i][0] += a.leq(y, x);
      inv[i][1] += a.leq(x, y);
      inv[i][3] += a.imp(x, y) == a.one();
    }
  }
  return inv;
}

// Backtracking over partial maps. Assigning x -> y forces the images of
// every operation result involving x and already-mapped elements.
class IsoSearch {
 public:
  IsoSearch(const FiniteAlgebra& a, const FiniteAlgebra& b)
      : a_(a), b_(b), n_(a.size()), inv_a_(invariants(a)), inv_b_(invariants(b)),
        f_(n_, kFree), g_(n_, kFree) {}

  // Calls visit(map) for each isomorphism in lexicographic order until it returns false.
  void run(const std::function<bool(const Permutation&)>& visit) {
    if (b_.size() != n_) return;
    {
      auto a_inv = inv_a_, b_inv = inv_b_;
      std::sort(a_inv.begin(), a_inv.end());
      std::sort(b_inv.begin(), b_inv.end());
      if (a_inv != b_inv) return;
    }
    if (!assign(a_.zero(), b_.zero()) || !assign(a_.one(), b_.one())) return;
    visit_ = &visit;
    search();
  }

 private:
  static constexpr int kFree = -1;

  bool bind(Element x, Element y) {
    if (f_[x] != kFree) return f_[x] == y;
    if (g_[y] != kFree || inv_a_[x] != inv_b_[y]) return false;
    f_[x] = y;
    g_[y] = x;
    trail_.push_back(x);
    pending_.push_back(x);
    return true;
  }

  bool assign(Element x, Element y) {
    if (!bind(x, y)) return false;
    while (!pending_.empty()) {
      const Element u = pending_.back();
      pending_.pop_back();
      const Element fu = static_cast<Element>(f_[u]);
      mapped_.push_back(u);
      if (!bind(a_.neg(u), b_.neg(fu))) return false;
      for (std::size_t k = 0; k < mapped_.size(); ++k) {
        const Element v = mapped_[k];
        const Element fv = static_cast<Element>(f_[v]);
        if (!bind(a_.join(u, v), b_.join(fu, fv)) || !bind(a_.meet(u, v), b_.meet(fu, fv)) ||
            !bind(a_.imp(u, v), b_.imp(fu, fv)) || !bind(a_.imp(v, u), b_.imp(fv, fu)))
          return false;
      }
    }
    return true;
  }

  void undo(std::size_t trail_mark, std::size_t mapped_mark) {
    while (trail_.size() > trail_mark) {
      const Element x = trail_.back();
      trail_.pop_back();
      g_[f_[x]] = kFree;
      f_[x] = kFree;
    }
    mapped_.resize(mapped_mark);
    pending_.clear();
  }

  // Returns false once the visitor asks to stop.
  bool search() {
    std::size_t x = 0;
    while (x < n_ && f_[x] != kFree) ++x;
    if (x == n_) {
      Permutation p(n_);
      for (std::size_t i = 0; i < n_; ++i) p[i] = static_cast<Element>(f_[i]);
      return (*visit_)(p);
    }
    for (std::size_t y = 0; y < n_; ++y) {
      if (g_[y] != kFree) continue;
      const std::size_t tm = trail_.size(), mm = mapped_.size();
      const bool ok = assign(el(x), el(y));
      const bool keep_going = !ok || search();
      undo(tm, mm);
      if (!keep_going) return false;
    }
    return true;
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  std::size_t n_;
  std::vector<std::array<std::size_t, 4>> inv_a_, inv_b_;
  std::vector<int> f_, g_;
  std::vector<Element> trail_, pending_, mapped_;
  const std::function<bool(const Permutation&)>* visit_ = nullptr;
};

}  // namespace

std::optional<Permutation> iso(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::optional<Permutation> found;
  IsoSearch(a, b).run([&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

std::vector<Permutation> automorphisms(const FiniteAlgebra& a) {
  std::vector<Permutation> out;
  IsoSearch(a, a).run([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

int builtin_index(const FiniteAlgebra& a) {
  for (int i = 1; i <= 5; ++i)
    if (builtin(i).size() == a.size() && iso(a, builtin(i))) return i;
  return 0;
}

// ---- simplicity ------------------------------------------------------------------

ScResult sc_check(const FiniteAlgebra& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Element x = el(i);
    if (x == a.one()) continue;
    if (a.meet(x, a.star(a.neg(x))) != a.zero()) return {false, x};
  }
  return {};
}

bool is_simple(const FiniteAlgebra& a) {
  if (a.size() < 2) throw NotApplicable("simplicity needs at least two elements");
  return congruences(a).size() == 2;
}

bool is_si(const FiniteAlgebra& a) {
  if (a.size() < 2) throw NotApplicable("subdirect irreducibility needs at least two elements");
  return congruences(a).atoms().size() == 1;
}

// ---- discriminator ----------------------------------------------------------------

Term discriminator_term() {
  const Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  const Term w = Term::imp(Term::join(x, y), Term::meet(x, y));
  const Term d = Term::meet(w, Term::star(Term::neg(w)));
  return Term::join(Term::meet(z, d), Term::meet(x, Term::star(d)));
}

DiscriminatorReport discriminator_check(const FiniteAlgebra& a, const Term& t) {
  const std::vector<std::string> slots{"x", "y", "z"};
  const auto vars = t.variables();
  if (std::vector<std::string>(vars.begin(), vars.end()) != slots)
    throw ArityError("discriminator term must use exactly the variables x, y, z");
  const CompiledTerm ct(t, slots);
  auto bad = sweep::first_failure(a.size(), 3, [&](std::span<const Element> v) {
    thread_local std::vector<Element> stack;
    return ct.eval(a, v, stack) == (v[0] == v[1] ? v[2] : v[0]);
  });
  DiscriminatorReport r{t, a.name(), !bad.has_value(), std::nullopt};
  if (bad) r.failing_triple = std::array<Element, 3>{(*bad)[0], (*bad)[1], (*bad)[2]};
  return r;
}

// ---- primality --------------------------------------------------------------------

PrimalityResult is_primal(const FiniteAlgebra& a, bool run_oracle) {
  PrimalityResult r;
  auto& ev = r.evidence;
  ev.discriminator = discriminator_check(a, discriminator_term());

  const Subuniverse least = generated(a, {});
  if (least.size() != a.size()) ev.proper_subalgebra = least;
  if (a.size() <= kPrimalityCountLimit) ev.subalgebras = subalgebras(a).size();

  IsoSearch(a, a).run([&](const Permutation& p) {
    ++ev.automorphisms;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != i) {
        ev.nontrivial_automorphism = p;
        return false;
      }
    return true;
  });
  if (ev.nontrivial_automorphism) ev.automorphisms = automorphisms(a).size();

  r.primal = a.size() > 1 && ev.discriminator.ok && !ev.proper_subalgebra &&
             !ev.nontrivial_automorphism;

  if (run_oracle && a.size() <= 3) {
    std::size_t all = 1;
    for (std::size_t i = 0; i < a.size() * a.size(); ++i) all *= a.size();
    ev.clone_full = binary_clone_size(a) == all;
    if (a.size() > 1 && *ev.clone_full != r.primal)
      throw std::logic_error("primality criterion and clone closure disagree on " + a.name());
  }
  return r;
}

// ---- products and quotients -------------------------------------------------------

FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors, std::size_t limit) {
  if (factors.empty()) throw std::invalid_argument("direct product of no factors");
  limit = std::min(limit, kMaxCarrier);
  std::size_t n = 1;
  for (const auto& f : factors) {
    if (n > limit / f.size()) throw SizeLimit("product exceeds " + std::to_string(limit) + " elements");
    n *= f.size();
  }

  // Fold left: (A x B) x C keeps the first factor most significant.
  std::vector<Element> join{0}, meet{0}, imp{0}, neg{0};
  std::size_t m = 1;
  Element zero = 0, one = 0;
  for (const auto& f : factors) {
    const std::size_t k = f.size(), mk = m * k;
    std::vector<Element> j2(mk * mk), m2(mk * mk), i2(mk * mk), n2(mk);
    for (std::size_t x = 0; x < mk; ++x) {
      const std::size_t xa = x / k, xb = x % k;
      n2[x] = el(neg[xa] * k + f.neg(el(xb)));
      for (std::size_t y = 0; y < mk; ++y) {
        const std::size_t ya = y / k, yb = y % k;
        const std::size_t o = x * mk + y, oa = xa * m + ya;
        j2[o] = el(join[oa] * k + f.join(el(xb), el(yb)));
        m2[o] = el(meet[oa] * k + f.meet(el(xb), el(yb)));
        i2[o] = el(imp[oa] * k + f.imp(el(xb), el(yb)));
      }
    }
    join.swap(j2);
    meet.swap(m2);
    imp.swap(i2);
    neg.swap(n2);
    zero = el(zero * k + f.zero());
    one = el(one * k + f.one());
    m = mk;
  }

  std::vector<std::string> labels(n);
  std::string name;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::string> parts(factors.size());
    std::size_t rest = x;
    for (std::size_t i = factors.size(); i-- > 0;) {
      parts[i] = factors[i].label(el(rest % factors[i].size()));
      rest /= factors[i].size();
    }
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    labels[x] = s + ")";
  }
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "x" : "") + factors[i].name();
  return from_trusted_tables(name, std::move(labels), std::move(join), std::move(meet),
                             std::move(imp), std::move(neg), zero, one);
}

FiniteAlgebra power(const FiniteAlgebra& a, std::size_t k, std::size_t limit) {
  if (k == 0) throw std::invalid_argument("power exponent must be positive");
  std::vector<FiniteAlgebra> fs(k, a);
  return direct_product(fs, limit).renamed(a.name() + "^" + std::to_string(k));
}

FiniteAlgebra quotient(const FiniteAlgebra& a, const Partition& p) {
  if (!is_congruence(a, p)) throw std::invalid_argument("partition is not a congruence");
  const auto bs = blocks(p);
  const std::size_t k = bs.size();
  std::vector<Element> join(k * k), meet(k * k), imp(k * k), neg(k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Element x = bs[i].front();
    neg[i] = p[a.neg(x)];
    for (std::size_t j = 0; j < k; ++j) {
      const Element y = bs[j].front();
      join[i * k + j] = p[a.join(x, y)];
      meet[i * k + j] = p[a.meet(x, y)];
      imp[i * k + j] = p[a.imp(x, y)];
    }
    std::string s = "{";
    for (std::size_t t = 0; t < bs[i].size(); ++t) s += (t ? "," : "") + a.label(bs[i][t]);
    labels[i] = s + "}";
  }
  return from_trusted_tables(a.name() + "/~", std::move(labels), std::move(join),
                             std::move(meet), std::move(imp), std::move(neg), p[a.zero()],
                             p[a.one()]);
}

// ---- decomposition ----------------------------------------------------------------

namespace {

// Above this carrier size the full axiom sweep is skipped; the decomposition
// itself then certifies membership.
constexpr std::size_t kAxiomCheckLimit = 256;
constexpr std::size_t kLatticeMethodLimit = 81;

std::vector<Partition> lattice_kernels(const FiniteAlgebra& a) {
  const auto lat = congruences(a);
  std::vector<Partition> chosen;
  Partition cur = all_partition(a.size());
  for (auto c : lat.coatoms()) {
    Partition m = partition_meet(cur, lat.partitions[c]);
    if (m == cur) continue;
    chosen.push_back(lat.partitions[c]);
    cur = std::move(m);
    if (block_count(cur) == a.size()) break;
  }
  if (block_count(cur) != a.size())
    throw NotInVariety("maximal congruences of " + a.name() + " do not meet to the identity");
  return chosen;
}

std::vector<Partition> central_kernels(const FiniteAlgebra& a) {
  // d(x) = x /\ x'* is the characteristic function of {1} on each simple
  // factor, so its image is the set of central elements {0,1}^k.
  std::vector<char> central(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) central[a.meet(el(i), a.star(a.neg(el(i))))] = 1;
  std::vector<Partition> out;
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (!central[e] || e == a.zero()) continue;
    bool atom = true;
    for (std::size_t f = 0; f < a.size() && atom; ++f)
      if (central[f] && f != e && f != a.zero() && a.leq(el(f), el(e))) atom = false;
    if (!atom) continue;
    std::vector<Element> img(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) img[x] = a.meet(el(x), el(e));
    Partition p = canonical(img);
    if (!is_congruence(a, p))
      throw NotInVariety("x |-> x /\\ " + a.label(el(e)) + " is not a homomorphism");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Decomposition decompose(const FiniteAlgebra& a, DecomposeMethod m) {
  const std::size_t n = a.size();
  if (n <= kAxiomCheckLimit) {
    const auto prof = axiom_profile(a);
    for (auto ax : kAllAxioms)
      if (!prof.holds(ax))
        throw NotInVariety(a.name() + " fails axiom " + std::string(axiom_name(ax)));
  }
  Decomposition d;
  if (n == 1) return d;

  if (m == DecomposeMethod::Auto)
    m = n <= kLatticeMethodLimit ? DecomposeMethod::Lattice : DecomposeMethod::Central;
  auto kernels = m == DecomposeMethod::Lattice ? lattice_kernels(a) : central_kernels(a);

  // x |-> (x/θ1, ..., x/θk) must be a bijection onto the product; being a
  // homomorphism is automatic for congruences.
  std::size_t prod = 1;
  for (const auto& k : kernels) {
    prod *= block_count(k);
    if (prod > n) break;
  }
  std::set<std::vector<Element>> images;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Element> t;
    for (const auto& k : kernels) t.push_back(k[x]);
    images.insert(std::move(t));
  }
  if (prod != n || images.size() != n)
    throw NotInVariety(a.name() + " is not the product of the quotients found");

  struct Piece {
    int index;
    Partition kernel;
    FiniteAlgebra factor;
  };
  std::vector<Piece> pieces;
  for (auto& k : kernels) {
    FiniteAlgebra q = quotient(a, k);
    const int idx = builtin_index(q);
    if (idx == 0) throw NotInVariety("a factor of " + a.name() + " is not one of A1..A5");
    pieces.push_back({idx, std::move(k), std::move(q)});
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Piece& p, const Piece& q) { return p.index < q.index; });
  for (auto& p : pieces) {
    d.builtin.push_back(p.index);
    d.kernels.push_back(std::move(p.kernel));
    d.factors.push_back(std::move(p.factor));
  }
  return d;
}

}  // namespace runo
