#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "runo/builtin.hpp"
#include "runo/structure.hpp"

using namespace runo;

namespace {

FiniteAlgebra prod(std::initializer_list<int> idx) {
  std::vector<FiniteAlgebra> f;
  for (int i : idx) f.push_back(builtin(i));
  return direct_product(f);
}

bool closed_under_ops(const FiniteAlgebra& a, const std::vector<char>& in) {
  for (Element x = 0; x < a.size(); ++x) {
    if (!in[x]) continue;
    if (!in[a.neg(x)]) return false;
    for (Element y = 0; y < a.size(); ++y)
      if (in[y] && (!in[a.join(x, y)] || !in[a.meet(x, y)] || !in[a.imp(x, y)])) return false;
  }
  return in[a.zero()] && in[a.one()];
}

std::vector<Subuniverse> brute_subalgebras(const FiniteAlgebra& a) {
  std::vector<Subuniverse> out;
  const std::size_t n = a.size();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    std::vector<char> in(n);
    Subuniverse s;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) {
        in[i] = 1;
        s.push_back(static_cast<Element>(i));
      }
    if (closed_under_ops(a, in)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
    return p.size() != q.size() ? p.size() < q.size() : p < q;
  });
  return out;
}

bool brute_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<Element>& f) {
  for (Element x = 0; x < a.size(); ++x) {
    if (f[a.neg(x)] != b.neg(f[x])) return false;
    for (Element y = 0; y < a.size(); ++y)
      if (f[a.join(x, y)] != b.join(f[x], f[y]) || f[a.meet(x, y)] != b.meet(f[x], f[y]) ||
          f[a.imp(x, y)] != b.imp(f[x], f[y]))
        return false;
  }
  return f[a.zero()] == b.zero() && f[a.one()] == b.one();
}

std::vector<Permutation> brute_automorphisms(const FiniteAlgebra& a) {
  std::vector<Permutation> out;
  Permutation p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (brute_hom(a, a, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool brute_congruence(const FiniteAlgebra& a, const std::vector<int>& blk) {
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (blk[x] != blk[y]) continue;
      if (blk[a.neg(x)] != blk[a.neg(y)]) return false;
      for (Element z = 0; z < n; ++z)
        for (const auto& [u, v] : {std::pair{a.join(x, z), a.join(y, z)}, {a.meet(x, z), a.meet(y, z)},
                                   {a.imp(x, z), a.imp(y, z)}, {a.imp(z, x), a.imp(z, y)}})
          if (blk[u] != blk[v]) return false;
    }
  return true;
}

std::vector<Partition> brute_congruences(const FiniteAlgebra& a) {
  std::vector<Partition> out;
  for (const auto& p : oracle::all_partitions(static_cast<int>(a.size())))
    if (brute_congruence(a, p)) out.emplace_back(p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

FiniteAlgebra relabel(const FiniteAlgebra& a, const Permutation& p) {
  const std::size_t n = a.size();
  std::vector<Element> j(n * n), m(n * n), i(n * n), g(n);
  for (Element x = 0; x < n; ++x) {
    g[p[x]] = p[a.neg(x)];
    for (Element y = 0; y < n; ++y) {
      j[p[x] * n + p[y]] = p[a.join(x, y)];
      m[p[x] * n + p[y]] = p[a.meet(x, y)];
      i[p[x] * n + p[y]] = p[a.imp(x, y)];
    }
  }
  return from_flat_tables("B", a.labels(), j, m, i, g, p[a.zero()], p[a.one()]);
}

}  // namespace

TEST_CASE("no proper subalgebras, no nontrivial automorphisms") {
  for (const auto& a : builtins()) {
    const auto subs = subalgebras(a);
    CHECK(subs == brute_subalgebras(a));
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].size() == a.size());
    const auto auts = automorphisms(a);
    CHECK(auts == brute_automorphisms(a));
    CHECK(auts.size() == 1);
  }
  CHECK(subalgebras(trivial_algebra()).size() == 1);
  CHECK(automorphisms(trivial_algebra()).size() == 1);
}

TEST_CASE("subalgebras and automorphisms of products match brute force") {
  for (const auto& a : {prod({1, 1}), prod({1, 3}), prod({2, 5}), prod({5, 5})}) {
    CAPTURE(a.name());
    CHECK(subalgebras(a) == brute_subalgebras(a));
    auto auts = automorphisms(a);
    for (const auto& p : auts) CHECK(brute_hom(a, a, p));
    if (a.size() <= 9) {
      auto brute = brute_automorphisms(a);
      CHECK(auts.front() == brute.front());  // identity first
      std::sort(auts.begin(), auts.end());
      CHECK(auts == brute);
    }
  }
  // rigid factors: only the factor swap survives
  CHECK(automorphisms(prod({1, 1})).size() == 2);
  CHECK(automorphisms(prod({2, 5})).size() == 1);
  CHECK(automorphisms(prod({5, 5})).size() == 2);
  // diagonal subalgebra of a square
  CHECK(subalgebras(prod({4, 4})).size() == 2);
}

TEST_CASE("generated subuniverses") {
  const FiniteAlgebra a = prod({1, 1});
  const Element diag = a.element("(2,2)");
  const auto s = generated(a, std::vector<Element>{diag});
  CHECK(s.size() == 3);
}

TEST_CASE("congruences agree with brute force") {
  for (const auto& a : {builtin(1), builtin(5), prod({1, 3}), prod({2, 2}), prod({1, 1})}) {
    CAPTURE(a.name());
    auto lat = congruences(a);
    auto sorted = lat.partitions;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == brute_congruences(a));
    CHECK(block_count(lat.partitions[lat.bottom()]) == a.size());
    CHECK(block_count(lat.partitions[lat.top()]) == 1);
  }
  CHECK(congruences(builtin(1)).size() == 2);
  CHECK(congruences(prod({1, 3})).size() == 4);
  CHECK(congruences(trivial_algebra()).size() == 1);
}

TEST_CASE("principal congruences are the least congruences containing the pair") {
  const FiniteAlgebra a = prod({1, 3});
  const auto all = brute_congruences(a);
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      const Partition cg = principal_congruence(a, x, y);
      CHECK(cg[x] == cg[y]);
      CHECK(is_congruence(a, cg));
      for (const auto& p : all)
        if (p[x] == p[y]) CHECK(refines(cg, p));
    }
}

TEST_CASE("partition operations") {
  const Partition p = canonical(std::vector<Element>{5, 5, 7, 7});
  CHECK(p == Partition{0, 0, 1, 1});
  const Partition q{0, 1, 0, 1};
  CHECK(partition_meet(p, q) == identity_partition(4));
  CHECK(partition_join(p, q) == all_partition(4));
  CHECK(blocks(p) == std::vector<std::vector<Element>>{{0, 1}, {2, 3}});
  CHECK(refines(identity_partition(4), p));
  CHECK_FALSE(refines(p, q));
}

TEST_CASE("simplicity") {
  for (const auto& a : builtins()) {
    CHECK(is_simple(a));
    CHECK(is_si(a));
    CHECK(sc_check(a).ok);
  }
  CHECK_FALSE(is_simple(prod({1, 2})));
  CHECK_FALSE(is_si(prod({1, 2})));
  const ScResult r = sc_check(prod({1, 1}));
  REQUIRE_FALSE(r.ok);
  const FiniteAlgebra sq = prod({1, 1});
  const Element w = *r.witness;
  CHECK(w != sq.one());
  CHECK(sq.meet(w, sq.star(sq.neg(w))) != sq.zero());
  const Element e10 = sq.element("(1,0)");
  CHECK(sq.meet(e10, sq.star(sq.neg(e10))) == e10);
  // the first such element in index order
  for (Element x = 0; x < w; ++x)
    if (x != sq.one()) CHECK(sq.meet(x, sq.star(sq.neg(x))) == sq.zero());
  CHECK_THROWS_AS(is_simple(trivial_algebra()), NotApplicable);
  CHECK_THROWS_AS(is_si(trivial_algebra()), NotApplicable);
}

TEST_CASE("discriminator term") {
  const Term t = discriminator_term();
  for (int i = 1; i <= 5; ++i) {
    CHECK(discriminator_check(builtin(i), t).ok);
    const auto& ref = oracle::table(i);
    oracle::for_each_valuation(ref.n, {"x", "y", "z"}, [&](const auto& v) {
      const int want = v.at("x") == v.at("y") ? v.at("z") : v.at("x");
      CHECK(oracle::eval(ref, t, v) == want);
    });
  }
  CHECK(eval(builtin(1), t, {{"x", 1}, {"y", 1}, {"z", 0}}) == 0);
  CHECK(eval(builtin(5), t, {{"x", 2}, {"y", 3}, {"z", 0}}) == 2);
  const auto bad = discriminator_check(prod({1, 1}), t);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_triple);
  CHECK_THROWS_AS(discriminator_check(builtin(1), parse_term("x -> y")), ArityError);
}

TEST_CASE("primality") {
  for (const auto& a : builtins()) {
    const auto r = is_primal(a);
    CHECK(r.primal);
    CHECK(r.evidence.discriminator.ok);
    CHECK(r.evidence.automorphisms == 1);
  }
  const auto sq = is_primal(prod({1, 1}));
  CHECK_FALSE(sq.primal);
  REQUIRE(sq.evidence.nontrivial_automorphism);
  CHECK(brute_hom(prod({1, 1}), prod({1, 1}), *sq.evidence.nontrivial_automorphism));
  CHECK_FALSE(is_primal(trivial_algebra()).primal);
}

TEST_CASE("binary clone closure: serial and parallel agree") {
  const std::size_t ser = binary_clone_size_serial(builtin(3));
  CHECK(ser == 19683);
  CHECK(binary_clone_size(builtin(3)) == ser);
  CHECK_THROWS(binary_clone_size(builtin(5)));
}

TEST_CASE("isomorphisms") {
  const auto id = iso(builtin(1), builtin(1));
  REQUIRE(id);
  CHECK(*id == Permutation{0, 1, 2});
  CHECK_FALSE(iso(builtin(1), builtin(2)));
  const Permutation swap{0, 1, 3, 2};
  const FiniteAlgebra b = relabel(builtin(5), swap);
  CHECK_FALSE(b.same_tables(builtin(5)));
  const auto f = iso(builtin(5), b);
  REQUIRE(f);
  CHECK(*f == swap);
  CHECK(builtin_index(b) == 5);
  CHECK(builtin_index(prod({1, 1})) == 0);
}

TEST_CASE("products") {
  const FiniteAlgebra sq = power(builtin(1), 2);
  CHECK(sq.size() == 9);
  CHECK(axiom_profile(sq).all_hold());
  CHECK(sq.name() == "A1^2");
  const FiniteAlgebra p = prod({1, 5});
  CHECK(p.size() == 12);
  CHECK(p.name() == "A1xA5");
  CHECK(p.label(0) == "(0,0)");
  CHECK(congruences(p).size() > 2);
  CHECK_THROWS_AS(power(builtin(5), 7), SizeLimit);
}

TEST_CASE("quotients") {
  const FiniteAlgebra p = prod({1, 3});
  const auto lat = congruences(p);
  for (const auto& c : lat.coatoms()) {
    const FiniteAlgebra q = quotient(p, lat.partitions[c]);
    CHECK(q.size() == 3);
    CHECK((builtin_index(q) == 1 || builtin_index(q) == 3));
  }
  CHECK_THROWS_AS(quotient(p, Partition{0, 1, 1, 2, 2, 2, 2, 2, 2}), std::invalid_argument);
}

TEST_CASE("decomposition") {
  CHECK(decompose(builtin(3)).builtin == std::vector<int>{3});
  CHECK(decompose(prod({5, 1})).builtin == std::vector<int>{1, 5});
  CHECK(decompose(power(builtin(2), 2)).builtin == std::vector<int>{2, 2});
  CHECK(decompose(trivial_algebra()).factors.empty());
  for (auto m : {DecomposeMethod::Lattice, DecomposeMethod::Central})
    CHECK(decompose(prod({4, 2, 5}), m).builtin == std::vector<int>{2, 4, 5});

  RawTables h = builtin(1).raw();
  h.imp = {{1, 1, 1}, {0, 1, 2}, {0, 1, 1}};
  CHECK_THROWS_AS(decompose(validate(h)), NotInVariety);
}

TEST_CASE("decompose then multiply gives back the algebra") {
  // every multiset of builtins with at most 256 elements
  std::vector<std::vector<int>> todo{{}};
  std::size_t checked = 0;
  while (!todo.empty()) {
    const auto ms = todo.back();
    todo.pop_back();
    std::size_t size = 1;
    for (int i : ms) size *= oracle::table(i).n;
    const int from = ms.empty() ? 1 : ms.back();
    for (int i = from; i <= 5; ++i)
      if (size * oracle::table(i).n <= 256) {
        auto next = ms;
        next.push_back(i);
        todo.push_back(next);
      }
    if (ms.size() < 2) continue;
    std::vector<FiniteAlgebra> fs;
    for (int i : ms) fs.push_back(builtin(i));
    const FiniteAlgebra a = direct_product(fs);
    CAPTURE(a.name());
    if (a.size() <= 81) CHECK(axiom_profile(a).all_hold());
    const auto d = decompose(a);
    CHECK(d.builtin == ms);
    CHECK(iso(direct_product(d.factors), a));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("large products decompose through central elements") {
  const FiniteAlgebra big = power(builtin(5), 6);
  CHECK(big.size() == 4096);
  CHECK(decompose(big).builtin == std::vector<int>(6, 5));
}

TEST_CASE("model enumeration") {
  const auto two = enumerate_runo1(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].size() == 1);

  const auto three = enumerate_runo1(3);
  std::vector<std::string> names;
  for (const auto& a : three) names.push_back(a.name());
  CHECK(names == std::vector<std::string>{"trivial", "A1", "A2", "A3", "A4"});

  const auto four = enumerate_runo1(4);
  const auto serial = enumerate_runo1_serial(4);
  REQUIRE(four.size() == 6);
  REQUIRE(serial.size() == four.size());
  for (std::size_t k = 0; k < four.size(); ++k) {
    CHECK(four[k].name() == serial[k].name());
    CHECK(four[k].same_tables(serial[k]));
  }
  CHECK(four.back().size() == 4);
  CHECK(builtin_index(four.back()) == 5);
  for (const auto& a : four) {
    if (a.size() < 3) continue;
    CAPTURE(a.name());
    const bool s = is_simple(a), si = is_si(a), sc = sc_check(a).ok;
    CHECK(s == si);
    CHECK(si == sc);
    CHECK(sc == (builtin_index(a) != 0));
    if (sc) CHECK(height(a) <= 2);
  }
  CHECK_THROWS_AS(enumerate_runo1(5), std::invalid_argument);
}
