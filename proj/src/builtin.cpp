#include "runo/builtin.hpp"

#include <string>

namespace runo {

namespace {

// Chain 0 < 2 < 1 on indices {0, 1, 2}; the implication rows are what differ.
RawTables chain_algebra(std::string name, std::vector<std::vector<int>> imp) {
  const int rank[3] = {0, 2, 1};
  RawTables r;
  r.name = std::move(name);
  r.labels = {"0", "1", "2"};
  r.join.assign(3, std::vector<int>(3));
  r.meet.assign(3, std::vector<int>(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      r.join[x][y] = rank[x] >= rank[y] ? x : y;
      r.meet[x][y] = rank[x] <= rank[y] ? x : y;
    }
  r.imp = std::move(imp);
  r.neg = {1, 0, 2};
  r.zero = 0;
  r.one = 1;
  return r;
}

RawTables a5() {
  RawTables r;
  r.name = "A5";
  r.labels = {"0", "1", "2", "3"};
  r.join = {{0, 1, 2, 3}, {1, 1, 1, 1}, {2, 1, 2, 1}, {3, 1, 1, 3}};
  r.meet = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 2, 0}, {0, 3, 0, 3}};
  r.imp = {{1, 2, 1, 2}, {0, 1, 2, 3}, {3, 2, 1, 0}, {2, 1, 2, 1}};
  r.neg = {1, 0, 2, 3};
  r.zero = 0;
  r.one = 1;
  return r;
}

std::array<FiniteAlgebra, 5> make_builtins() {
  return {
      validate(chain_algebra("A1", {{1, 2, 1}, {0, 1, 2}, {0, 1, 1}})),
      validate(chain_algebra("A2", {{1, 2, 1}, {0, 1, 2}, {0, 2, 1}})),
      validate(chain_algebra("A3", {{1, 2, 2}, {0, 1, 2}, {0, 1, 1}})),
      validate(chain_algebra("A4", {{1, 2, 2}, {0, 1, 2}, {0, 2, 1}})),
      validate(a5()),
  };
}

}  // namespace

const std::array<FiniteAlgebra, 5>& builtins() {
  static const std::array<FiniteAlgebra, 5> all = make_builtins();
  return all;
}

const FiniteAlgebra& builtin(int index) {
  if (index < 1 || index > 5) throw UnknownName("no builtin algebra A" + std::to_string(index));
  return builtins()[static_cast<std::size_t>(index - 1)];
}

const FiniteAlgebra& builtin(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'A' || name[0] == 'a') && name[1] >= '1' && name[1] <= '5')
    return builtin(name[1] - '0');
  throw UnknownName("unknown algebra '" + std::string(name) + "' (expected A1..A5)");
}

}  // namespace runo
