#include "runo/subvariety.hpp"

#include <bit>
#include <cctype>

namespace runo {

SubvarietyId SubvarietyId::parse(std::string_view text) {
  SubvarietyId out;
  auto fail = [&]() -> SubvarietyId {
    throw std::invalid_argument("bad subvariety '" + std::string(text) +
                                "': expected digits 1..5, e.g. 135");
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '{' || c == '}' || c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'A' || c == 'a') {
      if (i + 1 >= text.size()) return fail();
      continue;
    }
    if (c < '1' || c > '5') return fail();
    const int k = c - '0';
    if (out.contains(k)) return fail();
    out = out.with(k);
  }
  return out;
}

int SubvarietyId::size() const { return std::popcount(mask_); }

std::string SubvarietyId::digits() const {
  if (empty()) return "{}";
  std::string s;
  for (int i = 1; i <= 5; ++i)
    if (contains(i)) s += static_cast<char>('0' + i);
  return s;
}

std::string SubvarietyId::pretty() const {
  std::string s = "{";
  for (int i = 1; i <= 5; ++i) {
    if (!contains(i)) continue;
    if (s.size() > 1) s += ", ";
    s += "A" + std::to_string(i);
  }
  return s + "}";
}

}  // namespace runo
