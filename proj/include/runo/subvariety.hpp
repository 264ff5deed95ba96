#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace runo {

/// A subset of {1,...,5}, naming the subvariety generated by those Ai.
/// Written on the command line as a digit string, e.g. "135"; "" is empty.
class SubvarietyId {
 public:
  constexpr SubvarietyId() = default;
  static constexpr SubvarietyId from_mask(std::uint8_t mask) { return SubvarietyId(mask & 0x1f); }
  static constexpr SubvarietyId all() { return SubvarietyId(0x1f); }
  static constexpr SubvarietyId single(int i) { return SubvarietyId(bit(i)); }

  /// Parse "135", "{1,3,5}" or "A1,A3,A5". Throws std::invalid_argument.
  static SubvarietyId parse(std::string_view text);

  constexpr bool contains(int i) const { return (mask_ & bit(i)) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::uint8_t mask() const { return mask_; }
  int size() const;

  constexpr SubvarietyId with(int i) const { return SubvarietyId(mask_ | bit(i)); }
  constexpr SubvarietyId without(int i) const { return SubvarietyId(mask_ & ~bit(i) & 0x1f); }

  constexpr SubvarietyId operator|(SubvarietyId o) const { return SubvarietyId(mask_ | o.mask_); }
  constexpr SubvarietyId operator&(SubvarietyId o) const { return SubvarietyId(mask_ & o.mask_); }
  constexpr SubvarietyId complement() const { return SubvarietyId(~mask_ & 0x1f); }
  constexpr bool subset_of(SubvarietyId o) const { return (mask_ & ~o.mask_) == 0; }

  /// "135"; the empty set prints as "{}".
  std::string digits() const;
  /// "{A1, A3, A5}"
  std::string pretty() const;

  friend constexpr bool operator==(SubvarietyId, SubvarietyId) = default;
  friend constexpr auto operator<=>(SubvarietyId, SubvarietyId) = default;

 private:
  constexpr explicit SubvarietyId(std::uint8_t m) : mask_(m) {}
  static constexpr std::uint8_t bit(int i) {
    return (i >= 1 && i <= 5) ? static_cast<std::uint8_t>(1u << (i - 1))
                              : throw std::out_of_range("algebra index must be 1..5");
  }
  std::uint8_t mask_ = 0;
};

}  // namespace runo
