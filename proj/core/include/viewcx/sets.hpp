#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace viewcx {

/// Process id. Valid ids are 0..15.
using Pid = std::uint8_t;

/// Largest supported ambient parameter: ids live in [n] = {0,...,n}, n <= 15.
inline constexpr int kMaxN = 15;

/// A subset of [n] as a 16-bit mask. Bit p set means process p is a member.
class PidSet {
public:
  constexpr PidSet() = default;
  constexpr explicit PidSet(std::uint16_t bits) : bits_(bits) {}

  static constexpr PidSet full(int n) {
    return PidSet(static_cast<std::uint16_t>((1u << (n + 1)) - 1u));
  }
  static constexpr PidSet single(Pid p) {
    return PidSet(static_cast<std::uint16_t>(1u << p));
  }
  static PidSet of(std::initializer_list<int> pids) {
    std::uint16_t b = 0;
    for (int p : pids) b |= static_cast<std::uint16_t>(1u << p);
    return PidSet(b);
  }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Pid p) const { return (bits_ >> p) & 1u; }

  constexpr bool subset_of(PidSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool strict_subset_of(PidSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(PidSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr PidSet operator|(PidSet o) const { return PidSet(bits_ | o.bits_); }
  constexpr PidSet operator&(PidSet o) const { return PidSet(bits_ & o.bits_); }
  /// Set difference: elements of this not in o.
  constexpr PidSet minus(PidSet o) const {
    return PidSet(static_cast<std::uint16_t>(bits_ & ~o.bits_));
  }
  constexpr PidSet complement_in(int n) const { return full(n).minus(*this); }

  constexpr bool operator==(const PidSet&) const = default;
  constexpr auto operator<=>(const PidSet&) const = default;

  /// Iterates member pids in ascending order.
  class iterator {
  public:
    constexpr explicit iterator(std::uint16_t bits) : bits_(bits) {}
    constexpr Pid operator*() const { return static_cast<Pid>(std::countr_zero(bits_)); }
    constexpr iterator& operator++() {
      bits_ &= static_cast<std::uint16_t>(bits_ - 1);
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint16_t bits_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Pid p : *this) out.push_back(p);
    return out;
  }

  /// "{0,2,3}" — ascending, no spaces.
  std::string to_string() const;

private:
  std::uint16_t bits_ = 0;
};

/// Enumerates every subset of `mask` exactly once, starting at the empty set.
/// Usage: for (Subsets s(mask); !s.done(); s.next()) use(s.current());
class Subsets {
public:
  constexpr explicit Subsets(std::uint16_t mask) : mask_(mask), cur_(0), done_(false) {}
  constexpr bool done() const { return done_; }
  constexpr std::uint16_t current() const { return cur_; }
  constexpr void next() {
    if (cur_ == mask_) {
      done_ = true;
      return;
    }
    cur_ = static_cast<std::uint16_t>((cur_ - mask_) & mask_);
  }

private:
  std::uint16_t mask_;
  std::uint16_t cur_;
  bool done_;
};

}  // namespace viewcx
