#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace kprime {

  // Index of an element of a finite monoid or a finite pointed set. Index 0
  // is always the distinguished point (the zero of a monoid, the base point of
  // a pointed set).
  using Elem = std::uint32_t;

  inline constexpr Elem kBase = 0;

  // Outcome of a brute-force decision procedure. When the property fails the
  // witness holds the offending triple; its meaning is documented at each
  // call site.
  struct Decision {
    bool                               holds = true;
    std::optional<std::array<Elem, 3>> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

}  // namespace kprime
