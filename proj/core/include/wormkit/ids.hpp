#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <type_traits>

namespace wormkit {

// Strongly typed indices. Each is the position of the object in its owning
// container (tiles in a Patch, worms in a WormIndex, ...).
enum class TileId : std::int32_t {};
enum class EdgeId : std::int32_t {};
enum class VertexId : std::int32_t {};
enum class WormId : std::int32_t {};
enum class FamilyId : std::int32_t {};

template <class Id>
concept StrongId = std::is_enum_v<Id> &&
                   std::is_same_v<std::underlying_type_t<Id>, std::int32_t>;

template <StrongId Id>
constexpr std::int32_t to_int(Id id) noexcept {
  return static_cast<std::int32_t>(id);
}

template <StrongId Id>
constexpr std::size_t to_index(Id id) noexcept {
  return static_cast<std::size_t>(id);
}

template <StrongId Id>
constexpr Id id_from_index(std::size_t i) noexcept {
  return static_cast<Id>(static_cast<std::int32_t>(i));
}

template <StrongId Id>
std::ostream& operator<<(std::ostream& os, Id id) {
  return os << to_int(id);
}

}  // namespace wormkit
