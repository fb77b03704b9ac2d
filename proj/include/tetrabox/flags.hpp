#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "tetrabox/linalg.hpp"
#include "tetrabox/onsager.hpp"

namespace tetrabox {

/// Nonzero subspaces V_0..V_d whose sum is direct and equal to the whole space.
struct Decomposition {
  std::vector<Subspace> parts;

  std::size_t diameter() const { return parts.empty() ? 0 : parts.size() - 1; }
  bool is_valid() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Increasing chain F_0 ⊂ ... ⊂ F_d = V with F_0 nonzero.
struct Flag {
  std::vector<Subspace> components;

  std::size_t diameter() const { return components.empty() ? 0 : components.size() - 1; }
  bool is_valid() const;
  friend bool operator==(const Flag&, const Flag&) = default;
};

/// F_i = V_0 + ... + V_i
Flag flag_from_decomposition(const Decomposition& dec);
Decomposition invert_decomposition(Decomposition dec);

/// V_i = F_i ∩ G_{d-i} when that is a decomposition inducing F and G, else
/// nullopt. Throws DimensionError on a diameter or ambient mismatch.
std::optional<Decomposition> try_induced_decomposition(const Flag& f, const Flag& g);
bool are_opposite(const Flag& f, const Flag& g);
/// Throws DomainError when the flags are not opposite.
Decomposition induced_decomposition(const Flag& f, const Flag& g);

/// Flags 0..3 of an irreducible type-(0,0) module: 0 and 1 from the
/// eigenspaces of A taken upward from -d and downward from d, 2 and 3 the
/// same for A*. Throws ModuleTypeError when the type is not (0,0).
std::array<Flag, 4> four_flags(const OnsagerModule& m);

/// The decomposition V_M(-d), V_M(2-d), ..., V_M(d) (ascending) of a matrix
/// with spectrum {d-2i}.
Decomposition ascending_eigen_decomposition(const Matrix& m, std::size_t d);

}  // namespace tetrabox
