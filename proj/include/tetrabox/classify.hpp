#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tetrabox/onsager.hpp"

namespace tetrabox {

inline constexpr std::size_t kOracleGuard = 64;

/// Multiset of (n, {a, a^-1}) over the nontrivial factors, each pair stored as
/// the member whose serialized form is lexicographically smaller, sorted.
struct EquivalenceKey {
  std::vector<std::pair<std::size_t, Rational>> entries;

  friend bool operator==(const EquivalenceKey&, const EquivalenceKey&) = default;
};

EquivalenceKey equivalence_key(const ModuleSpec& spec);

/// The values a_i, a_i^-1 over all factors with n >= 1 are mutually distinct.
/// Factors with n = 0 are trivial tensor factors and are skipped; a spec with
/// only such factors is the trivial module, which is irreducible.
bool is_irreducible_criterion(const ModuleSpec& spec);

/// Human-readable reason the criterion fails, or nullopt when it holds.
std::optional<std::string> reducibility_reason(const ModuleSpec& spec);

/// Dimension of the unital associative algebra generated by `generators`,
/// by closing {I} under left multiplication. Stops early once `stop_at` is
/// reached.
std::size_t generated_algebra_dimension(std::span<const Matrix> generators, std::size_t stop_at);

/// Absolute irreducibility of the pair (Burnside): the algebra generated by a
/// and b is all of End(V). Throws DimensionError above `guard`.
bool acts_irreducibly(const Matrix& a, const Matrix& b, std::size_t guard = kOracleGuard);

bool is_irreducible_burnside(const OnsagerModule& m, std::size_t guard = kOracleGuard);

/// Same key and same shift.
bool are_equivalent(const ModuleSpec& s1, const ModuleSpec& s2);

/// Invertible S with S A1 = A2 S and S A1* = A2* S, if one exists among a
/// basis of the solution space.
std::optional<Matrix> find_intertwiner(const OnsagerModule& m1, const OnsagerModule& m2,
                                       std::size_t guard = kOracleGuard);

/// Throws ReducibleError unless both specs pass the criterion, DomainError
/// unless both have type shift (0,0).
bool is_isomorphic(const ModuleSpec& s1, const ModuleSpec& s2);

}  // namespace tetrabox
