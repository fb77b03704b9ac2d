#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tetrabox/flags.hpp"
#include "tetrabox/onsager.hpp"
#include "tetrabox/report.hpp"

namespace tetrabox {

/// Ordered pair (r, s) of distinct indices in {0,1,2,3}.
using IndexPair = std::pair<int, int>;

/// The twelve ordered pairs, lexicographic: 01 02 03 10 12 13 20 21 23 30 31 32.
const std::vector<IndexPair>& ordered_pairs();
/// The six pairs with r < s.
const std::vector<IndexPair>& unordered_pairs();
std::string pair_name(const IndexPair& p);

/// Matrices x_rs for all twelve ordered pairs, together with the four flags
/// they were assembled from (absent for modules read back from disk).
struct TetraModule {
  std::size_t dim = 0;
  std::size_t d = 0;
  std::map<IndexPair, Matrix> x;
  std::optional<std::array<Flag, 4>> flags;

  const Matrix& operator()(int r, int s) const;
};

struct BuildOptions {
  /// Run the Burnside test before assembling (skipped above kOracleGuard).
  bool check_irreducible = true;
};

/// x_rs = P D P^-1 where the columns of P run through the decomposition
/// induced by flags r and s and D is 2i-d on its i-th part. Throws
/// ModuleTypeError for a type other than (0,0) and ReducibleError naming the
/// first pair of flags that fails to be opposite.
TetraModule build_tetra(const OnsagerModule& m, const BuildOptions& options = {});

/// Every instance of antisymmetry (6), [x_rs,x_st] = 2x_rs + 2x_st (24) and
/// [x_rs,[x_rs,[x_rs,x_tu]]] = 4[x_rs,x_tu] (24).
Report verify_relations(const TetraModule& t);

/// dim V_rs(lambda) for lambda = d, d-2, ..., -d and each of the six pairs r < s.
struct EigenTable {
  std::size_t d = 0;
  std::vector<Rational> eigenvalues;
  std::map<IndexPair, std::vector<std::size_t>> dims;
  bool constant_across_pairs = false;
  bool symmetric = false;       // dim V(lambda) = dim V(-lambda)
  bool sums_to_dim = false;     // every generator diagonalizable on {d-2i}
  bool all_nonzero = false;     // every d-2i is an eigenvalue

  bool ok() const { return constant_across_pairs && symmetric && sums_to_dim && all_nonzero; }
};

EigenTable eigentable(const TetraModule& t);

/// Which row of the action table applies to X_tu on V_rs(lambda).
enum class ActionRow { kSame, kReversed, kTEqualsS, kUEqualsS, kTEqualsR, kUEqualsR, kDistinct };
ActionRow classify_action_row(const IndexPair& rs, const IndexPair& tu);
std::string row_name(ActionRow row);

/// Checks the applicable inclusion for every (r,s), (t,u) and lambda = d-2i.
Report verify_action_table(const TetraModule& t);

/// Partial eigenspace sums V_rs(lambda) + V_rs(lambda-2) + ... do not depend on s.
Report flag_independence_report(const TetraModule& t);
bool flag_independence_check(const TetraModule& t);

/// For every bracket instance A = x_rs, B = x_st and lambda: ([A,B]-2A-2B)
/// vanishes on V_A(lambda) exactly when (B+lambda I) V_A(lambda) ⊆ V_A(lambda+2).
Report shift_lemma_report(const TetraModule& t);

/// Burnside test on (x_rs, x_tu) for the three pairings of {0,1,2,3}.
Report pairwise_irreducibility_report(const TetraModule& t);

/// x_01 == A and x_23 == A*.
Report identification_report(const TetraModule& t, const OnsagerModule& m);

/// Flags 0..3 recomputed from the generators: flag r from the ascending
/// eigenspaces of x_rs for the smallest s != r.
std::array<Flag, 4> flags_from_generators(const TetraModule& t);

/// Build, read (x_01, x_23) back as an Onsager module, rebuild, and compare
/// all twelve matrices bit for bit; also requires x_01 == A and x_23 == A*.
bool roundtrip_uniqueness(const OnsagerModule& m);

}  // namespace tetrabox
