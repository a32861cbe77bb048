#ifndef ANOSOV_POSET_HPP
#define ANOSOV_POSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "anosov/spaces.hpp"

namespace anosov::poset {

enum class Certification { Exact, Sampled };

std::string certification_name(Certification c);

struct PosetNode {
  int id = 0;
  spaces::PositionFingerprint fingerprint;
  spaces::SpacePoint rep;  // pos(standard flag(s), rep) realizes this node
  std::string label;
  bool minimal = false;
  bool maximal = false;
  int rank = 0;           // longest chain from a minimal node
  int rank_from_top = 0;  // longest chain from a maximal node
};

struct BuildOptions {
  std::uint64_t seed = 20240915ull;
  int curves_per_node = 64;      // degeneration curves per node
  int perturbations_per_node = 96;
  int borel_samples_per_node = 256;  // transverse-relation witnesses
  int max_nodes = 64;
};

/// Finite poset of relative positions for one (family, theta) pair.
struct Poset {
  spaces::FamilySpec spec;
  std::vector<PosetNode> nodes;
  std::vector<std::vector<bool>> leq;        // leq[a][b]  <=>  a <= b
  std::vector<std::pair<int, int>> covers;   // (lower, upper)
  std::vector<int> w0_map;                   // involution on node ids
  std::vector<std::vector<bool>> trans_rel;  // symmetric, upward closed
  Certification order_certification = Certification::Sampled;
  Certification trans_certification = Certification::Sampled;
  std::vector<std::string> discrepancies;  // uncertified order pairs, listed not resolved
  std::uint64_t seed = 0;

  int size() const { return static_cast<int>(nodes.size()); }
  /// Node id of a fingerprint, or -1.
  int find(const spaces::PositionFingerprint& fp) const;
  std::vector<int> minimal_ids() const;
  std::vector<int> maximal_ids() const;
  bool unique_minimal() const { return minimal_ids().size() == 1; }
};

/// Exact orbit list from the closed-form representative enumeration of the
/// family (double cosets / clans / the quadratic-form invariant table / the
/// two-element pseudo-hyperbolic list).  Rejects lists above max_nodes.
std::vector<PosetNode> enumerate_positions(const spaces::FamilySpec& spec, int max_nodes = 64);

/// Full poset build: closure order from the semicontinuity upper bound and
/// witnessed degenerations, w0 involution, transverse relation.
Poset build_poset(const spaces::FamilySpec& spec, const BuildOptions& opt = {});

/// Semicontinuity comparator: true when a can lie in the closure of b as far
/// as the invariant inequalities allow (upper bound for a <= b).
bool semicontinuity_leq(const spaces::FamilySpec& spec,
                        const spaces::PositionFingerprint& a,
                        const spaces::PositionFingerprint& b);

/// For full-flag flag-flag nodes: the Weyl group element whose rank matrix
/// matches the node's intersection-dimension matrix.
weyl::Permutation node_permutation(const Poset& poset, int id);

/// Minimal positions of the complementary-pair family together with the
/// w0 action restricted to them, computed without building the full poset
/// (the full orbit list can exceed the poset size cap for d = 6).
struct MinimalStratum {
  int clan_count = 0;        // all orbits
  int minimal_count = 0;     // pair-free clans, verified minimal by semicontinuity
  int w0_fixed_count = 0;    // fixed points of w0 on the minimal stratum
  std::vector<std::string> minimal_labels;
};
MinimalStratum complementary_minimal_stratum(int d, int p);

}  // namespace anosov::poset

#endif
