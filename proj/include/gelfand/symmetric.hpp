#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gelfand/partition.hpp"
#include "gelfand/permutation.hpp"

namespace gelfand {

/// Irreducible S_n character value chi^shape at the class cycle_type
/// (Murnaghan-Nakayama rule, memoized).
long long mn_character(const Partition& shape, const Partition& cycle_type);

/// |S_n| / (size of the class with this cycle type) = prod i^{m_i} m_i!.
long long centralizer_order(const Partition& cycle_type);

/// Partitions of n with exactly f odd columns: the constituents of
/// Ind_{C_{S_n}(w)}^{S_n}(sign_{S_n}(.,w)) for an involution w with f
/// fixed points.
std::vector<Partition> irs_constituents(int n, int f);

/// Centralizer C_{S_{2k}}(w) of a fixed-point-free involution w given by
/// its 2-cycles.
struct CentralizerDescriptor {
  int k = 0;                              // number of 2-cycles
  int f = 0;                              // fixed points (2k + f = n)
  std::vector<std::pair<int, int>> pairs; // 0-based, i < j, disjoint

  static CentralizerDescriptor standard(int k);  // pairs (2t, 2t+1)
  Permutation omega(int n) const;
};

/// The four linear characters of C_{S_{2k}}(w), f = 0:
///   1: trivial   2: sgn   3: signature on the set of 2-cycle blocks
///   4: sgn * (3)
int centralizer_linear_character(const CentralizerDescriptor& desc, int which,
                                 const Permutation& p);

/// One row of the induced-character table for S_n, n in {8,10,12,14}:
/// two constituents of Ind_{C_{S_{n-2}}(w)}^{S_{n-2}}(lambda_i) whose
/// Pieri shapes coincide or form a transpose pair.
struct Table1Row {
  int n = 0;
  int i = 0;
  Partition witness1, witness2;          // partitions of n-2
  long long mult1 = 0, mult2 = 0;        // multiplicities in Ind(lambda_i)
  std::vector<Partition> final_shapes;   // of n; one entry => multiplicity two
  bool multiplicity_two = false;
  bool transpose_pair = false;           // final shapes transpose when distinct
  bool verified = false;
  std::string describe() const;
};

/// Computes the row exactly; n in {12,14} requires allow_large.
Table1Row table1_row(int n, int i, bool allow_large = false);

/// Full decomposition of Ind_{C_{S_{2k}}(w)}^{S_{2k}}(lambda_which) for the
/// standard fixed-point-free involution w; returns (shape, multiplicity)
/// with multiplicity >= 1, shapes in decreasing lexicographic order.
std::vector<std::pair<Partition, long long>> induce_centralizer_linear(
    int k, int which);

}  // namespace gelfand
