#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gelfand/characters.hpp"

namespace gelfand {

/// Two-line array with lexicographically ordered columns; for permutation
/// input both lines are duplicate-free.
struct TwoLineArray {
  std::vector<int> top;     // increasing positive integers
  std::vector<int> bottom;  // same length

  void validate() const;
  static TwoLineArray of_permutation(const Permutation& p);  // 1-based lines
};

/// Young tableau filling; rows strictly increase left-to-right, columns
/// top-to-bottom (entries need not be 1..n: colored RSK fills with subsets).
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  bool is_standard() const;  // row/column strict
  bool operator==(const Tableau& o) const { return rows == o.rows; }
};

/// Schensted row insertion.
std::pair<Tableau, Tableau> rsk(const TwoLineArray& arr);
std::pair<Tableau, Tableau> rsk(const Permutation& p);

/// Same-shape pair of r-partite tableaux fillings.
struct ColoredBitableau {
  std::vector<Tableau> P, Q;

  RPartitePartition shape() const;
  bool p_equals_q() const { return P == Q; }
};

/// Stanton-White colored RSK: ordinary RSK on each color fiber
/// { i : z_g(i) = zeta_r^j }, top line the positions in increasing order.
ColoredBitableau colored_rsk(const WreathElement& g);

/// Per-color odd-column counts of the insertion shape of a symmetric
/// element; equal to the fixed-point color counts.
std::vector<int> rsk_shape_statistics(const WreathElement& w);

struct RskTheoremReport {
  bool pass = false;
  long long span_size = 0;
  long long syt_total = 0;
  std::vector<CharacterLabel> rsk_shapes;  // deduplicated, sorted
  std::vector<CharacterLabel> constituents;
  std::string first_violation;
};

/// Verifies that the subrepresentation spanned by X (a union of twisted
/// orbits) decomposes as the multiplicity-free sum over the colored-RSK
/// shapes of X, and that |X| equals the number of matching r-partite SYT.
RskTheoremReport verify_conjecture(std::shared_ptr<const GroupTable> group,
                                   const std::vector<WreathElement>& X);

/// The full orbit of w under twisted conjugation, as a sorted element list.
std::vector<WreathElement> twisted_orbit_of(
    std::shared_ptr<const GroupTable> group, const WreathElement& w);

std::string tableau_json(const Tableau& t);

}  // namespace gelfand
