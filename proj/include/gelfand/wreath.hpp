#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gelfand/abelian.hpp"
#include "gelfand/permutation.hpp"

namespace gelfand {

/// Element of G_n = A wr S_n: an underlying permutation |g| plus one color
/// z_g(i) in A per position i.  As a generalized permutation matrix, the
/// entry of column i sits in row |g|(i) and equals z_g(i).
class WreathElement {
 public:
  WreathElement() = default;
  WreathElement(AbelianGroupSpec spec, Permutation perm,
                std::vector<AbelianElement> colors);
  static WreathElement identity(const AbelianGroupSpec& spec, int n);

  const AbelianGroupSpec& spec() const { return spec_; }
  int n() const { return perm_.n(); }
  const Permutation& perm() const { return perm_; }
  AbelianElement color(int i) const;
  const std::vector<int>& flat_colors() const { return colors_; }

  bool operator==(const WreathElement& o) const {
    return perm_ == o.perm_ && colors_ == o.colors_;
  }
  bool operator!=(const WreathElement& o) const { return !(*this == o); }
  /// Lexicographic by (perm images, colors); the enumeration order.
  bool operator<(const WreathElement& o) const;

  /// Sum of all colors: the exponent such that det(g)/det(|g|) is the
  /// corresponding root of unity.
  AbelianElement color_sum() const;

  std::string to_string() const;  // "perm=2 1; colors=1,0"
  static WreathElement parse(const AbelianGroupSpec& spec, int n,
                             const std::string& s);

 private:
  AbelianGroupSpec spec_;
  Permutation perm_;
  std::vector<int> colors_;  // flattened, num_factors residues per position
  friend WreathElement multiply(const WreathElement&, const WreathElement&);
  friend WreathElement inverse(const WreathElement&);
  friend WreathElement transpose(const WreathElement&);
  friend WreathElement tau(const WreathElement&, Tau);
};

/// Group product, consistent with generalized-permutation-matrix
/// multiplication: |gh| = |g||h| and z_{gh}(i) = z_g(|h|(i)) + z_h(i).
WreathElement multiply(const WreathElement& g, const WreathElement& h);
WreathElement inverse(const WreathElement& g);
/// Matrix transpose: g^T = tau(g^{-1}) for tau = color inversion.
WreathElement transpose(const WreathElement& g);
/// Extension of the order-2 automorphism of A: acts on colors, fixes |g|.
WreathElement tau(const WreathElement& g, Tau t = Tau::inversion);

bool is_symmetric(const WreathElement& g);  // g^T == g

/// g . w . g^T, the twisted conjugate for tau = inversion.
WreathElement twisted_conjugate(const WreathElement& g, const WreathElement& w);
/// g . h . g^{-1}.
WreathElement conjugate_by(const WreathElement& g, const WreathElement& h);

/// Rank of g in the canonical enumeration (perm lex outer, colors lex inner).
std::uint64_t wreath_rank(const WreathElement& g);

long long wreath_group_order(const AbelianGroupSpec& spec, int n);

inline constexpr long long kEnumerationGuard = 10'000'000;

/// All of A wr S_n in canonical order; guarded at 10^7 elements unless
/// allow_large.
std::vector<WreathElement> enumerate_wreath_group(const AbelianGroupSpec& spec,
                                                  int n,
                                                  bool allow_large = false);

/// All omega with omega^T == omega, in canonical order (same guard).
std::vector<WreathElement> generalized_involutions(const AbelianGroupSpec& spec,
                                                   int n,
                                                   bool allow_large = false);

/// Standard generating set: adjacent transpositions plus one color
/// generator per nontrivial cyclic factor.
std::vector<WreathElement> wreath_generators(const AbelianGroupSpec& spec, int n);

/// Multiset of (cycle length, cycle color sum), sorted: a complete ordinary
/// conjugacy invariant for abelian A.
using ColoredCycleType = std::vector<std::pair<int, AbelianElement>>;
ColoredCycleType colored_cycle_type(const WreathElement& g);

}  // namespace gelfand
