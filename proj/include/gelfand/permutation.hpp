#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gelfand/partition.hpp"

namespace gelfand {

/// Permutation of {1..n}, stored 0-based: images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based images
  static Permutation identity(int n);
  /// Build from 1-based images, e.g. {3,1,2}.
  static Permutation from_one_line(const std::vector<int>& images1);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  std::vector<std::vector<int>> cycles() const;  // 0-based, increasing min
  Partition cycle_type() const;
  int sgn() const;

  /// One-line notation with 1-based letters: "3 1 2".
  std::string to_string() const;
  /// Accepts one-line "3 1 2" or cycle notation "(1 3 2)(4 5)"; n letters.
  static Permutation parse(const std::string& s, int n);

 private:
  std::vector<int> images_;
};

/// compose(p, q) = p after q: i -> p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// Inversions {(i,j) : i < j, p(i) > p(j)}, 0-based pairs.
std::vector<std::pair<int, int>> inv_set(const Permutation& p);

/// 2-cycles {(i,j) : i < j, w(i) = j, w(j) = i} of an involution.
std::vector<std::pair<int, int>> pair_set(const Permutation& w);

int fixed_point_count(const Permutation& w);

/// sign_{S_n}(p, w) = (-1)^{|Inv(p) cap Pair(w)|} for an involution w.
int sign_sym(const Permutation& p, const Permutation& w);

std::vector<Permutation> enumerate_permutations(int n);

}  // namespace gelfand
