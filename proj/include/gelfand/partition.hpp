#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gelfand {

/// Integer partition: weakly decreasing positive parts.  The empty
/// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }          // sum of parts
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;                      // 0 for i >= num_parts

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string to_string() const;              // "[3,1,1]", "[]"
  static Partition from_string(const std::string& s);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition transpose(const Partition& p);

/// Tuple form "(4,3,1)", "()" for empty.
std::string tuple_string(const Partition& p);

/// Number of odd-length columns of the Ferrers diagram.
int odd_columns(const Partition& p);

bool all_even_rows(const Partition& p);
bool all_even_columns(const Partition& p);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// Partitions of |p|+2 obtained by adding two boxes in distinct columns
/// (a horizontal 2-strip).  Sorted in decreasing lexicographic order.
std::vector<Partition> pieri_add_two(const Partition& p);

/// Number of standard Young tableaux of shape p (hook length formula).
long long count_syt(const Partition& p);

/// r-tuple of partitions with given total size; indexes Irr(Z_r wr S_n).
class RPartitePartition {
 public:
  RPartitePartition() = default;
  explicit RPartitePartition(std::vector<Partition> components);

  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(int i) const { return components_.at(i); }
  int num_components() const { return static_cast<int>(components_.size()); }
  int total() const { return total_; }

  bool operator==(const RPartitePartition& o) const {
    return components_ == o.components_;
  }
  bool operator!=(const RPartitePartition& o) const { return !(*this == o); }
  bool operator<(const RPartitePartition& o) const {
    return components_ < o.components_;
  }

  std::string to_string() const;              // "([2],[1,1],[])"
  static RPartitePartition from_string(const std::string& s);

 private:
  std::vector<Partition> components_;
  int total_ = 0;
};

/// All r-partite partitions of n.  Component sizes run through the
/// compositions of n in decreasing lexicographic order; partitions within
/// each component in decreasing lexicographic order, first component
/// varying slowest.
std::vector<RPartitePartition> enumerate_rpartite(int r, int n);

/// Number of r-partite standard Young tableaux of the given shape.
long long count_rpartite_syt(const RPartitePartition& shape);

}  // namespace gelfand
