#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "gelfand/wreath.hpp"

namespace gelfand {

/// Fully enumerated A wr S_n with its ordinary conjugacy classes.
/// Elements are listed in canonical (lexicographic) order; each class is
/// sorted, so classes[c][0] is the lexicographically least representative,
/// and classes are ordered by that representative.
class GroupTable {
 public:
  GroupTable(AbelianGroupSpec spec, int n, bool allow_large);

  const AbelianGroupSpec& spec() const { return spec_; }
  int n() const { return n_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<WreathElement>& elements() const { return elements_; }
  const WreathElement& element(int i) const { return elements_[i]; }

  int index_of(const WreathElement& g) const;

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int element_index) const { return class_of_[element_index]; }
  int class_representative(int c) const { return classes_[c][0]; }
  long long class_size(int c) const { return static_cast<long long>(classes_[c].size()); }

  int multiply_idx(int a, int b) const;
  int inverse_idx(int a) const;

 private:
  AbelianGroupSpec spec_;
  int n_;
  std::vector<WreathElement> elements_;
  std::unordered_map<std::uint64_t, int> rank_to_index_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

std::shared_ptr<const GroupTable> make_group_table(const AbelianGroupSpec& spec,
                                                   int n,
                                                   bool allow_large = false);

/// Twisted conjugacy classes of the generalized involutions under
/// w -> g.w.g^T.  Orbits are sorted by representative; each orbit sorted.
struct TwistedClassTable {
  std::shared_ptr<const GroupTable> group;
  std::vector<WreathElement> involutions;          // all, canonical order
  std::vector<std::vector<int>> orbits;            // indices into involutions
  std::vector<int> orbit_of;                       // per involution
  std::unordered_map<std::uint64_t, int> involution_index;  // by wreath_rank

  const WreathElement& representative(int orbit) const {
    return involutions[orbits[orbit][0]];
  }
  int index_of_involution(const WreathElement& w) const;
  int orbit_of_involution(const WreathElement& w) const;
};

TwistedClassTable make_twisted_class_table(std::shared_ptr<const GroupTable> group);

/// Explicit subgroup of an enumerated group, with its own conjugacy
/// classes.  Closure under products and inverses is checked on
/// construction.
class SubgroupDescriptor {
 public:
  SubgroupDescriptor(std::shared_ptr<const GroupTable> group,
                     std::vector<int> member_indices);

  const GroupTable& group() const { return *group_; }
  std::shared_ptr<const GroupTable> group_ptr() const { return group_; }
  long long order() const { return static_cast<long long>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  bool contains(int element_index) const;

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_representative(int c) const { return classes_[c][0]; }
  long long class_size(int c) const { return static_cast<long long>(classes_[c].size()); }
  /// Subgroup-class of a member (element index into the ambient group).
  int class_of(int element_index) const;

 private:
  std::shared_ptr<const GroupTable> group_;
  std::vector<int> members_;                    // sorted
  std::vector<std::vector<int>> classes_;
  std::unordered_map<int, int> class_of_;
};

/// Subgroup from a membership predicate over the whole group.
template <typename Pred>
SubgroupDescriptor make_subgroup(std::shared_ptr<const GroupTable> group,
                                 Pred pred) {
  std::vector<int> members;
  for (int i = 0; i < group->order(); ++i)
    if (pred(group->element(i))) members.push_back(i);
  return SubgroupDescriptor(std::move(group), std::move(members));
}

/// Closure of a generating set, as a subgroup.
SubgroupDescriptor subgroup_closure(std::shared_ptr<const GroupTable> group,
                                    const std::vector<int>& generators);

/// tau-twisted centralizer of w: all g with g.w.tau(g)^{-1} = w (for the
/// inverse-transpose tau this is g.w.g^T = w).
SubgroupDescriptor twisted_centralizer(std::shared_ptr<const GroupTable> group,
                                       const WreathElement& w);

}  // namespace gelfand
