#include "gelfand/group_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gelfand {

GroupTable::GroupTable(AbelianGroupSpec spec, int n, bool allow_large)
    : spec_(std::move(spec)), n_(n) {
  elements_ = enumerate_wreath_group(spec_, n_, allow_large);
  rank_to_index_.reserve(elements_.size() * 2);
  for (size_t i = 0; i < elements_.size(); ++i)
    rank_to_index_.emplace(wreath_rank(elements_[i]), static_cast<int>(i));

  // Conjugacy classes: orbit partition under conjugation by a generating
  // set, with the colored cycle type as a cross-check invariant.
  std::vector<WreathElement> gens = wreath_generators(spec_, n_);
  class_of_.assign(elements_.size(), -1);
  for (size_t start = 0; start < elements_.size(); ++start) {
    if (class_of_[start] != -1) continue;
    int cls = static_cast<int>(classes_.size());
    std::vector<int> members{static_cast<int>(start)};
    class_of_[start] = cls;
    for (size_t qi = 0; qi < members.size(); ++qi) {
      const WreathElement& h = elements_[members[qi]];
      for (const WreathElement& g : gens) {
        int idx = index_of(conjugate_by(g, h));
        if (class_of_[idx] == -1) {
          class_of_[idx] = cls;
          members.push_back(idx);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
  std::sort(classes_.begin(), classes_.end());
  for (size_t c = 0; c < classes_.size(); ++c) {
    ColoredCycleType type = colored_cycle_type(elements_[classes_[c][0]]);
    for (int idx : classes_[c]) {
      class_of_[idx] = static_cast<int>(c);
      if (colored_cycle_type(elements_[idx]) != type)
        throw std::logic_error("conjugacy class crosses cycle-type buckets");
    }
  }
}

int GroupTable::index_of(const WreathElement& g) const {
  auto it = rank_to_index_.find(wreath_rank(g));
  if (it == rank_to_index_.end())
    throw std::invalid_argument("element not in group table");
  return it->second;
}

int GroupTable::multiply_idx(int a, int b) const {
  return index_of(multiply(elements_[a], elements_[b]));
}

int GroupTable::inverse_idx(int a) const { return index_of(inverse(elements_[a])); }

std::shared_ptr<const GroupTable> make_group_table(const AbelianGroupSpec& spec,
                                                   int n, bool allow_large) {
  return std::make_shared<const GroupTable>(spec, n, allow_large);
}

int TwistedClassTable::index_of_involution(const WreathElement& w) const {
  auto it = involution_index.find(wreath_rank(w));
  if (it == involution_index.end())
    throw std::invalid_argument("element is not a generalized involution here");
  return it->second;
}

int TwistedClassTable::orbit_of_involution(const WreathElement& w) const {
  return orbit_of[index_of_involution(w)];
}

TwistedClassTable make_twisted_class_table(
    std::shared_ptr<const GroupTable> group) {
  TwistedClassTable t;
  t.group = group;
  for (const WreathElement& g : group->elements())
    if (is_symmetric(g)) t.involutions.push_back(g);
  for (size_t i = 0; i < t.involutions.size(); ++i)
    t.involution_index.emplace(wreath_rank(t.involutions[i]),
                               static_cast<int>(i));
  std::vector<WreathElement> gens = wreath_generators(group->spec(), group->n());
  t.orbit_of.assign(t.involutions.size(), -1);
  for (size_t start = 0; start < t.involutions.size(); ++start) {
    if (t.orbit_of[start] != -1) continue;
    int orb = static_cast<int>(t.orbits.size());
    std::vector<int> members{static_cast<int>(start)};
    t.orbit_of[start] = orb;
    for (size_t qi = 0; qi < members.size(); ++qi) {
      const WreathElement& w = t.involutions[members[qi]];
      for (const WreathElement& g : gens) {
        int idx = t.index_of_involution(twisted_conjugate(g, w));
        if (t.orbit_of[idx] == -1) {
          t.orbit_of[idx] = orb;
          members.push_back(idx);
        }
      }
    }
    std::sort(members.begin(), members.end());
    t.orbits.push_back(std::move(members));
  }
  // involutions are in canonical order, so orbits are already sorted by
  // their least member (start indices increase)
  return t;
}

SubgroupDescriptor::SubgroupDescriptor(std::shared_ptr<const GroupTable> group,
                                       std::vector<int> member_indices)
    : group_(std::move(group)), members_(std::move(member_indices)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw std::invalid_argument("empty subgroup");
  if (static_cast<long long>(members_.size()) == group_->order()) {
    // the whole group: reuse its class data
    classes_ = group_->classes();
    for (size_t c = 0; c < classes_.size(); ++c)
      for (int idx : classes_[c]) class_of_[idx] = static_cast<int>(c);
    return;
  }
  // closure check
  for (int a : members_) {
    if (!contains(group_->inverse_idx(a)))
      throw std::invalid_argument("element set not closed under inverses");
    for (int b : members_)
      if (!contains(group_->multiply_idx(a, b)))
        throw std::invalid_argument("element set not closed under products");
  }
  // subgroup conjugacy classes
  std::map<int, int> cls_of;
  for (int start : members_) {
    if (cls_of.count(start)) continue;
    std::vector<int> orbit{start};
    cls_of[start] = static_cast<int>(classes_.size());
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      for (int g : members_) {
        int c = group_->index_of(conjugate_by(group_->element(g),
                                              group_->element(orbit[qi])));
        if (!cls_of.count(c)) {
          cls_of[c] = static_cast<int>(classes_.size());
          orbit.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes_.push_back(std::move(orbit));
  }
  std::sort(classes_.begin(), classes_.end());
  for (size_t c = 0; c < classes_.size(); ++c)
    for (int idx : classes_[c]) class_of_[idx] = static_cast<int>(c);
}

bool SubgroupDescriptor::contains(int element_index) const {
  return std::binary_search(members_.begin(), members_.end(), element_index);
}

int SubgroupDescriptor::class_of(int element_index) const {
  auto it = class_of_.find(element_index);
  if (it == class_of_.end())
    throw std::invalid_argument("element not in subgroup");
  return it->second;
}

SubgroupDescriptor subgroup_closure(std::shared_ptr<const GroupTable> group,
                                    const std::vector<int>& generators) {
  std::vector<int> members{group->index_of(
      WreathElement::identity(group->spec(), group->n()))};
  std::vector<bool> in(group->order(), false);
  in[members[0]] = true;
  for (int g : generators)
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  for (size_t qi = 0; qi < members.size(); ++qi) {
    for (int g : generators) {
      int p = group->multiply_idx(members[qi], g);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
      int q = group->multiply_idx(g, members[qi]);
      if (!in[q]) {
        in[q] = true;
        members.push_back(q);
      }
    }
  }
  return SubgroupDescriptor(std::move(group), std::move(members));
}

SubgroupDescriptor twisted_centralizer(std::shared_ptr<const GroupTable> group,
                                       const WreathElement& w) {
  if (!is_symmetric(w))
    throw std::invalid_argument("twisted centralizer needs a symmetric element");
  std::vector<int> members;
  for (int i = 0; i < group->order(); ++i)
    if (twisted_conjugate(group->element(i), w) == w) members.push_back(i);
  return SubgroupDescriptor(std::move(group), std::move(members));
}

}  // namespace gelfand
