#include "gelfand/rsk.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gelfand/model.hpp"

namespace gelfand {

void TwoLineArray::validate() const {
  if (top.size() != bottom.size())
    throw std::invalid_argument("two-line array: length mismatch");
  for (size_t i = 0; i + 1 < top.size(); ++i) {
    if (top[i] > top[i + 1] ||
        (top[i] == top[i + 1] && bottom[i] > bottom[i + 1]))
      throw std::invalid_argument("two-line array: columns not lex ordered");
  }
  for (int v : top)
    if (v < 1) throw std::invalid_argument("two-line array: entries must be positive");
  for (int v : bottom)
    if (v < 1) throw std::invalid_argument("two-line array: entries must be positive");
}

TwoLineArray TwoLineArray::of_permutation(const Permutation& p) {
  TwoLineArray arr;
  for (int i = 0; i < p.n(); ++i) {
    arr.top.push_back(i + 1);
    arr.bottom.push_back(p(i) + 1);
  }
  return arr;
}

Partition Tableau::shape() const {
  std::vector<int> lens;
  for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lens));
}

bool Tableau::is_standard() const {
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j + 1 < rows[i].size(); ++j)
      if (rows[i][j] >= rows[i][j + 1]) return false;
    if (i + 1 < rows.size()) {
      if (rows[i + 1].size() > rows[i].size()) return false;
      for (size_t j = 0; j < rows[i + 1].size(); ++j)
        if (rows[i][j] >= rows[i + 1][j]) return false;
    }
  }
  return true;
}

namespace {

void insert_pair(Tableau& P, Tableau& Q, int a, int b) {
  size_t row = 0;
  int carry = b;
  while (true) {
    if (row == P.rows.size()) {
      P.rows.push_back({carry});
      Q.rows.push_back({a});
      return;
    }
    auto& r = P.rows[row];
    auto it = std::upper_bound(r.begin(), r.end(), carry);
    if (it == r.end()) {
      r.push_back(carry);
      Q.rows[row].push_back(a);
      return;
    }
    std::swap(*it, carry);
    row++;
  }
}

}  // namespace

std::pair<Tableau, Tableau> rsk(const TwoLineArray& arr) {
  arr.validate();
  Tableau P, Q;
  for (size_t i = 0; i < arr.top.size(); ++i)
    insert_pair(P, Q, arr.top[i], arr.bottom[i]);
  return {std::move(P), std::move(Q)};
}

std::pair<Tableau, Tableau> rsk(const Permutation& p) {
  return rsk(TwoLineArray::of_permutation(p));
}

RPartitePartition ColoredBitableau::shape() const {
  std::vector<Partition> comps;
  for (const Tableau& t : P) comps.push_back(t.shape());
  return RPartitePartition(std::move(comps));
}

ColoredBitableau colored_rsk(const WreathElement& g) {
  if (g.spec().num_factors() != 1)
    throw std::invalid_argument("colored RSK is defined for cyclic color groups");
  int r = g.spec().factors()[0];
  ColoredBitableau out;
  out.P.resize(r);
  out.Q.resize(r);
  for (int j = 0; j < r; ++j) {
    TwoLineArray arr;
    for (int i = 0; i < g.n(); ++i) {
      if (g.color(i)[0] != j) continue;
      arr.top.push_back(i + 1);
      arr.bottom.push_back(g.perm()(i) + 1);
    }
    auto [p, q] = rsk(arr);
    out.P[j] = std::move(p);
    out.Q[j] = std::move(q);
  }
  return out;
}

std::vector<int> rsk_shape_statistics(const WreathElement& w) {
  if (!is_symmetric(w))
    throw std::invalid_argument("rsk_shape_statistics needs a symmetric element");
  ColoredBitableau bt = colored_rsk(w);
  std::vector<int> out;
  for (const Tableau& t : bt.P) out.push_back(odd_columns(t.shape()));
  return out;
}

std::vector<WreathElement> twisted_orbit_of(
    std::shared_ptr<const GroupTable> group, const WreathElement& w) {
  TwistedClassTable twisted = make_twisted_class_table(group);
  int orbit = twisted.orbit_of_involution(w);
  std::vector<WreathElement> out;
  for (int idx : twisted.orbits[orbit]) out.push_back(twisted.involutions[idx]);
  return out;
}

RskTheoremReport verify_conjecture(std::shared_ptr<const GroupTable> group,
                                   const std::vector<WreathElement>& X) {
  RskTheoremReport report;
  auto fail = [&](const std::string& msg) {
    if (report.first_violation.empty()) report.first_violation = msg;
  };
  TwistedClassTable twisted = make_twisted_class_table(group);
  // X must be a union of twisted orbits
  std::set<int> member_indices, orbit_ids;
  for (const WreathElement& w : X) {
    int idx = twisted.index_of_involution(w);  // throws if not symmetric
    member_indices.insert(idx);
    orbit_ids.insert(twisted.orbit_of[idx]);
  }
  size_t union_size = 0;
  for (int orb : orbit_ids) union_size += twisted.orbits[orb].size();
  if (union_size != member_indices.size())
    throw std::invalid_argument("X is not a union of twisted conjugacy classes");
  report.span_size = static_cast<long long>(member_indices.size());

  // RSK shapes of the members
  std::set<CharacterLabel> shapes;
  for (int idx : member_indices)
    shapes.insert(CharacterLabel{colored_rsk(twisted.involutions[idx]).shape()});
  report.rsk_shapes.assign(shapes.begin(), shapes.end());
  for (const CharacterLabel& label : report.rsk_shapes)
    report.syt_total += count_rpartite_syt(label.theta);

  // exact subrepresentation character of span(X)
  AbelianSignFn sign_a = concrete_sign(group->spec());
  ClassFunction sub_char = class_function_from(
      group, [&](const WreathElement& g) {
        long long t = 0;
        for (int idx : member_indices) {
          const WreathElement& w = twisted.involutions[idx];
          if (twisted_conjugate(g, w) == w) t += sign_wreath(g, w, sign_a);
        }
        return Cyclotomic(t);
      });
  for (auto& [label, mult] : decompose(sub_char)) {
    if (mult == 0) continue;
    if (mult != 1) fail("constituent chi_" + label.to_string() +
                        " has multiplicity " + std::to_string(mult));
    report.constituents.push_back(label);
  }
  std::sort(report.constituents.begin(), report.constituents.end());
  if (report.constituents != report.rsk_shapes)
    fail("constituent set differs from the colored-RSK shape set");
  if (report.span_size != report.syt_total)
    fail("|X| = " + std::to_string(report.span_size) +
         " but the shapes admit " + std::to_string(report.syt_total) +
         " r-partite tableaux");
  report.pass = report.first_violation.empty();
  return report;
}

std::string tableau_json(const Tableau& t) {
  std::string s = "[";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(t.rows[i][j]);
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace gelfand
