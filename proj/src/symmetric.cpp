#include "gelfand/symmetric.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gelfand/rational.hpp"

namespace gelfand {

namespace {

long long mn_rec(std::vector<int> shape, std::vector<int> type);

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

long long mn_lookup(const std::vector<int>& shape, const std::vector<int>& type) {
  thread_local std::map<MnKey, long long> memo;
  MnKey key(shape, type);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long v = mn_rec(shape, type);
  memo.emplace(std::move(key), v);
  return v;
}

// Border-strip removal in beta-set coordinates: beta_i = shape_i + (K-1-i).
long long mn_rec(std::vector<int> shape, std::vector<int> type) {
  if (type.empty()) return shape.empty() ? 1 : 0;
  int m = type[0];
  std::vector<int> rest(type.begin() + 1, type.end());
  int K = static_cast<int>(shape.size());
  std::vector<int> beta(K);
  for (int i = 0; i < K; ++i) beta[i] = shape[i] + (K - 1 - i);
  long long total = 0;
  for (int i = 0; i < K; ++i) {
    int target = beta[i] - m;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < K; ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) height++;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> ns(K);
    for (int j = 0; j < K; ++j) ns[j] = nb[j] - (K - 1 - j);
    while (!ns.empty() && ns.back() == 0) ns.pop_back();
    long long sub = mn_lookup(ns, rest);
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long long mn_character(const Partition& shape, const Partition& cycle_type) {
  if (shape.size() != cycle_type.size())
    throw std::invalid_argument("mn_character: |shape| != |cycle_type|");
  return mn_lookup(shape.parts(), cycle_type.parts());
}

long long centralizer_order(const Partition& cycle_type) {
  std::map<int, int> mult;
  for (int len : cycle_type.parts()) mult[len]++;
  long long z = 1;
  for (auto [len, m] : mult) {
    for (int t = 0; t < m; ++t) z *= len;
    for (int t = 2; t <= m; ++t) z *= t;
  }
  return z;
}

std::vector<Partition> irs_constituents(int n, int f) {
  if (f < 0 || f > n || (n - f) % 2 != 0)
    throw std::invalid_argument("irs_constituents: need 0 <= f <= n, n == f (mod 2)");
  std::vector<Partition> out;
  for (const Partition& p : enumerate_partitions(n))
    if (odd_columns(p) == f) out.push_back(p);
  return out;
}

CentralizerDescriptor CentralizerDescriptor::standard(int k) {
  CentralizerDescriptor d;
  d.k = k;
  d.f = 0;
  for (int t = 0; t < k; ++t) d.pairs.emplace_back(2 * t, 2 * t + 1);
  return d;
}

Permutation CentralizerDescriptor::omega(int n) const {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  for (auto [i, j] : pairs) {
    im[i] = j;
    im[j] = i;
  }
  return Permutation(std::move(im));
}

int centralizer_linear_character(const CentralizerDescriptor& desc, int which,
                                 const Permutation& p) {
  if (desc.f != 0)
    throw std::invalid_argument("centralizer_linear_character: requires f = 0");
  int n = 2 * desc.k;
  Permutation w = desc.omega(n);
  if (compose(compose(p, w), p.inverse()) != w)
    throw std::invalid_argument("element does not centralize omega");
  switch (which) {
    case 1:
      return 1;
    case 2:
      return p.sgn();
    case 3: {
      // signature of the induced permutation of the 2-cycle blocks
      std::vector<int> block_of(n, -1);
      for (int t = 0; t < desc.k; ++t) {
        block_of[desc.pairs[t].first] = t;
        block_of[desc.pairs[t].second] = t;
      }
      std::vector<int> im(desc.k);
      for (int t = 0; t < desc.k; ++t)
        im[t] = block_of[p(desc.pairs[t].first)];
      return Permutation(std::move(im)).sgn();
    }
    case 4:
      return p.sgn() * centralizer_linear_character(desc, 3, p);
    default:
      throw std::invalid_argument("which must be 1..4");
  }
}

namespace {

// Enumerate C_{S_{2k}}(omega_k) as the image of Z_2 wr S_k: block j of the
// letters {2j, 2j+1} goes to block pi(j), swapped internally iff h_j = 1.
Permutation xi_embed(const std::vector<int>& h, const Permutation& pi) {
  int k = pi.n();
  std::vector<int> im(2 * k);
  for (int j = 0; j < k; ++j) {
    im[2 * j] = 2 * pi(j) + h[j];
    im[2 * j + 1] = 2 * pi(j) + 1 - h[j];
  }
  return Permutation(std::move(im));
}

struct LambdaSums {
  // per cycle type of the image in S_{2k}: sums of lambda_i over elements
  std::map<std::vector<int>, std::array<long long, 4>> by_type;
  long long order = 0;
};

LambdaSums centralizer_lambda_sums(int k) {
  LambdaSums acc;
  std::vector<int> h(k, 0);
  for (const Permutation& pi : enumerate_permutations(k)) {
    std::fill(h.begin(), h.end(), 0);
    int sgn_pi = pi.sgn();
    while (true) {
      Permutation img = xi_embed(h, pi);
      int ones = static_cast<int>(std::count(h.begin(), h.end(), 1));
      int l2 = (ones % 2 == 0) ? 1 : -1;  // sgn of the image in S_{2k}
      int l3 = sgn_pi;                    // block signature
      auto& sums = acc.by_type[img.cycle_type().parts()];
      sums[0] += 1;
      sums[1] += l2;
      sums[2] += l3;
      sums[3] += l2 * l3;
      acc.order++;
      // odometer over h
      int pos = 0;
      while (pos < k && h[pos] == 1) h[pos++] = 0;
      if (pos == k) break;
      h[pos] = 1;
    }
  }
  return acc;
}

}  // namespace

std::vector<std::pair<Partition, long long>> induce_centralizer_linear(
    int k, int which) {
  if (which < 1 || which > 4)
    throw std::invalid_argument("which must be 1..4");
  LambdaSums sums = centralizer_lambda_sums(k);
  std::vector<std::pair<Partition, long long>> out;
  for (const Partition& lam : enumerate_partitions(2 * k)) {
    Integer total = 0;
    for (const auto& [type, s] : sums.by_type)
      total += Integer(s[which - 1]) * mn_character(lam, Partition(type));
    if (total % Integer(sums.order) != 0)
      throw std::logic_error("induced multiplicity is not an integer");
    Integer mult = total / Integer(sums.order);
    if (mult < 0) throw std::logic_error("negative induced multiplicity");
    if (mult > 0) out.emplace_back(lam, mult.convert_to<long long>());
  }
  return out;
}

namespace {

struct Table1Data {
  int n, i;
  Partition w1, w2;
  std::vector<Partition> finals;  // one entry means multiplicity two
};

const std::vector<Table1Data>& table1_data() {
  static const std::vector<Table1Data> rows = {
      {8, 1, {4, 2}, {2, 2, 2}, {{4, 4}, {2, 2, 2, 2}}},
      {8, 2, {3, 3}, {2, 2, 1, 1}, {{4, 3, 1}, {3, 2, 2, 1}}},
      {8, 3, {3, 3}, {4, 1, 1}, {{4, 3, 1}}},
      {8, 4, {2, 2, 2}, {3, 1, 1, 1}, {{4, 2, 2}, {3, 3, 1, 1}}},
      {10, 1, {4, 4}, {2, 2, 2, 2}, {{5, 4, 1}, {3, 2, 2, 2, 1}}},
      {10, 2, {4, 4}, {2, 2, 2, 2}, {{5, 4, 1}, {3, 2, 2, 2, 1}}},
      {10, 3, {4, 3, 1}, {5, 1, 1, 1}, {{5, 3, 1, 1}}},
      {10, 4, {3, 2, 2, 1}, {4, 1, 1, 1, 1}, {{5, 2, 2, 1}, {4, 3, 1, 1, 1}}},
      {12, 1, {6, 4}, {2, 2, 2, 2, 2}, {{6, 6}, {2, 2, 2, 2, 2, 2}}},
      {12, 2, {5, 5}, {3, 3, 2, 2}, {{5, 5, 2}, {3, 3, 2, 2, 2}}},
      {12, 3, {5, 3, 1, 1}, {6, 1, 1, 1, 1}, {{6, 3, 1, 1, 1}}},
      {12, 4, {4, 2, 2, 1, 1}, {5, 1, 1, 1, 1, 1},
       {{6, 2, 2, 1, 1}, {5, 3, 1, 1, 1, 1}}},
      {14, 1, {6, 6}, {2, 2, 2, 2, 2, 2}, {{7, 6, 1}, {3, 2, 2, 2, 2, 2, 1}}},
      {14, 2, {6, 6}, {2, 2, 2, 2, 2, 2}, {{7, 6, 1}, {3, 2, 2, 2, 2, 2, 1}}},
      {14, 3, {6, 3, 1, 1, 1}, {7, 1, 1, 1, 1, 1}, {{7, 3, 1, 1, 1, 1}}},
      {14, 4, {5, 2, 2, 1, 1, 1}, {6, 1, 1, 1, 1, 1, 1},
       {{7, 2, 2, 1, 1, 1}, {6, 3, 1, 1, 1, 1, 1}}},
  };
  return rows;
}

}  // namespace

std::string Table1Row::describe() const {
  std::ostringstream os;
  os << "n=" << n << " i=" << i << ": witnesses " << tuple_string(witness1)
     << " and " << tuple_string(witness2) << " -> ";
  if (multiplicity_two) {
    os << tuple_string(final_shapes[0]) << " with multiplicity two";
  } else {
    os << tuple_string(final_shapes[0]) << " and "
       << tuple_string(final_shapes[1]);
  }
  os << (verified ? " [verified]" : " [FAILED]");
  return os.str();
}

Table1Row table1_row(int n, int i, bool allow_large) {
  if (n != 8 && n != 10 && n != 12 && n != 14)
    throw std::invalid_argument("table1_row: n must be 8, 10, 12 or 14");
  if (i < 1 || i > 4) throw std::invalid_argument("table1_row: i must be 1..4");
  if (n >= 12 && !allow_large)
    throw std::invalid_argument(
        "table1_row: n >= 12 requires the allow-large flag");
  const Table1Data* data = nullptr;
  for (const auto& row : table1_data())
    if (row.n == n && row.i == i) data = &row;
  if (!data) throw std::logic_error("missing table row");

  int k = (n - 2) / 2;
  auto decomposition = induce_centralizer_linear(k, i);
  auto mult_of = [&](const Partition& p) -> long long {
    for (const auto& [shape, m] : decomposition)
      if (shape == p) return m;
    return 0;
  };

  Table1Row row;
  row.n = n;
  row.i = i;
  row.witness1 = data->w1;
  row.witness2 = data->w2;
  row.mult1 = mult_of(data->w1);
  row.mult2 = mult_of(data->w2);
  row.final_shapes = data->finals;
  row.multiplicity_two = data->finals.size() == 1;

  auto p1 = pieri_add_two(data->w1);
  auto p2 = pieri_add_two(data->w2);
  auto contains = [](const std::vector<Partition>& v, const Partition& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
  };

  bool ok = row.mult1 >= 1 && row.mult2 >= 1;
  if (row.multiplicity_two) {
    // one shape reached from both witnesses
    ok = ok && contains(p1, data->finals[0]) && contains(p2, data->finals[0]);
    row.transpose_pair = true;  // vacuous: shapes not distinct
  } else {
    ok = ok && contains(p1, data->finals[0]) && contains(p2, data->finals[1]);
    row.transpose_pair = transpose(data->finals[0]) == data->finals[1];
    ok = ok && row.transpose_pair;
  }
  row.verified = ok;
  return row;
}

}  // namespace gelfand
