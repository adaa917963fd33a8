#include "gelfand/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gelfand/rational.hpp"

namespace gelfand {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::part(int i) const {
  return (i >= 0 && i < num_parts()) ? parts_[i] : 0;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::from_string(const std::string& s) {
  size_t a = s.find('[');
  size_t b = s.find(']');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw std::invalid_argument("malformed partition literal: " + s);
  std::string body = s.substr(a + 1, b - a - 1);
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

std::string tuple_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.num_parts(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.part(i));
  }
  return s + ")";
}

Partition transpose(const Partition& p) {
  if (p.num_parts() == 0) return Partition{};
  std::vector<int> cols(p.part(0), 0);
  for (int i = 0; i < p.num_parts(); ++i)
    for (int j = 0; j < p.part(i); ++j) cols[j]++;
  return Partition(std::move(cols));
}

int odd_columns(const Partition& p) {
  int count = 0;
  for (int j = 0; j < p.part(0); ++j) {
    int len = 0;
    for (int i = 0; i < p.num_parts(); ++i)
      if (p.part(i) > j) len++;
    if (len % 2 == 1) count++;
  }
  return count;
}

bool all_even_rows(const Partition& p) {
  for (int x : p.parts())
    if (x % 2 != 0) return false;
  return true;
}

bool all_even_columns(const Partition& p) { return odd_columns(p) == 0; }

namespace {

void enumerate_rec(int n, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    acc.push_back(k);
    enumerate_rec(n - k, k, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_rec(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Partition> pieri_add_two(const Partition& p) {
  std::vector<Partition> out;
  int rows = p.num_parts() + 2;
  // two boxes in the same row i (columns p_i+1, p_i+2 are distinct)
  for (int i = 0; i < rows; ++i) {
    std::vector<int> q;
    for (int t = 0; t < std::max(rows, p.num_parts()); ++t) q.push_back(p.part(t));
    q[i] += 2;
    if (i == 0 || q[i - 1] >= q[i]) {
      out.push_back(Partition(q));
    }
  }
  // one box each in rows i < j, distinct columns p_i+1 != p_j+1
  for (int i = 0; i < rows; ++i) {
    for (int j = i + 1; j < rows; ++j) {
      if (p.part(i) == p.part(j)) continue;  // same target column
      std::vector<int> q;
      for (int t = 0; t < std::max(rows, p.num_parts()); ++t) q.push_back(p.part(t));
      q[i] += 1;
      q[j] += 1;
      bool ok = true;
      for (size_t t = 0; t + 1 < q.size(); ++t)
        if (q[t] < q[t + 1]) ok = false;
      if (ok) out.push_back(Partition(q));
    }
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return b < a;  // decreasing lexicographic
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long count_syt(const Partition& p) {
  // n! / prod(hooks), exact
  Integer num = 1;
  for (int i = 2; i <= p.size(); ++i) num *= i;
  Integer den = 1;
  Partition t = transpose(p);
  for (int i = 0; i < p.num_parts(); ++i)
    for (int j = 0; j < p.part(i); ++j)
      den *= (p.part(i) - j) + (t.part(j) - i) - 1;
  Integer q = num / den;
  if (q * den != num) throw std::logic_error("hook length division not exact");
  return q.convert_to<long long>();
}

RPartitePartition::RPartitePartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  for (const Partition& p : components_) total_ += p.size();
}

std::string RPartitePartition::to_string() const {
  std::string s = "(";
  for (int i = 0; i < num_components(); ++i) {
    if (i) s += ",";
    s += components_[i].to_string();
  }
  return s + ")";
}

RPartitePartition RPartitePartition::from_string(const std::string& s) {
  size_t a = s.find('(');
  size_t b = s.rfind(')');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw std::invalid_argument("malformed r-partite literal: " + s);
  std::string body = s.substr(a + 1, b - a - 1);
  std::vector<Partition> comps;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t open = body.find('[', pos);
    if (open == std::string::npos) break;
    size_t close = body.find(']', open);
    if (close == std::string::npos)
      throw std::invalid_argument("malformed r-partite literal: " + s);
    comps.push_back(Partition::from_string(body.substr(open, close - open + 1)));
    pos = close + 1;
  }
  if (comps.empty()) throw std::invalid_argument("empty r-partite literal: " + s);
  return RPartitePartition(std::move(comps));
}

namespace {

void rpartite_rec(int r, int n, int idx, std::vector<Partition>& acc,
                  std::vector<RPartitePartition>& out) {
  if (idx == r - 1) {
    for (const Partition& p : enumerate_partitions(n)) {
      acc.push_back(p);
      out.push_back(RPartitePartition(acc));
      acc.pop_back();
    }
    return;
  }
  for (int k = n; k >= 0; --k) {
    for (const Partition& p : enumerate_partitions(k)) {
      acc.push_back(p);
      rpartite_rec(r, n - k, idx + 1, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<RPartitePartition> enumerate_rpartite(int r, int n) {
  if (r < 1) throw std::invalid_argument("enumerate_rpartite: r must be >= 1");
  if (n < 0) throw std::invalid_argument("enumerate_rpartite: n must be >= 0");
  std::vector<RPartitePartition> out;
  std::vector<Partition> acc;
  rpartite_rec(r, n, 0, acc, out);
  return out;
}

long long count_rpartite_syt(const RPartitePartition& shape) {
  // multinomial(n; |theta_i|) * prod count_syt(theta_i)
  Integer result = 1;
  for (int i = 2; i <= shape.total(); ++i) result *= i;
  for (const Partition& p : shape.components()) {
    Integer f = 1;
    for (int i = 2; i <= p.size(); ++i) f *= i;
    result /= f;
    result *= count_syt(p);
  }
  return result.convert_to<long long>();
}

}  // namespace gelfand
