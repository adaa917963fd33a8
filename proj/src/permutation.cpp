#include "gelfand/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gelfand {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= n() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_line(const std::vector<int>& images1) {
  std::vector<int> im(images1.size());
  for (size_t i = 0; i < images1.size(); ++i) im[i] = images1[i] - 1;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(n());
  for (int i = 0; i < n(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < n(); ++i)
    if (images_[images_[i]] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n(), false);
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = true;
      cyc.push_back(j);
      j = images_[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

int Permutation::sgn() const {
  int s = 1;
  for (const auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < n(); ++i) {
    if (i) s += " ";
    s += std::to_string(images_[i] + 1);
  }
  return s;
}

Permutation Permutation::parse(const std::string& s, int n) {
  std::string t = s;
  // trim
  while (!t.empty() && isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  while (!t.empty() && isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (!t.empty() && t.front() == '(') {
    // cycle notation
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    size_t pos = 0;
    while (pos < t.size()) {
      size_t open = t.find('(', pos);
      if (open == std::string::npos) break;
      size_t close = t.find(')', open);
      if (close == std::string::npos)
        throw std::invalid_argument("unbalanced cycle notation: " + s);
      std::stringstream ss(t.substr(open + 1, close - open - 1));
      std::vector<int> cyc;
      std::string tok;
      while (ss >> tok) {
        size_t comma = tok.find(',');
        if (comma != std::string::npos) {
          // allow "(1,3,2)" too
          std::stringstream cs(tok);
          std::string ct;
          while (std::getline(cs, ct, ','))
            if (!ct.empty()) cyc.push_back(std::stoi(ct) - 1);
        } else {
          cyc.push_back(std::stoi(tok) - 1);
        }
      }
      for (int v : cyc)
        if (v < 0 || v >= n)
          throw std::invalid_argument("cycle entry out of range: " + s);
      for (size_t i = 0; i < cyc.size(); ++i)
        im[cyc[i]] = cyc[(i + 1) % cyc.size()];
      pos = close + 1;
    }
    return Permutation(std::move(im));
  }
  std::vector<int> vals;
  std::stringstream ss(t);
  int v;
  while (ss >> v) vals.push_back(v);
  if (static_cast<int>(vals.size()) != n)
    throw std::invalid_argument("one-line permutation has wrong length: " + s);
  return from_one_line(vals);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) throw std::invalid_argument("size mismatch in compose");
  std::vector<int> im(p.n());
  for (int i = 0; i < p.n(); ++i) im[i] = p(q(i));
  return Permutation(std::move(im));
}

std::vector<std::pair<int, int>> inv_set(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.n(); ++i)
    for (int j = i + 1; j < p.n(); ++j)
      if (p(i) > p(j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> pair_set(const Permutation& w) {
  if (!w.is_involution())
    throw std::invalid_argument("pair_set requires an involution");
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < w.n(); ++i)
    if (w(i) > i) out.emplace_back(i, w(i));
  return out;
}

int fixed_point_count(const Permutation& w) {
  int f = 0;
  for (int i = 0; i < w.n(); ++i)
    if (w(i) == i) f++;
  return f;
}

int sign_sym(const Permutation& p, const Permutation& w) {
  if (!w.is_involution())
    throw std::invalid_argument("sign_sym requires an involution");
  if (p.n() != w.n()) throw std::invalid_argument("size mismatch in sign_sym");
  int count = 0;
  for (int i = 0; i < w.n(); ++i) {
    int j = w(i);
    if (j > i && p(i) > p(j)) count++;  // (i,j) in Inv(p) cap Pair(w)
  }
  return count % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace gelfand
