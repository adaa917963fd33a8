#include "gelfand/wreath.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gelfand {

WreathElement::WreathElement(AbelianGroupSpec spec, Permutation perm,
                             std::vector<AbelianElement> colors)
    : spec_(std::move(spec)), perm_(std::move(perm)) {
  if (static_cast<int>(colors.size()) != perm_.n())
    throw std::invalid_argument("color count must equal n");
  colors_.reserve(colors.size() * spec_.num_factors());
  for (const AbelianElement& c : colors) {
    if (static_cast<int>(c.size()) != spec_.num_factors())
      throw std::invalid_argument("color coordinate count mismatch");
    for (int i = 0; i < spec_.num_factors(); ++i) {
      if (c[i] < 0 || c[i] >= spec_.factors()[i])
        throw std::invalid_argument("color residue out of range");
      colors_.push_back(c[i]);
    }
  }
}

WreathElement WreathElement::identity(const AbelianGroupSpec& spec, int n) {
  return WreathElement(spec, Permutation::identity(n),
                       std::vector<AbelianElement>(n, abelian_zero(spec)));
}

AbelianElement WreathElement::color(int i) const {
  int k = spec_.num_factors();
  return AbelianElement(colors_.begin() + i * k, colors_.begin() + (i + 1) * k);
}

bool WreathElement::operator<(const WreathElement& o) const {
  if (perm_ != o.perm_) return perm_ < o.perm_;
  return colors_ < o.colors_;
}

AbelianElement WreathElement::color_sum() const {
  AbelianElement s = abelian_zero(spec_);
  for (int i = 0; i < n(); ++i) s = abelian_add(spec_, s, color(i));
  return s;
}

std::string WreathElement::to_string() const {
  std::string s = "perm=" + perm_.to_string() + "; colors=";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    s += abelian_element_to_string(color(i));
  }
  return s;
}

WreathElement WreathElement::parse(const AbelianGroupSpec& spec, int n,
                                   const std::string& s) {
  size_t pp = s.find("perm=");
  size_t cp = s.find("colors=");
  if (pp == std::string::npos || cp == std::string::npos)
    throw std::invalid_argument("element literal needs 'perm=' and 'colors=': " + s);
  size_t semi = s.find(';', pp);
  if (semi == std::string::npos || semi < pp)
    throw std::invalid_argument("element literal needs ';' separator: " + s);
  Permutation perm = Permutation::parse(s.substr(pp + 5, semi - pp - 5), n);
  std::string colors_str = s.substr(cp + 7);
  std::vector<AbelianElement> colors;
  std::stringstream ss(colors_str);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    while (!tok.empty() && isspace(static_cast<unsigned char>(tok.front())))
      tok.erase(tok.begin());
    while (!tok.empty() && isspace(static_cast<unsigned char>(tok.back())))
      tok.pop_back();
    if (tok.empty()) continue;
    colors.push_back(abelian_element_from_string(spec, tok));
  }
  if (static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("element literal has wrong color count: " + s);
  return WreathElement(spec, std::move(perm), std::move(colors));
}

namespace {

void check_compatible(const WreathElement& g, const WreathElement& h) {
  if (g.n() != h.n() || g.spec() != h.spec())
    throw std::invalid_argument("wreath elements from different groups");
}

}  // namespace

WreathElement multiply(const WreathElement& g, const WreathElement& h) {
  check_compatible(g, h);
  WreathElement out;
  out.spec_ = g.spec_;
  out.perm_ = compose(g.perm_, h.perm_);
  int n = g.n();
  int k = g.spec_.num_factors();
  out.colors_.resize(n * k);
  const std::vector<int>& f = g.spec_.factors();
  for (int j = 0; j < n; ++j) {
    int hj = h.perm_(j);
    for (int t = 0; t < k; ++t)
      out.colors_[j * k + t] =
          (g.colors_[hj * k + t] + h.colors_[j * k + t]) % f[t];
  }
  return out;
}

WreathElement inverse(const WreathElement& g) {
  // (a,pi)^{-1} = (-pi(a), pi^{-1}): z(j) = -z_g(pi^{-1}(j))
  WreathElement out;
  out.spec_ = g.spec_;
  out.perm_ = g.perm_.inverse();
  int n = g.n();
  int k = g.spec_.num_factors();
  out.colors_.resize(n * k);
  const std::vector<int>& f = g.spec_.factors();
  for (int j = 0; j < n; ++j) {
    int src = out.perm_(j);  // pi^{-1}(j)
    for (int t = 0; t < k; ++t)
      out.colors_[j * k + t] = (f[t] - g.colors_[src * k + t]) % f[t];
  }
  return out;
}

WreathElement transpose(const WreathElement& g) {
  // (a,pi)^T = (pi(a), pi^{-1}): z(j) = z_g(pi^{-1}(j))
  WreathElement out;
  out.spec_ = g.spec_;
  out.perm_ = g.perm_.inverse();
  int n = g.n();
  int k = g.spec_.num_factors();
  out.colors_.resize(n * k);
  for (int j = 0; j < n; ++j) {
    int src = out.perm_(j);
    for (int t = 0; t < k; ++t)
      out.colors_[j * k + t] = g.colors_[src * k + t];
  }
  return out;
}

WreathElement tau(const WreathElement& g, Tau t) {
  if (t == Tau::identity) return g;
  WreathElement out = g;
  int k = g.spec_.num_factors();
  const std::vector<int>& f = g.spec_.factors();
  for (int j = 0; j < g.n(); ++j)
    for (int c = 0; c < k; ++c)
      out.colors_[j * k + c] = (f[c] - g.colors_[j * k + c]) % f[c];
  return out;
}

bool is_symmetric(const WreathElement& g) { return transpose(g) == g; }

WreathElement twisted_conjugate(const WreathElement& g, const WreathElement& w) {
  return multiply(multiply(g, w), transpose(g));
}

WreathElement conjugate_by(const WreathElement& g, const WreathElement& h) {
  return multiply(multiply(g, h), inverse(g));
}

std::uint64_t wreath_rank(const WreathElement& g) {
  int n = g.n();
  // Lehmer code of the permutation
  std::uint64_t perm_rank = 0;
  const std::vector<int>& im = g.perm().images();
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (im[j] < im[i]) smaller++;
    perm_rank = perm_rank * (n - i) + smaller;
  }
  std::uint64_t color_rank = 0;
  int k = g.spec().num_factors();
  const std::vector<int>& f = g.spec().factors();
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t)
      color_rank = color_rank * f[t] + g.flat_colors()[i * k + t];
  std::uint64_t colors_total = 1;
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) colors_total *= f[t];
  return perm_rank * colors_total + color_rank;
}

long long wreath_group_order(const AbelianGroupSpec& spec, int n) {
  long long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  for (int i = 0; i < n; ++i) order *= spec.order();
  return order;
}

std::vector<WreathElement> enumerate_wreath_group(const AbelianGroupSpec& spec,
                                                  int n, bool allow_large) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  long long order = wreath_group_order(spec, n);
  if (order > kEnumerationGuard && !allow_large)
    throw std::invalid_argument("group too large to enumerate (" +
                                std::to_string(order) +
                                " elements); pass the allow-large flag");
  std::vector<AbelianElement> a_elems = abelian_elements(spec);
  std::vector<WreathElement> out;
  out.reserve(static_cast<size_t>(order));
  std::vector<int> color_idx(n, 0);
  for (const Permutation& p : enumerate_permutations(n)) {
    std::fill(color_idx.begin(), color_idx.end(), 0);
    while (true) {
      std::vector<AbelianElement> colors(n);
      for (int i = 0; i < n; ++i) colors[i] = a_elems[color_idx[i]];
      out.push_back(WreathElement(spec, p, std::move(colors)));
      int pos = n - 1;
      while (pos >= 0 && color_idx[pos] == spec.order() - 1) color_idx[pos--] = 0;
      if (pos < 0) break;
      color_idx[pos]++;
    }
  }
  return out;
}

std::vector<WreathElement> generalized_involutions(const AbelianGroupSpec& spec,
                                                   int n, bool allow_large) {
  std::vector<WreathElement> out;
  for (const WreathElement& g : enumerate_wreath_group(spec, n, allow_large))
    if (is_symmetric(g)) out.push_back(g);
  return out;
}

std::vector<WreathElement> wreath_generators(const AbelianGroupSpec& spec,
                                             int n) {
  std::vector<WreathElement> gens;
  std::vector<AbelianElement> zero_colors(n, abelian_zero(spec));
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> im(n);
    for (int j = 0; j < n; ++j) im[j] = j;
    std::swap(im[i], im[i + 1]);
    gens.push_back(WreathElement(spec, Permutation(im), zero_colors));
  }
  for (int t = 0; t < spec.num_factors() && n > 0; ++t) {
    if (spec.factors()[t] == 1) continue;
    std::vector<AbelianElement> colors = zero_colors;
    colors[0][t] = 1;
    gens.push_back(WreathElement(spec, Permutation::identity(n), colors));
  }
  return gens;
}

ColoredCycleType colored_cycle_type(const WreathElement& g) {
  ColoredCycleType out;
  for (const auto& cyc : g.perm().cycles()) {
    AbelianElement sum = abelian_zero(g.spec());
    for (int i : cyc) sum = abelian_add(g.spec(), sum, g.color(i));
    out.emplace_back(static_cast<int>(cyc.size()), std::move(sum));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gelfand
