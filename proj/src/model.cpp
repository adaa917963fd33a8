#include "gelfand/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace gelfand {

int sign_cyclic(int r, int a, int x) {
  if (a < 0 || a >= r || x < 0 || x >= r)
    throw std::invalid_argument("sign_cyclic: residues out of range");
  if (r % 2 != 0) return 1;
  if (x % 2 != 1) return 1;
  int k = (x - 1) / 2;  // x = 2k+1 with k in [0, r/2-1]
  return (a + k) % r >= r / 2 ? -1 : 1;
}

int sign_abelian_concrete(const AbelianGroupSpec& spec, const AbelianElement& a,
                          const AbelianElement& x) {
  if (spec.num_factors() > 1 && !spec.all_prime_power())
    throw std::invalid_argument(
        "concrete sign requires prime-power factors for multi-factor specs");
  int s = 1;
  for (int i = 0; i < spec.num_factors(); ++i)
    s *= sign_cyclic(spec.factors()[i], a[i], x[i]);
  return s;
}

SectionData SectionData::canonical(const AbelianGroupSpec& spec) {
  SectionData sd;
  sd.spec = spec;
  sd.involutions = abelian_involutions(spec);
  std::vector<AbelianElement> elements = abelian_elements(spec);
  int order = spec.order();
  sd.orb_rep_index.resize(order);
  sd.inv_rep_index.resize(order);
  sd.lambda.assign(order, std::vector<int>(sd.involutions.size(), 1));
  for (int ai = 0; ai < order; ++ai) {
    const AbelianElement& a = elements[ai];
    AbelianElement orb(spec.num_factors()), inv(spec.num_factors());
    for (int t = 0; t < spec.num_factors(); ++t) {
      int r = spec.factors()[t];
      orb[t] = (r % 2 == 0) ? a[t] % 2 : 0;          // parity rep of a + 2Z_r
      inv[t] = (r % 2 == 0 && a[t] >= r / 2) ? a[t] - r / 2 : a[t];
    }
    sd.orb_rep_index[ai] = abelian_index(spec, orb);
    sd.inv_rep_index[ai] = abelian_index(spec, inv);
    for (size_t j = 0; j < sd.involutions.size(); ++j) {
      int v = 1;
      for (int t = 0; t < spec.num_factors(); ++t) {
        int r = spec.factors()[t];
        if (r % 2 == 0 && a[t] % 2 == 1 && sd.involutions[j][t] == r / 2)
          v = -v;  // nontrivial character of the Z_2 factor on odd cosets
      }
      sd.lambda[ai][j] = v;
    }
  }
  return sd;
}

void SectionData::validate() const {
  std::vector<AbelianElement> elements = abelian_elements(spec);
  int order = spec.order();
  if (static_cast<int>(orb_rep_index.size()) != order ||
      static_cast<int>(inv_rep_index.size()) != order ||
      static_cast<int>(lambda.size()) != order)
    throw std::invalid_argument("section tables have the wrong size");
  if (involutions != abelian_involutions(spec))
    throw std::invalid_argument("section involution list is not I_A");
  std::vector<AbelianElement> squares = abelian_squares(spec);
  auto in = [](const std::vector<AbelianElement>& v, const AbelianElement& a) {
    return std::find(v.begin(), v.end(), a) != v.end();
  };
  for (int ai = 0; ai < order; ++ai) {
    const AbelianElement& a = elements[ai];
    // s_orb(a) in aB
    AbelianElement d = abelian_add(
        spec, elements[orb_rep_index[ai]], abelian_negate(spec, a));
    if (!in(squares, d))
      throw std::invalid_argument("s_orb does not pick B-coset representatives");
    // s(a) in a I_A
    d = abelian_add(spec, elements[inv_rep_index[ai]], abelian_negate(spec, a));
    if (!abelian_is_involution(spec, d))
      throw std::invalid_argument("s does not pick I_A-coset representatives");
    // constancy of sections on their cosets
    if (orb_rep_index[orb_rep_index[ai]] != orb_rep_index[ai] ||
        inv_rep_index[inv_rep_index[ai]] != inv_rep_index[ai])
      throw std::invalid_argument("sections are not idempotent");
    // lambda[a]: a +-1 valued character of I_A, constant on the B-coset
    if (lambda[ai] != lambda[orb_rep_index[ai]])
      throw std::invalid_argument("lambda is not constant on B-cosets");
    for (size_t j = 0; j < involutions.size(); ++j) {
      if (lambda[ai][j] != 1 && lambda[ai][j] != -1)
        throw std::invalid_argument("lambda values must be +-1");
      for (size_t l = 0; l < involutions.size(); ++l) {
        AbelianElement s = abelian_add(spec, involutions[j], involutions[l]);
        size_t m = std::find(involutions.begin(), involutions.end(), s) -
                   involutions.begin();
        if (lambda[ai][j] * lambda[ai][l] != lambda[ai][m])
          throw std::invalid_argument("lambda is not multiplicative");
      }
    }
  }
  // the assignment coset -> character is injective
  for (int ai = 0; ai < order; ++ai)
    for (int bi = 0; bi < order; ++bi)
      if (orb_rep_index[ai] != orb_rep_index[bi] && lambda[ai] == lambda[bi])
        throw std::invalid_argument("coset -> Irr(I_A) assignment not injective");
}

int sign_abelian_abstract(const SectionData& sections, const AbelianElement& a,
                          const AbelianElement& x) {
  const AbelianGroupSpec& spec = sections.spec;
  std::vector<AbelianElement> elements = abelian_elements(spec);
  int xi = abelian_index(spec, x);
  // q(x) = s(b) for any b with s_orb(x) + 2b = x
  const AbelianElement& orb = elements[sections.orb_rep_index[xi]];
  AbelianElement q;
  bool found = false;
  for (const AbelianElement& b : elements) {
    if (abelian_add(spec, orb, abelian_add(spec, b, b)) == x) {
      q = elements[sections.inv_rep_index[abelian_index(spec, b)]];
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no square root modulo B");
  AbelianElement aq = abelian_add(spec, a, q);
  AbelianElement arg = abelian_add(
      spec, aq,
      abelian_negate(spec, elements[sections.inv_rep_index[abelian_index(spec, aq)]]));
  auto it = std::find(sections.involutions.begin(), sections.involutions.end(), arg);
  if (it == sections.involutions.end())
    throw std::logic_error("sign argument is not an involution");
  int v = sections.lambda[xi][it - sections.involutions.begin()];
  if (v != 1 && v != -1) throw std::logic_error("abstract sign is not +-1");
  return v;
}

AbelianSignFn concrete_sign(const AbelianGroupSpec& spec) {
  return [spec](const AbelianElement& a, const AbelianElement& x) {
    return sign_abelian_concrete(spec, a, x);
  };
}

AbelianSignFn abstract_sign(std::shared_ptr<const SectionData> sections) {
  return [sections](const AbelianElement& a, const AbelianElement& x) {
    return sign_abelian_abstract(*sections, a, x);
  };
}

int sign_wreath(const WreathElement& g, const WreathElement& w) {
  return sign_wreath(g, w, concrete_sign(g.spec()));
}

int sign_wreath(const WreathElement& g, const WreathElement& w,
                const AbelianSignFn& sign_a) {
  if (!is_symmetric(w))
    throw std::invalid_argument("sign_wreath: w must be symmetric");
  int s = sign_sym(g.perm(), w.perm());
  for (int i = 0; i < w.n(); ++i)
    if (w.perm()(i) == i) s *= sign_a(g.color(i), w.color(i));
  return s;
}

int sign_rn(const WreathElement& g, const WreathElement& w) {
  if (g.spec().num_factors() != 1)
    throw std::invalid_argument("sign_rn is defined for cyclic color groups");
  int r = g.spec().factors()[0];
  int s = sign_sym(g.perm(), w.perm());
  if (r % 2 != 0) return s;  // B(g, w) is empty for odd r
  int b = 0;
  for (int i = 0; i < w.n(); ++i) {
    if (w.perm()(i) != i) continue;
    int zw = w.color(i)[0];
    if (zw % 2 != 1) continue;
    int k = (zw - 1) / 2;
    if ((g.color(i)[0] + k) % r >= r / 2) b++;
  }
  return b % 2 == 0 ? s : -s;
}

int ModelSpace::index_of(const WreathElement& w) const {
  auto it = index.find(wreath_rank(w));
  if (it == index.end())
    throw std::invalid_argument("element is not in the model basis");
  return it->second;
}

ModelSpace make_model_space(std::shared_ptr<const GroupTable> group) {
  ModelSpace space;
  space.group = group;
  for (const WreathElement& g : group->elements())
    if (is_symmetric(g)) space.basis.push_back(g);
  for (size_t i = 0; i < space.basis.size(); ++i)
    space.index.emplace(wreath_rank(space.basis[i]), static_cast<int>(i));
  return space;
}

long long MonomialMap::trace() const {
  long long t = 0;
  for (size_t i = 0; i < target.size(); ++i)
    if (target[i] == static_cast<int>(i)) t += sign[i];
  return t;
}

MonomialMap model_action(const ModelSpace& space, const WreathElement& g) {
  return model_action(space, g, concrete_sign(g.spec()));
}

MonomialMap model_action(const ModelSpace& space, const WreathElement& g,
                         const AbelianSignFn& sign_a) {
  MonomialMap map;
  map.target.resize(space.basis.size());
  map.sign.resize(space.basis.size());
  for (size_t i = 0; i < space.basis.size(); ++i) {
    const WreathElement& w = space.basis[i];
    map.target[i] = space.index_of(twisted_conjugate(g, w));
    map.sign[i] = sign_wreath(g, w, sign_a);
  }
  return map;
}

MonomialMap compose(const MonomialMap& a, const MonomialMap& b) {
  MonomialMap map;
  map.target.resize(b.target.size());
  map.sign.resize(b.target.size());
  for (size_t i = 0; i < b.target.size(); ++i) {
    map.target[i] = a.target[b.target[i]];
    map.sign[i] = a.sign[b.target[i]] * b.sign[i];
  }
  return map;
}

ClassFunction model_character(std::shared_ptr<const GroupTable> group) {
  ModelSpace space = make_model_space(group);
  AbelianSignFn sign_a = concrete_sign(group->spec());
  return class_function_from(group, [&](const WreathElement& g) {
    long long t = 0;
    for (const WreathElement& w : space.basis)
      if (twisted_conjugate(g, w) == w) t += sign_wreath(g, w, sign_a);
    return Cyclotomic(t);
  });
}

std::vector<CharacterLabel> orbit_subrep_constituents(
    std::shared_ptr<const GroupTable> group, const WreathElement& w) {
  const AbelianGroupSpec& spec = group->spec();
  if (spec.num_factors() != 1)
    throw std::invalid_argument(
        "orbit_subrep_constituents is defined for cyclic color groups");
  if (!is_symmetric(w))
    throw std::invalid_argument("orbit generator must be symmetric");
  int r = spec.factors()[0];
  int n = group->n();
  int k = 0;
  for (const auto& cyc : w.perm().cycles())
    if (cyc.size() == 2) k++;
  int ell = 0;
  for (int i = 0; i < n; ++i)
    if (w.perm()(i) == i && w.color(i)[0] % 2 == 1 && r % 2 == 0) ell++;

  std::vector<CharacterLabel> out;
  for (const CharacterLabel& label : all_labels(spec, n)) {
    if (r % 2 != 0) {
      int total = 0;
      for (const Partition& p : label.theta.components()) total += odd_columns(p);
      if (total == n - 2 * k) out.push_back(label);
    } else {
      int even_total = 0, odd_total = 0;
      for (int i = 0; i < r; ++i) {
        int oc = odd_columns(label.theta.component(i));
        if (i % 2 == 0)
          even_total += oc;
        else
          odd_total += oc;
      }
      if (even_total == n - 2 * k - ell && odd_total == ell)
        out.push_back(label);
    }
  }
  return out;
}

namespace {

bool color_sum_in_two_zr(const WreathElement& w) {
  int r = w.spec().factors()[0];
  if (r % 2 != 0) return true;
  return w.color_sum()[0] % 2 == 0;
}

}  // namespace

std::pair<ClassFunction, ClassFunction> chi_plus_minus(
    std::shared_ptr<const GroupTable> group) {
  const AbelianGroupSpec& spec = group->spec();
  if (spec.num_factors() != 1 || spec.factors()[0] % 2 != 0)
    throw std::invalid_argument("chi_plus_minus requires cyclic A of even order");
  ModelSpace space = make_model_space(group);
  AbelianSignFn sign_a = concrete_sign(spec);
  auto trace_on = [&](const WreathElement& g, bool plus) {
    long long t = 0;
    for (const WreathElement& w : space.basis) {
      if (color_sum_in_two_zr(w) != plus) continue;
      if (twisted_conjugate(g, w) == w) t += sign_wreath(g, w, sign_a);
    }
    return Cyclotomic(t);
  };
  ClassFunction plus = class_function_from(
      group, [&](const WreathElement& g) { return trace_on(g, true); });
  ClassFunction minus = class_function_from(
      group, [&](const WreathElement& g) { return trace_on(g, false); });
  return {std::move(plus), std::move(minus)};
}

std::pair<std::vector<CharacterLabel>, std::vector<CharacterLabel>>
chi_plus_minus_predicted(const AbelianGroupSpec& spec, int n) {
  if (spec.num_factors() != 1 || spec.factors()[0] % 2 != 0)
    throw std::invalid_argument("chi_plus_minus requires cyclic A of even order");
  std::vector<CharacterLabel> plus, minus;
  for (const CharacterLabel& label : all_labels(spec, n)) {
    int omega = 0;
    for (int i = 1; i < spec.factors()[0]; i += 2)
      omega += odd_columns(label.theta.component(i));
    (omega % 2 == 0 ? plus : minus).push_back(label);
  }
  return {std::move(plus), std::move(minus)};
}

Cyclotomic gamma_value(const AbelianGroupSpec& spec, int p,
                       const WreathElement& g) {
  if (spec.num_factors() != 1)
    throw std::invalid_argument("gamma twist is defined for cyclic color groups");
  int r = spec.factors()[0];
  if (p < 1 || r % p != 0) throw std::invalid_argument("p must divide r");
  return root_of_unity(r, static_cast<long long>(r / p) * g.color_sum()[0]);
}

ClassFunction gamma_twist(int p, const ClassFunction& f) {
  if (f.on_subgroup())
    throw std::invalid_argument("gamma_twist: expected a full-group function");
  std::shared_ptr<const GroupTable> group = f.group_ptr();
  const AbelianGroupSpec& spec = group->spec();
  std::vector<Cyclotomic> values;
  values.reserve(group->num_classes());
  for (int c = 0; c < group->num_classes(); ++c) {
    const WreathElement& rep = group->element(group->class_representative(c));
    values.push_back(gamma_value(spec, p, rep) * f.value_at_class(c));
  }
  return ClassFunction(std::move(group), std::move(values));
}

CharacterLabel gamma_twist_label(const AbelianGroupSpec& spec, int p,
                                 const CharacterLabel& label) {
  int r = spec.factors()[0];
  if (p < 1 || r % p != 0) throw std::invalid_argument("p must divide r");
  int shift = r / p;
  std::vector<Partition> comps(r);
  for (int i = 0; i < r; ++i)
    comps[i] = label.theta.component(((i - shift) % r + r) % r);
  return CharacterLabel{RPartitePartition(std::move(comps))};
}

GelfandReport verify_gelfand(const AbelianGroupSpec& spec, int n,
                             bool allow_large) {
  GelfandReport report;
  auto group = make_group_table(spec, n, allow_large);
  ClassFunction model = model_character(group);
  report.model_dimension = model.degree_int();
  report.pass = true;
  for (const CharacterLabel& label : all_labels(spec, n)) {
    Cyclotomic m = inner_product(model, chi_theta(group, label));
    auto v = m.as_rational_integer();
    if (!v) throw std::logic_error("model multiplicity is not an integer");
    report.multiplicities.emplace_back(label, *v);
    report.degree_sum += degree(label);
    if (*v != 1 && report.pass) {
      report.pass = false;
      report.first_violation = "<model, chi_" + label.to_string() +
                               "> = " + std::to_string(*v) + " (expected 1)";
    }
  }
  if (report.pass && report.model_dimension != report.degree_sum) {
    report.pass = false;
    report.first_violation =
        "model dimension " + std::to_string(report.model_dimension) +
        " != degree sum " + std::to_string(report.degree_sum);
  }
  return report;
}

CountsReport counts_report(const AbelianGroupSpec& spec, int n,
                           bool allow_large) {
  CountsReport report;
  report.involution_count = static_cast<long long>(
      generalized_involutions(spec, n, allow_large).size());
  for (const CharacterLabel& label : all_labels(spec, n))
    report.degree_sum += degree(label);
  report.pass = report.involution_count == report.degree_sum;
  return report;
}

}  // namespace gelfand
