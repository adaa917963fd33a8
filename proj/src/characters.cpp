#include "gelfand/characters.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gelfand {

std::vector<CharacterLabel> all_labels(const AbelianGroupSpec& spec, int n) {
  std::vector<CharacterLabel> out;
  for (RPartitePartition& p : enumerate_rpartite(spec.order(), n))
    out.push_back(CharacterLabel{std::move(p)});
  return out;
}

ClassFunction::ClassFunction(std::shared_ptr<const GroupTable> group,
                             std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group_->num_classes())
    throw std::invalid_argument("wrong number of class values");
}

ClassFunction::ClassFunction(std::shared_ptr<const SubgroupDescriptor> sub,
                             std::vector<Cyclotomic> values)
    : sub_(std::move(sub)), values_(std::move(values)) {
  group_ = sub_->group_ptr();
  if (static_cast<int>(values_.size()) != sub_->num_classes())
    throw std::invalid_argument("wrong number of subgroup class values");
}

const GroupTable& ClassFunction::group() const { return *group_; }
std::shared_ptr<const GroupTable> ClassFunction::group_ptr() const {
  return group_;
}

const Cyclotomic& ClassFunction::value_at_index(int element_index) const {
  if (sub_) return values_[sub_->class_of(element_index)];
  return values_[group_->class_of(element_index)];
}

const Cyclotomic& ClassFunction::operator()(const WreathElement& g) const {
  return value_at_index(group_->index_of(g));
}

long long ClassFunction::degree_int() const {
  const WreathElement id = WreathElement::identity(group_->spec(), group_->n());
  auto v = (*this)(id).as_rational_integer();
  if (!v) throw std::logic_error("degree is not a rational integer");
  return *v;
}

bool ClassFunction::same_context(const ClassFunction& o) const {
  return group_ == o.group_ && sub_ == o.sub_;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return same_context(o) && values_ == o.values_;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (!same_context(o)) throw std::invalid_argument("context mismatch in +");
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& s) {
  for (Cyclotomic& v : values_) v *= s;
  return *this;
}

ClassFunction class_function_from(
    std::shared_ptr<const GroupTable> group,
    const std::function<Cyclotomic(const WreathElement&)>& fn) {
  std::vector<Cyclotomic> values;
  values.reserve(group->num_classes());
  for (int c = 0; c < group->num_classes(); ++c)
    values.push_back(fn(group->element(group->class_representative(c))));
  return ClassFunction(std::move(group), std::move(values));
}

ClassFunction class_function_from(
    std::shared_ptr<const SubgroupDescriptor> sub,
    const std::function<Cyclotomic(const WreathElement&)>& fn) {
  std::vector<Cyclotomic> values;
  values.reserve(sub->num_classes());
  const GroupTable& g = sub->group();
  for (int c = 0; c < sub->num_classes(); ++c)
    values.push_back(fn(g.element(sub->class_representative(c))));
  return ClassFunction(std::move(sub), std::move(values));
}

ClassFunction trivial_character(std::shared_ptr<const GroupTable> group) {
  return ClassFunction(group, std::vector<Cyclotomic>(
                                  group->num_classes(), Cyclotomic(1)));
}

ClassFunction trivial_character(std::shared_ptr<const SubgroupDescriptor> sub) {
  return ClassFunction(sub, std::vector<Cyclotomic>(sub->num_classes(),
                                                    Cyclotomic(1)));
}

Cyclotomic psi_wr_lambda(const AbelianGroupSpec& spec, int psi_index,
                         const Partition& lam, const WreathElement& g) {
  if (lam.size() != g.n())
    throw std::invalid_argument("psi_wr_lambda: |lambda| != n");
  std::vector<int> tuple = dual_index_tuple(spec, psi_index);
  Cyclotomic value(Rational(mn_character(lam, g.perm().cycle_type())));
  for (const auto& cyc : g.perm().cycles()) {
    AbelianElement sum = abelian_zero(spec);
    for (int i : cyc) sum = abelian_add(spec, sum, g.color(i));
    value *= abelian_character(spec, tuple, sum);
  }
  return value;
}

long long degree(const CharacterLabel& label) {
  std::vector<int> ones(label.theta.num_components(), 1);
  return degree_general(label.theta.total(), ones, label.theta.components());
}

long long degree_general(int n, const std::vector<int>& psi_degrees,
                         const std::vector<Partition>& theta) {
  if (psi_degrees.size() != theta.size())
    throw std::invalid_argument("degree_general: size mismatch");
  Integer result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  Integer den = 1;
  for (size_t i = 0; i < theta.size(); ++i) {
    Integer p = 1;
    for (int t = 0; t < theta[i].size(); ++t) p *= psi_degrees[i];
    result *= p * count_syt(theta[i]);
    for (int t = 2; t <= theta[i].size(); ++t) den *= t;
  }
  Integer q = result / den;
  if (q * den != result) throw std::logic_error("degree is not an integer");
  return q.convert_to<long long>();
}

ClassFunction induce(const SubgroupDescriptor& sub, const ClassFunction& f,
                     InduceMode mode) {
  if (!f.on_subgroup() || &f.subgroup() != &sub)
    throw std::invalid_argument("induce: class function is not on the subgroup");
  std::shared_ptr<const GroupTable> group = sub.group_ptr();
  std::vector<Cyclotomic> values(group->num_classes());
  if (mode == InduceMode::elementwise) {
    // Ind f(g) = (1/|H|) sum_{x in G} f0(x g x^{-1})
    for (int c = 0; c < group->num_classes(); ++c) {
      const WreathElement& g = group->element(group->class_representative(c));
      Cyclotomic sum;
      for (const WreathElement& x : group->elements()) {
        int idx = group->index_of(conjugate_by(x, g));
        if (sub.contains(idx)) sum += f.value_at_index(idx);
      }
      sum /= Rational(sub.order());
      values[c] = std::move(sum);
    }
  } else {
    // class fusion: Ind f(g) = (|C_G(g)|/|H|) sum_{[y]_H fusing into [g]_G}
    //                          |[y]_H| f(y)
    std::vector<Cyclotomic> fused(group->num_classes());
    for (int sc = 0; sc < sub.num_classes(); ++sc) {
      int rep = sub.class_representative(sc);
      Cyclotomic term = f.value_at_index(rep);
      term *= Rational(sub.class_size(sc));
      fused[group->class_of(rep)] += term;
    }
    for (int c = 0; c < group->num_classes(); ++c) {
      Rational scale(group->order(), group->class_size(c));
      scale /= Rational(sub.order());
      fused[c] *= scale;
      values[c] = std::move(fused[c]);
    }
  }
  return ClassFunction(std::move(group), std::move(values));
}

ClassFunction restrict_to(const ClassFunction& f,
                          std::shared_ptr<const SubgroupDescriptor> sub) {
  if (f.on_subgroup())
    throw std::invalid_argument("restrict_to: expected a full-group function");
  if (f.group_ptr() != sub->group_ptr())
    throw std::invalid_argument("restrict_to: group mismatch");
  std::vector<Cyclotomic> values;
  values.reserve(sub->num_classes());
  for (int c = 0; c < sub->num_classes(); ++c)
    values.push_back(f.value_at_index(sub->class_representative(c)));
  return ClassFunction(std::move(sub), std::move(values));
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
  if (!f.same_context(h))
    throw std::invalid_argument("inner_product: context mismatch");
  Cyclotomic sum;
  long long order;
  if (f.on_subgroup()) {
    const SubgroupDescriptor& sub = f.subgroup();
    order = sub.order();
    for (int c = 0; c < sub.num_classes(); ++c) {
      Cyclotomic term = f.value_at_class(c) * conjugate(h.value_at_class(c));
      term *= Rational(sub.class_size(c));
      sum += term;
    }
  } else {
    const GroupTable& g = f.group();
    order = g.order();
    for (int c = 0; c < g.num_classes(); ++c) {
      Cyclotomic term = f.value_at_class(c) * conjugate(h.value_at_class(c));
      term *= Rational(g.class_size(c));
      sum += term;
    }
  }
  sum /= Rational(order);
  return sum;
}

SubgroupDescriptor s_theta_subgroup(std::shared_ptr<const GroupTable> group,
                                    const std::vector<int>& block_sizes) {
  std::vector<int> block_of;
  for (size_t b = 0; b < block_sizes.size(); ++b)
    for (int j = 0; j < block_sizes[b]; ++j)
      block_of.push_back(static_cast<int>(b));
  if (static_cast<int>(block_of.size()) != group->n())
    throw std::invalid_argument("block sizes must sum to n");
  return make_subgroup(group, [&block_of](const WreathElement& g) {
    for (int i = 0; i < g.n(); ++i)
      if (block_of[g.perm()(i)] != block_of[i]) return false;
    return true;
  });
}

namespace {

// eta_theta(y) for y in S_theta: product over blocks of (psi_i wr theta_i).
Cyclotomic eta_theta_value(const AbelianGroupSpec& spec,
                           const RPartitePartition& theta,
                           const std::vector<int>& block_start,
                           const WreathElement& y) {
  Cyclotomic value(1);
  for (int i = 0; i < theta.num_components(); ++i) {
    int lo = block_start[i];
    int size = theta.component(i).size();
    if (size == 0) continue;
    // cycle type and color sums of the block restriction
    std::vector<int> tuple = dual_index_tuple(spec, i);
    std::vector<bool> seen(size, false);
    std::vector<int> lens;
    AbelianElement colsum = abelian_zero(spec);
    for (int s = 0; s < size; ++s) {
      if (seen[s]) continue;
      int len = 0;
      int j = lo + s;
      do {
        seen[j - lo] = true;
        colsum = abelian_add(spec, colsum, y.color(j));
        j = y.perm()(j);
        len++;
      } while (j != lo + s);
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    value *= Cyclotomic(
        Rational(mn_character(theta.component(i), Partition(lens))));
    value *= abelian_character(spec, tuple, colsum);
  }
  return value;
}

}  // namespace

ClassFunction chi_theta(std::shared_ptr<const GroupTable> group,
                        const CharacterLabel& label) {
  const AbelianGroupSpec& spec = group->spec();
  const RPartitePartition& theta = label.theta;
  if (theta.num_components() != spec.order())
    throw std::invalid_argument("label must have one component per Irr(A)");
  if (theta.total() != group->n())
    throw std::invalid_argument("label total must equal n");
  std::vector<int> block_start(theta.num_components() + 1, 0);
  for (int i = 0; i < theta.num_components(); ++i)
    block_start[i + 1] = block_start[i] + theta.component(i).size();
  std::vector<int> block_of(group->n());
  for (int i = 0; i < theta.num_components(); ++i)
    for (int j = block_start[i]; j < block_start[i + 1]; ++j) block_of[j] = i;

  long long s_theta_order = 1;
  for (int i = 0; i < theta.num_components(); ++i) {
    for (int t = 2; t <= theta.component(i).size(); ++t) s_theta_order *= t;
    for (int t = 0; t < theta.component(i).size(); ++t)
      s_theta_order *= spec.order();
  }

  std::vector<Cyclotomic> values(group->num_classes());
  for (int c = 0; c < group->num_classes(); ++c) {
    Cyclotomic sum;
    for (int idx : group->classes()[c]) {
      const WreathElement& y = group->element(idx);
      bool in_s_theta = true;
      for (int i = 0; i < group->n() && in_s_theta; ++i)
        if (block_of[y.perm()(i)] != block_of[i]) in_s_theta = false;
      if (!in_s_theta) continue;
      sum += eta_theta_value(spec, theta, block_start, y);
    }
    // |C_G(g)| / |S_theta| = |G| / (|class| |S_theta|)
    sum *= Rational(group->order(), group->class_size(c));
    sum /= Rational(s_theta_order);
    values[c] = std::move(sum);
  }
  return ClassFunction(std::move(group), std::move(values));
}

ClassFunction chi_theta_by_induction(std::shared_ptr<const GroupTable> group,
                                     const CharacterLabel& label,
                                     InduceMode mode) {
  const AbelianGroupSpec& spec = group->spec();
  const RPartitePartition& theta = label.theta;
  std::vector<int> sizes;
  std::vector<int> block_start(theta.num_components() + 1, 0);
  for (int i = 0; i < theta.num_components(); ++i) {
    sizes.push_back(theta.component(i).size());
    block_start[i + 1] = block_start[i] + sizes.back();
  }
  auto sub = std::make_shared<const SubgroupDescriptor>(
      s_theta_subgroup(group, sizes));
  ClassFunction eta = class_function_from(
      sub, [&](const WreathElement& y) {
        return eta_theta_value(spec, theta, block_start, y);
      });
  return induce(*sub, eta, mode);
}

int epsilon_tau(const ClassFunction& f, Tau t) {
  if (f.on_subgroup())
    throw std::invalid_argument("epsilon_tau: expected a full-group function");
  const GroupTable& g = f.group();
  Cyclotomic sum;
  for (const WreathElement& x : g.elements())
    sum += f.value_at_index(g.index_of(multiply(x, tau(x, t))));
  sum /= Rational(g.order());
  auto v = sum.as_rational_integer();
  if (!v || *v < -1 || *v > 1)
    throw std::logic_error("twisted indicator outside {-1,0,1}");
  return static_cast<int>(*v);
}

std::vector<std::pair<CharacterLabel, long long>> decompose(
    const ClassFunction& f) {
  if (f.on_subgroup())
    throw std::invalid_argument("decompose: expected a full-group function");
  std::vector<std::pair<CharacterLabel, long long>> out;
  for (const CharacterLabel& label :
       all_labels(f.group().spec(), f.group().n())) {
    Cyclotomic m = inner_product(f, chi_theta(f.group_ptr(), label));
    auto v = m.as_rational_integer();
    if (!v || *v < 0)
      throw std::logic_error("multiplicity is not a nonnegative integer");
    out.emplace_back(label, *v);
  }
  return out;
}

CharacterTable character_table(std::shared_ptr<const GroupTable> group) {
  CharacterTable t;
  t.group = group;
  t.labels = all_labels(group->spec(), group->n());
  for (const CharacterLabel& label : t.labels)
    t.irreducibles.push_back(chi_theta(group, label));
  return t;
}

namespace {

nlohmann::json cyclotomic_json(const Cyclotomic& v) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : v.coeffs()) coeffs.push_back(rational_to_string(c));
  return nlohmann::json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

}  // namespace

std::string character_table_json(const CharacterTable& t) {
  nlohmann::json j;
  j["group"] = {{"abelian", t.group->spec().to_string()}, {"n", t.group->n()}};
  nlohmann::json classes = nlohmann::json::array();
  for (int c = 0; c < t.group->num_classes(); ++c) {
    classes.push_back(
        {{"representative",
          t.group->element(t.group->class_representative(c)).to_string()},
         {"size", t.group->class_size(c)}});
  }
  j["classes"] = classes;
  nlohmann::json irr = nlohmann::json::array();
  for (size_t i = 0; i < t.labels.size(); ++i) {
    nlohmann::json values = nlohmann::json::array();
    for (int c = 0; c < t.group->num_classes(); ++c)
      values.push_back(cyclotomic_json(t.irreducibles[i].value_at_class(c)));
    irr.push_back({{"theta", t.labels[i].to_string()}, {"values", values}});
  }
  j["irreducibles"] = irr;
  return j.dump(2);
}

std::string character_table_tsv(const CharacterTable& t) {
  std::ostringstream os;
  os << "theta";
  for (int c = 0; c < t.group->num_classes(); ++c)
    os << "\t"
       << t.group->element(t.group->class_representative(c)).to_string();
  os << "\n";
  for (size_t i = 0; i < t.labels.size(); ++i) {
    os << t.labels[i].to_string();
    for (int c = 0; c < t.group->num_classes(); ++c)
      os << "\t" << t.irreducibles[i].value_at_class(c).to_string();
    os << "\n";
  }
  return os.str();
}

}  // namespace gelfand
