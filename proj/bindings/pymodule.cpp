// Python bindings for the main operations: partitions, characters, the
// sign cocycles, model verification and colored RSK.  Inputs use plain
// python types; permutations are 1-based one-line lists, colors are lists
// of residues (cyclic A) or lists of residue lists (products).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gelfand/gim.hpp"
#include "gelfand/model.hpp"
#include "gelfand/rsk.hpp"
#include "gelfand/symmetric.hpp"

namespace py = pybind11;
using namespace gelfand;

namespace {

AbelianGroupSpec spec_of(const std::vector<int>& factors) {
  return AbelianGroupSpec(factors);
}

WreathElement element_of(const AbelianGroupSpec& spec,
                         const std::vector<int>& perm1,
                         const py::list& colors) {
  std::vector<AbelianElement> cols;
  for (const auto& c : colors) {
    if (py::isinstance<py::int_>(c))
      cols.push_back(AbelianElement{c.cast<int>()});
    else
      cols.push_back(c.cast<AbelianElement>());
  }
  return WreathElement(spec, Permutation::from_one_line(perm1),
                       std::move(cols));
}

py::list partition_list(const Partition& p) {
  py::list out;
  for (int x : p.parts()) out.append(x);
  return out;
}

py::list label_strings(const std::vector<CharacterLabel>& labels) {
  py::list out;
  for (const CharacterLabel& l : labels) out.append(l.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(pygelfand, m) {
  m.doc() =
      "Gelfand models and generalized involution models for wreath products "
      "A wr S_n (exact arithmetic)";

  // partitions
  m.def("partitions", [](int n) {
    py::list out;
    for (const Partition& p : enumerate_partitions(n))
      out.append(partition_list(p));
    return out;
  });
  m.def("transpose",
        [](const std::vector<int>& p) {
          return partition_list(transpose(Partition(p)));
        });
  m.def("odd_columns",
        [](const std::vector<int>& p) { return odd_columns(Partition(p)); });
  m.def("count_syt",
        [](const std::vector<int>& p) { return count_syt(Partition(p)); });
  m.def("pieri_add_two", [](const std::vector<int>& p) {
    py::list out;
    for (const Partition& q : pieri_add_two(Partition(p)))
      out.append(partition_list(q));
    return out;
  });
  m.def("rpartite_partitions", [](int r, int n) {
    py::list out;
    for (const RPartitePartition& t : enumerate_rpartite(r, n))
      out.append(t.to_string());
    return out;
  });
  m.def("mn_character",
        [](const std::vector<int>& shape, const std::vector<int>& type) {
          return mn_character(Partition(shape), Partition(type));
        });

  // sign cocycles
  m.def("sign_cyclic", &sign_cyclic, py::arg("r"), py::arg("a"), py::arg("x"));
  m.def("sign_wreath",
        [](const std::vector<int>& factors, const std::vector<int>& g_perm,
           const py::list& g_colors, const std::vector<int>& w_perm,
           const py::list& w_colors) {
          AbelianGroupSpec spec = spec_of(factors);
          return sign_wreath(element_of(spec, g_perm, g_colors),
                             element_of(spec, w_perm, w_colors));
        });
  m.def("sign_rn",
        [](int r, const std::vector<int>& g_perm, const py::list& g_colors,
           const std::vector<int>& w_perm, const py::list& w_colors) {
          AbelianGroupSpec spec = AbelianGroupSpec::cyclic(r);
          return sign_rn(element_of(spec, g_perm, g_colors),
                         element_of(spec, w_perm, w_colors));
        });

  // counting and verification reports
  m.def("group_order", [](const std::vector<int>& factors, int n) {
    return wreath_group_order(spec_of(factors), n);
  });
  m.def("counts", [](const std::vector<int>& factors, int n) {
    CountsReport rep = counts_report(spec_of(factors), n);
    return py::make_tuple(rep.involution_count, rep.degree_sum, rep.pass);
  });
  m.def("verify_gelfand", [](const std::vector<int>& factors, int n) {
    GelfandReport rep = verify_gelfand(spec_of(factors), n);
    py::dict out;
    out["pass"] = rep.pass;
    out["model_dimension"] = rep.model_dimension;
    out["degree_sum"] = rep.degree_sum;
    py::list mults;
    for (auto& [label, mult] : rep.multiplicities)
      mults.append(py::make_tuple(label.to_string(), mult));
    out["multiplicities"] = mults;
    return out;
  });
  m.def("verify_gim", [](const std::vector<int>& factors, int n) {
    auto group = make_group_table(spec_of(factors), n);
    GimReport rep = verify_gim(group);
    py::dict out;
    out["pass"] = rep.pass;
    out["components"] = rep.component_count;
    out["expected_components"] = rep.expected_component_count;
    if (!rep.pass) out["first_violation"] = rep.first_violation;
    return out;
  });
  m.def("verify_vk_induction",
        [](const std::vector<int>& factors, int k, const std::string& tau_name) {
          Tau t = tau_name == "identity" ? Tau::identity : Tau::inversion;
          VkInductionReport rep = verify_vk_induction(spec_of(factors), t, k);
          py::dict out;
          out["pass"] = rep.pass;
          out["index"] = rep.index;
          out["degree_total"] = rep.degree_total;
          out["predicted"] = label_strings(rep.predicted);
          return out;
        },
        py::arg("factors"), py::arg("k"), py::arg("tau") = "inversion");
  m.def("verify_rsk_theorem", [](const std::vector<int>& factors, int n) {
    AbelianGroupSpec spec = spec_of(factors);
    auto group = make_group_table(spec, n);
    RskTheoremReport rep =
        verify_conjecture(group, generalized_involutions(spec, n));
    py::dict out;
    out["pass"] = rep.pass;
    out["span_size"] = rep.span_size;
    out["syt_total"] = rep.syt_total;
    out["shapes"] = label_strings(rep.rsk_shapes);
    return out;
  });
  m.def("degrees", [](const std::vector<int>& factors, int n) {
    py::list out;
    for (const CharacterLabel& label : all_labels(spec_of(factors), n))
      out.append(py::make_tuple(label.to_string(), degree(label)));
    return out;
  });

  // colored RSK
  m.def("colored_rsk", [](int r, const std::vector<int>& perm1,
                          const py::list& colors) {
    AbelianGroupSpec spec = AbelianGroupSpec::cyclic(r);
    ColoredBitableau bt =
        colored_rsk(element_of(spec, perm1, colors));
    py::dict out;
    py::list p, q;
    for (const Tableau& t : bt.P) p.append(t.rows);
    for (const Tableau& t : bt.Q) q.append(t.rows);
    out["P"] = p;
    out["Q"] = q;
    out["shape"] = bt.shape().to_string();
    return out;
  });

  // table 1
  m.def("table1", [](int n, int i, bool allow_large) {
    Table1Row row = table1_row(n, i, allow_large);
    py::dict out;
    out["verified"] = row.verified;
    out["multiplicity_two"] = row.multiplicity_two;
    out["description"] = row.describe();
    return out;
  },
        py::arg("n"), py::arg("i"), py::arg("allow_large") = false);

  m.def("character_table_json", [](const std::vector<int>& factors, int n) {
    return character_table_json(
        character_table(make_group_table(spec_of(factors), n)));
  });
}
