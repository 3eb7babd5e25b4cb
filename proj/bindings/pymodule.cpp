#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "polyhom/fp_relation.hpp"
#include "polyhom/operators.hpp"
#include "polyhom/script.hpp"
#include "polyhom/verify.hpp"

namespace py = pybind11;
using namespace polyhom;

namespace {

gf::Matrix to_gf_matrix(int p, const std::vector<std::vector<int>>& rows, int cols) {
  gf::Matrix m(p, (int)rows.size(), cols);
  for (int i = 0; i < (int)rows.size(); ++i) {
    if ((int)rows[i].size() != cols) throw Error("rows must have length " + std::to_string(cols));
    for (int j = 0; j < cols; ++j) m.at(i, j) = ((rows[i][j] % p) + p) % p;
  }
  return m;
}

std::vector<std::vector<int>> from_gf_matrix(const gf::Matrix& m) {
  std::vector<std::vector<int>> rows(m.rows, std::vector<int>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
  return rows;
}

std::vector<std::vector<std::string>> matrix_strings(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i].push_back(to_fraction(m.at(i, j)));
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact calculator for measure-weighted subgroup relations";

  py::register_exception<Error>(m, "PolyhomError");

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_static("cyclic",
                  [](int n) { return std::const_pointer_cast<FiniteGroup>(FiniteGroup::cyclic(n)); })
      .def_static("symmetric",
                  [](int n) {
                    return std::const_pointer_cast<FiniteGroup>(FiniteGroup::symmetric(n));
                  })
      .def_static("product",
                  [](const GroupPtr& a, const GroupPtr& b) {
                    return std::const_pointer_cast<FiniteGroup>(FiniteGroup::direct_product(a, b));
                  })
      .def_static("from_table",
                  [](const std::vector<std::vector<int>>& t) {
                    return std::const_pointer_cast<FiniteGroup>(FiniteGroup::from_cayley_table(t));
                  })
      .def("order", &FiniteGroup::order)
      .def("identity", &FiniteGroup::identity)
      .def("op", &FiniteGroup::op)
      .def("inverse", &FiniteGroup::inverse)
      .def("is_abelian", &FiniteGroup::is_abelian);

  py::class_<Subgroup>(m, "Subgroup")
      .def_static("generate", &Subgroup::generate)
      .def_static("from_elements", &Subgroup::from_elements)
      .def("elements", &Subgroup::elements)
      .def("size", &Subgroup::size);
  m.def("all_subgroups", [](const GroupPtr& g) { return all_subgroups(g, 0); });
  m.def("subgroup_index", &subgroup_index);
  m.def("is_normal_in", &is_normal_in);

  py::class_<MultRelation>(m, "Relation")
      .def_static("generate", &MultRelation::generate)
      .def_static("from_pairs", &MultRelation::from_pairs)
      .def_static("graph", &MultRelation::graph)
      .def_static("identity", &MultRelation::identity)
      .def_static("full", &MultRelation::full)
      .def("pairs", &MultRelation::pairs)
      .def("dom", [](const MultRelation& r) { return r.dom().elements(); })
      .def("im", [](const MultRelation& r) { return r.im().elements(); })
      .def("ker", [](const MultRelation& r) { return r.ker().elements(); })
      .def("indef", [](const MultRelation& r) { return r.indef().elements(); })
      .def("__eq__", [](const MultRelation& a, const MultRelation& b) { return a == b; });
  m.def("rel_compose", &rel_compose);
  m.def("pseudoinverse", &pseudoinverse);

  py::class_<MeasuredGroup>(m, "Measured")
      .def(py::init([](GroupPtr g, const std::string& pm) {
             return measured(std::move(g), parse_fraction(pm));
           }),
           py::arg("group"), py::arg("point_mass") = "1/1")
      .def_property_readonly(
          "group",
          [](const MeasuredGroup& g) { return std::const_pointer_cast<FiniteGroup>(g.group); })
      .def_property_readonly("point_mass",
                             [](const MeasuredGroup& g) { return to_fraction(g.point_mass); });

  py::class_<Polyhom>(m, "Polyhom")
      .def_static("make",
                  [](const MultRelation& r, const std::string& w, const MeasuredGroup& s,
                     const MeasuredGroup& t) {
                    return Polyhom::make(r, parse_fraction(w), s, t);
                  })
      .def_static("zero", &Polyhom::zero)
      .def_static("identity", &Polyhom::identity)
      .def("is_zero", &Polyhom::is_zero)
      .def("alpha", [](const Polyhom& p) { return to_fraction(p.alpha()); })
      .def("beta", [](const Polyhom& p) { return to_fraction(p.beta()); })
      .def("weight", [](const Polyhom& p) { return to_fraction(p.weight()); })
      .def("relation", &Polyhom::relation)
      .def("matrix", [](const Polyhom& p) { return matrix_strings(pi(p)); })
      .def("__eq__", [](const Polyhom& a, const Polyhom& b) { return a == b; });
  m.def("compose", &ph_compose, "compose(t, r): apply r first, then t");
  m.def("involution", &involution);
  m.def("decompose", [](const Polyhom& p) {
    Decomposition d = decompose(p);
    return py::make_tuple(d.q, d.s, d.t);
  });
  m.def("box_measure", [](const Polyhom& p, const std::vector<int>& a,
                          const std::vector<int>& b) {
    return to_fraction(box_measure(p, a, b));
  });
  m.def("lambda_membership", [](const MeasuredGroup& g, const std::string& q) {
    return lambda_membership(g, parse_fraction(q));
  });
  m.def("angle", [](const MeasuredGroup& g, const Subgroup& phi, const Subgroup& delta,
                    const Subgroup& psi, const Subgroup& gamma) {
    return to_fraction(angle_check(g, phi, delta, psi, gamma));
  });

  py::class_<FpWindow>(m, "Window")
      .def(py::init([](int p, int radius) { return FpWindow{p, radius}; }))
      .def_readonly("p", &FpWindow::p)
      .def_readonly("radius", &FpWindow::radius);

  py::class_<FpPolyhom>(m, "FpPolyhom")
      .def_static("make",
                  [](const FpWindow& win, const std::vector<std::vector<int>>& basis,
                     const std::string& w) {
                    auto carrier = gf::make_subspace(
                        win.p, 4 * win.radius, to_gf_matrix(win.p, basis, 4 * win.radius));
                    return FpPolyhom::make(win.space(), std::move(carrier), parse_fraction(w));
                  })
      .def_static("identity",
                  [](const FpWindow& win) { return FpPolyhom::identity(win.space()); })
      .def_static("graph",
                  [](const FpWindow& win, const std::vector<std::vector<int>>& rows) {
                    return FpPolyhom::graph(win.space(),
                                            to_gf_matrix(win.p, rows, 2 * win.radius));
                  })
      .def("is_zero", &FpPolyhom::is_zero)
      .def("alpha", [](const FpPolyhom& p) { return to_fraction(p.alpha()); })
      .def("beta", [](const FpPolyhom& p) { return to_fraction(p.beta()); })
      .def("weight", [](const FpPolyhom& p) { return to_fraction(p.weight()); })
      .def("basis", [](const FpPolyhom& p) { return from_gf_matrix(p.carrier().basis); })
      .def("marginal_dims",
           [](const FpPolyhom& p) {
             auto d = p.marginal_dims();
             return py::make_tuple(d.dom, d.im, d.ker, d.indef);
           })
      .def("__eq__", [](const FpPolyhom& a, const FpPolyhom& b) { return a == b; });
  m.def("fp_compose", &fp_compose, "fp_compose(t, r): apply r first, then t");
  m.def("theta", [](const FpWindow& win, int level) { return theta(win, level); });
  m.def("sandwich", [](const FpPolyhom& r, const FpWindow& win, int level) {
    return sandwich(r, win, level);
  });
  m.def("chi", [](int p, int s, int d, const std::vector<std::vector<int>>& rows) {
    return chi(to_gf_matrix(p, rows, 2 * s + d), s, d);
  });
  m.def("box_discrepancy",
        [](const FpPolyhom& a, const FpPolyhom& b, const FpWindow& win, int k, int l) {
          return to_fraction(box_discrepancy(a, b, win, k, l));
        });
  m.def("realize_finitary",
        [](const FpPolyhom& r, const FpWindow& win, int level,
           long budget) -> py::object {
          auto g = realize_finitary(r, win, level, budget);
          if (!g) return py::none();
          return py::cast(from_gf_matrix(*g));
        },
        py::arg("r"), py::arg("window"), py::arg("level"), py::arg("budget") = 200);
  m.def("lower_to_group", &lower_to_group);

  m.def("run_script", &parse_script);
  py::class_<Session>(m, "Session")
      .def("polyhom", &Session::polyhom)
      .def("fp_polyhom", &Session::fp_polyhom)
      .def("group", [](const Session& s, const std::string& n) {
        return std::const_pointer_cast<FiniteGroup>(s.group(n));
      });

  m.def("verify", [](const std::string& suite) {
    py::list out;
    for (const auto& r : run_suites(suite, VerifyOptions{})) {
      py::dict d;
      d["name"] = r.name;
      d["checked"] = r.checked;
      d["failed"] = r.failed;
      d["ok"] = r.ok();
      out.append(d);
    }
    return out;
  });
}
