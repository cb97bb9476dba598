#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kdisp/bounds.hpp"
#include "kdisp/certify.hpp"
#include "kdisp/experiment.hpp"
#include "kdisp/generators.hpp"
#include "kdisp/partition.hpp"
#include "kdisp/pointset_io.hpp"
#include "kdisp/search.hpp"
#include "kdisp/solver.hpp"

namespace py = pybind11;
using namespace kdisp;

PYBIND11_MODULE(_kdisp, m) {
  m.doc() = "Exact and heuristic k-dispersion of point sets: largest axis-parallel "
            "box with at most k interior points, plus generators, partition "
            "verification, certificates, and closed-form bounds";

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__float__", &Rational::to_double)
      .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
      .def("__str__", &Rational::str)
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; });

  py::class_<AxisBox>(m, "AxisBox")
      .def(py::init<std::vector<double>, std::vector<double>, std::optional<unsigned>>(),
           py::arg("lo"), py::arg("hi"), py::arg("level") = std::nullopt)
      .def_property_readonly("dim", &AxisBox::dim)
      .def_property_readonly("lo", [](const AxisBox& b) {
        return std::vector<double>(b.lo().begin(), b.lo().end());
      })
      .def_property_readonly("hi", [](const AxisBox& b) {
        return std::vector<double>(b.hi().begin(), b.hi().end());
      })
      .def("__repr__", [](const AxisBox& b) { return "AxisBox(" + box_to_string(b) + ")"; });

  py::class_<PointMultiset>(m, "PointMultiset")
      .def(py::init<std::size_t, std::vector<std::vector<double>>, std::vector<std::uint64_t>,
                    std::optional<unsigned>>(),
           py::arg("dim"), py::arg("points"),
           py::arg("multiplicities") = std::vector<std::uint64_t>{},
           py::arg("mesh_level") = std::nullopt)
      .def_static("from_numerators", &PointMultiset::from_numerators, py::arg("dim"),
                  py::arg("mesh_level"), py::arg("numerators"),
                  py::arg("multiplicities") = std::vector<std::uint64_t>{})
      .def_property_readonly("dim", &PointMultiset::dim)
      .def_property_readonly("entry_count", &PointMultiset::entry_count)
      .def_property_readonly("total_size", &PointMultiset::total_size)
      .def_property_readonly("mesh_level", &PointMultiset::mesh_level)
      .def("point", [](const PointMultiset& x, std::size_t i) {
        return std::vector<double>(x.point(i).begin(), x.point(i).end());
      })
      .def("multiplicity", &PointMultiset::multiplicity)
      .def("with_point", &PointMultiset::with_point);

  m.def("volume", &volume, py::arg("box"));
  m.def("volume_exact", &volume_exact, py::arg("box"));
  m.def("count_inside", &count_inside, py::arg("points"), py::arg("box"));
  m.def("is_k_empty", &is_k_empty, py::arg("points"), py::arg("box"), py::arg("k"));

  py::class_<SearchLimits>(m, "SearchLimits")
      .def(py::init<>())
      .def_readwrite("max_boxes", &SearchLimits::max_boxes)
      .def_readwrite("threads", &SearchLimits::threads);

  py::class_<DispersionResult>(m, "DispersionResult")
      .def_readonly("value", &DispersionResult::value)
      .def_readonly("exact_value", &DispersionResult::exact_value)
      .def_readonly("witness", &DispersionResult::witness)
      .def_readonly("boxes_examined", &DispersionResult::boxes_examined)
      .def_readonly("pruned", &DispersionResult::pruned)
      .def_readonly("complete", &DispersionResult::complete)
      .def("__repr__", [](const DispersionResult& r) { return describe(r); });

  m.def("candidate_coordinates", &candidate_coordinates, py::arg("points"), py::arg("axis"));
  m.def("exact_k_dispersion", &exact_k_dispersion, py::arg("points"), py::arg("k"),
        py::arg("limits") = SearchLimits{}, py::call_guard<py::gil_scoped_release>());
  m.def("grid_exhaustive", &grid_exhaustive, py::arg("points"), py::arg("k"),
        py::arg("limits") = SearchLimits{}, py::call_guard<py::gil_scoped_release>());

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("trials", &SearchConfig::trials)
      .def_readwrite("seed", &SearchConfig::seed)
      .def_readwrite("max_rounds_per_trial", &SearchConfig::max_rounds_per_trial)
      .def_readwrite("threads", &SearchConfig::threads);
  m.def("stochastic_lower_bound", &stochastic_lower_bound, py::arg("points"), py::arg("k"),
        py::arg("config") = SearchConfig{}, py::call_guard<py::gil_scoped_release>());

  py::class_<MeshSpec>(m, "MeshSpec")
      .def(py::init([](unsigned m, std::size_t d, std::uint64_t n) {
             return MeshSpec{m, d, n};
           }),
           py::arg("m"), py::arg("d"), py::arg("n"))
      .def_readwrite("m", &MeshSpec::m)
      .def_readwrite("d", &MeshSpec::d)
      .def_readwrite("n", &MeshSpec::n);
  m.def("mesh_random_multiset", &mesh_random_multiset, py::arg("spec"), py::arg("seed"));
  m.def("perturb_to_set", &perturb_to_set, py::arg("points"), py::arg("delta"), py::arg("seed"));
  m.def("uniform_random", &uniform_random, py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("fibonacci_lattice", &fibonacci_lattice, py::arg("nu"));
  m.def("fibonacci_number", &fibonacci_number, py::arg("nu"));

  py::class_<PartitionCell>(m, "PartitionCell")
      .def(py::init([](unsigned m, std::vector<std::uint32_t> s, std::vector<std::uint32_t> p) {
             return PartitionCell{m, std::move(s), std::move(p)};
           }),
           py::arg("m"), py::arg("s"), py::arg("p_num"))
      .def_readonly("m", &PartitionCell::m)
      .def_readonly("s", &PartitionCell::s)
      .def_readonly("p_num", &PartitionCell::p_num);
  m.def("core_box", &core_box, py::arg("cell"));
  m.def("classify_box", &classify_box, py::arg("box"), py::arg("m"));
  m.def("a_m_of_s", &a_m_of_s, py::arg("s"), py::arg("m"));
  m.def("a_m_cap", &a_m_cap, py::arg("m"), py::arg("d"));
  m.def("enumerate_index_set", &enumerate_index_set, py::arg("m"), py::arg("d"),
        py::arg("budget") = 50'000'000);

  py::class_<LemmaReport>(m, "LemmaReport")
      .def_readonly("m", &LemmaReport::m)
      .def_readonly("d", &LemmaReport::d)
      .def_readonly("cells", &LemmaReport::cells)
      .def_readonly("min_probability", &LemmaReport::min_probability)
      .def_readonly("bound", &LemmaReport::bound)
      .def_readonly("holds", &LemmaReport::holds);
  m.def("verify_lemma_probability", &verify_lemma_probability, py::arg("m"), py::arg("d"),
        py::arg("budget") = 50'000'000);
  m.def("index_set_log_bound", &index_set_log_bound, py::arg("m"), py::arg("d"));

  py::class_<SignMatrix>(m, "SignMatrix")
      .def(py::init<const PointMultiset&>())
      .def_property_readonly("rows", &SignMatrix::rows)
      .def_property_readonly("cols", &SignMatrix::cols)
      .def("bit", &SignMatrix::bit)
      .def("column_distance", &SignMatrix::column_distance);

  py::class_<PairCertificate>(m, "PairCertificate")
      .def_readonly("j1", &PairCertificate::j1)
      .def_readonly("j2", &PairCertificate::j2)
      .def_readonly("flipped", &PairCertificate::flipped)
      .def_readonly("mismatch_rows", &PairCertificate::mismatch_rows)
      .def_readonly("box", &PairCertificate::box);
  m.def("sign_matrix", &sign_matrix, py::arg("points"));
  m.def("find_column_pair", &find_column_pair, py::arg("matrix"), py::arg("k"));
  m.def("certificate_box", &certificate_box, py::arg("points"), py::arg("certificate"));
  m.def("pigeonhole_threshold", &pigeonhole_threshold, py::arg("n"), py::arg("k"));
  m.def("sphere_packing_bound", &sphere_packing_bound, py::arg("n"), py::arg("k"));

  m.def("thm_a_upper", &thm_a_upper, py::arg("n"), py::arg("d"), py::arg("k"),
        py::arg("C") = 1.0);
  m.def("thm_b_lower", &thm_b_lower, py::arg("n"), py::arg("d"), py::arg("k"));
  m.def("ahr_lower", &ahr_lower, py::arg("n"), py::arg("d"));
  m.def("larcher_upper", &larcher_upper, py::arg("n"), py::arg("d"));
  m.def("rudolf_upper", &rudolf_upper, py::arg("n"), py::arg("d"));
  m.def("uv_upper", &uv_upper, py::arg("n"), py::arg("d"), py::arg("c") = 1.0);
  m.def("c_k", &c_k, py::arg("k"));
  m.def("condition_holds", &condition_holds, py::arg("n"), py::arg("m"), py::arg("d"),
        py::arg("k"));
  m.def("sufficient_n", &sufficient_n, py::arg("m"), py::arg("d"), py::arg("k"));
  m.def("recursion_lower", &recursion_lower, py::arg("n"), py::arg("ell"), py::arg("d"),
        py::arg("base_value"));

  m.def("pointset_to_json", &pointset_to_json, py::arg("points"));
  m.def("pointset_from_json", &pointset_from_json, py::arg("text"));
  m.def("save_pointset", &save_pointset, py::arg("points"), py::arg("path"));
  m.def("load_pointset", &load_pointset, py::arg("path"));

  m.attr("__version__") = "1.0.0";
}
