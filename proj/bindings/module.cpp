// Python bindings: thin forwarding layer over the C++ library. Reports come
// back as small classes with readonly fields; integer arithmetic stays
// checked 64-bit.

#include <optional>
#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posetrep/dimension.hpp"
#include "posetrep/errors.hpp"
#include "posetrep/ff_oracle.hpp"
#include "posetrep/forms.hpp"
#include "posetrep/incidence.hpp"
#include "posetrep/poset.hpp"
#include "posetrep/poset_file.hpp"

namespace py = pybind11;
using namespace posetrep;

namespace {

std::string poset_repr(const Poset& p) {
  std::ostringstream os;
  os << "Poset(" << p.size() << " elements, height " << p.height() << ")";
  return os.str();
}

std::string dim_vector_repr(const DimVector& a) {
  std::ostringstream os;
  os << "DimVector(" << a.alpha0 << "; ";
  bool first = true;
  for (const auto& [label, value] : a.alpha) {
    if (!first) os << ' ';
    first = false;
    os << label << ':' << value;
  }
  os << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for subspace representations of finite posets";

  // Input problems become ValueError subclasses, precondition failures
  // RuntimeError subclasses, checked-arithmetic overflow the builtin
  // OverflowError. Bases are registered before derived types so the derived
  // translators (registered later, consulted first) take precedence.
  const auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<posetrep::SyntaxError>(m, "FileSyntaxError", input_error.ptr());
  const auto precondition_error =
      py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<NotAdmissibleError>(m, "NotAdmissibleError", precondition_error.ptr());
  py::register_exception<EmptyVarietyError>(m, "EmptyVarietyError", precondition_error.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<OverflowError>(m, "ArithmeticOverflowError", PyExc_OverflowError);

  py::class_<Poset>(m, "Poset")
      .def(py::init<>())
      .def("__len__", &Poset::size)
      .def("__repr__", &poset_repr)
      .def_property_readonly("height", &Poset::height)
      .def_property_readonly("labels", [](const Poset& p) { return p.labels(); })
      .def("contains", &Poset::contains, py::arg("label"))
      .def("less",
           py::overload_cast<const std::string&, const std::string&>(&Poset::less, py::const_),
           py::arg("s"), py::arg("t"))
      .def("level_of", &Poset::level_of, py::arg("s"))
      .def("level_partition", &Poset::level_partition)
      .def("down_set", &Poset::down_set, py::arg("s"))
      .def("maximal_elements", &Poset::maximal_elements)
      .def("hasse_covers", &Poset::hasse_covers);

  py::class_<DimVector>(m, "DimVector")
      .def(py::init<>())
      .def(py::init([](Int alpha0, std::map<std::string, Int> alpha) {
             DimVector a;
             a.alpha0 = alpha0;
             a.alpha = std::move(alpha);
             return a;
           }),
           py::arg("alpha0"), py::arg("alpha"))
      .def_readwrite("alpha0", &DimVector::alpha0)
      .def_readwrite("alpha", &DimVector::alpha)
      .def(py::self == py::self)
      .def("__repr__", &dim_vector_repr);

  py::class_<Admissibility>(m, "Admissibility")
      .def_readonly("admissible", &Admissibility::admissible)
      .def_readonly("violations", &Admissibility::violations)
      .def("__bool__", [](const Admissibility& a) { return a.admissible; });

  py::class_<IterationTrace>(m, "IterationTrace")
      .def_readonly("order", &IterationTrace::order)
      .def_readonly("iterates", &IterationTrace::iterates);

  py::class_<RecursionStep>(m, "RecursionStep")
      .def_readonly("x", &RecursionStep::x)
      .def_readonly("sum_dim", &RecursionStep::sum_dim)
      .def_readonly("fiber_k", &RecursionStep::fiber_k)
      .def_readonly("fiber_n", &RecursionStep::fiber_n)
      .def_readonly("fiber_dim", &RecursionStep::fiber_dim);

  py::class_<DimReport>(m, "DimReport")
      .def_readonly("dim_variety", &DimReport::dim_variety)
      .def_readonly("q_value", &DimReport::q_value)
      .def_readonly("gl_dim", &DimReport::gl_dim)
      .def_readonly("method", &DimReport::method)
      .def_readonly("trace", &DimReport::trace);

  py::class_<ScanReport>(m, "ScanReport")
      .def_readonly("passed", &ScanReport::pass)
      .def_readonly("witness", &ScanReport::witness)
      .def_readonly("witness_q", &ScanReport::witness_q)
      .def("__bool__", [](const ScanReport& r) { return r.pass; });

  py::class_<FitReport>(m, "FitReport")
      .def_readonly("verdict", &FitReport::verdict)
      .def_readonly("claimed_dim", &FitReport::claimed_dim)
      .def_readonly("fitted_degree", &FitReport::fitted_degree)
      .def_readonly("counts", &FitReport::counts)
      .def_readonly("poly", &FitReport::poly)
      .def_readonly("residuals", &FitReport::residuals)
      .def_readonly("note", &FitReport::note);

  py::class_<PosetFile>(m, "PosetFile")
      .def_readonly("path", &PosetFile::path)
      .def_readonly("poset", &PosetFile::poset)
      .def_readonly("dims", &PosetFile::dims);

  py::enum_<MaxElementChoice>(m, "MaxElementChoice")
      .value("LEVEL_ORDER_FIRST", MaxElementChoice::level_order_first)
      .value("LEVEL_ORDER_LAST", MaxElementChoice::level_order_last)
      .value("LABEL_MIN", MaxElementChoice::label_min);

  m.def("build_poset", &build_poset, py::arg("labels"), py::arg("relations"));
  m.def("enlarge", &enlarge, py::arg("poset"));
  m.def("remove_element", &remove_element, py::arg("poset"), py::arg("x"));
  m.def("induced_subposet", &induced_subposet, py::arg("poset"), py::arg("subset"));

  m.def("parse_poset_file", &parse_poset_file, py::arg("text"));
  m.def("load_poset_file", &load_poset_file, py::arg("path"));
  m.def("render_poset_file", &render_poset_file, py::arg("file"));
  m.def(
      "dot_export",
      [](const Poset& p, const std::optional<DimVector>& dims) {
        return dot_export(p, dims ? &*dims : nullptr);
      },
      py::arg("poset"), py::arg("dims") = std::nullopt);

  m.def(
      "incidence_matrix",
      [](const Poset& p) { return incidence_matrix(p).to_rows(); }, py::arg("poset"),
      "Incidence matrix rows in level order");
  m.def(
      "incidence_inverse", [](const Poset& p) { return incidence_inverse(p).to_rows(); },
      py::arg("poset"));
  m.def(
      "mobius_matrix", [](const Poset& p) { return mobius_matrix(p).to_rows(); },
      py::arg("poset"));
  m.def(
      "frobenius_factors",
      [](const Poset& p) {
        std::vector<std::pair<std::vector<std::vector<Int>>, std::vector<std::vector<Int>>>> out;
        for (const auto& [factor, inverse] : frobenius_factors(p)) {
          out.emplace_back(factor.to_rows(), inverse.to_rows());
        }
        return out;
      },
      py::arg("poset"), "List of (factor rows, inverse rows), one per level step");

  m.def("euler_form", &euler_form, py::arg("poset"), py::arg("alpha"));
  m.def("tits_form", &tits_form, py::arg("poset"), py::arg("beta"));
  m.def("coordinate_vector", &coordinate_vector, py::arg("poset"), py::arg("alpha"));
  m.def("is_admissible", &is_admissible, py::arg("poset"), py::arg("alpha"));
  m.def("iteration_sequence", &iteration_sequence, py::arg("poset"), py::arg("alpha"));

  m.def("grassmann_dim", &grassmann_dim, py::arg("k"), py::arg("n"));
  m.def("generic_sum_dim", &generic_sum_dim, py::arg("poset"), py::arg("alpha"));
  m.def("variety_dim", &variety_dim, py::arg("poset"), py::arg("alpha"));
  m.def("variety_dim_recursive", &variety_dim_recursive, py::arg("poset"), py::arg("alpha"),
        py::arg("choice") = MaxElementChoice::level_order_first);
  m.def("lemma2_defect", &lemma2_defect, py::arg("poset"), py::arg("x"), py::arg("alpha"));

  m.def("summands", &summands, py::arg("poset"), py::arg("alpha"),
        py::arg("budget") = kDefaultSummandBudget);
  m.def("summand_scan", &summand_scan, py::arg("poset"), py::arg("alpha"),
        py::arg("budget") = kDefaultSummandBudget);

  m.def("gaussian_binomial", &gaussian_binomial, py::arg("n"), py::arg("k"), py::arg("q"));
  m.def("count_points",
        py::overload_cast<const Poset&, const DimVector&, Int, Int>(&count_points),
        py::arg("poset"), py::arg("alpha"), py::arg("q"),
        py::arg("budget") = kDefaultCountBudget);
  m.def("max_sum_dim_empirical", &max_sum_dim_empirical, py::arg("poset"), py::arg("alpha"),
        py::arg("q"), py::arg("budget") = kDefaultCountBudget);
  m.def("fit_dimension", &fit_dimension, py::arg("poset"), py::arg("alpha"), py::arg("primes"),
        py::arg("claimed_dim"), py::arg("budget") = kDefaultCountBudget);
}
