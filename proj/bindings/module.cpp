#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "goldenmean/analysis.hpp"
#include "goldenmean/checks.hpp"
#include "goldenmean/errors.hpp"
#include "goldenmean/oracle.hpp"
#include "goldenmean/render.hpp"
#include "goldenmean/series.hpp"

namespace py = pybind11;
namespace gm = goldenmean;

namespace {

gm::SeriesKind kind_of(const std::string& name) { return gm::series_from_name(name); }

gm::Dyadic dyadic_from(long mantissa, long exponent) {
    return gm::Dyadic(mpz_class(mantissa), exponent);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generalized golden means: exact dyadic series, certified root oracle, "
              "and accuracy analysis";

    py::register_exception<gm::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<gm::InexactDivision>(m, "InexactDivision", PyExc_ArithmeticError);
    py::register_exception<gm::RatioNotContracting>(m, "RatioNotContracting", PyExc_ArithmeticError);
    py::register_exception<gm::PrecisionExhausted>(m, "PrecisionExhausted", PyExc_RuntimeError);
    py::register_exception<gm::OraclePrecisionInsufficient>(m, "OraclePrecisionInsufficient",
                                                            PyExc_RuntimeError);

    py::class_<gm::Dyadic>(m, "Dyadic")
        .def(py::init(&dyadic_from), py::arg("mantissa"), py::arg("exponent") = 0)
        .def_property_readonly("mantissa",
                               [](const gm::Dyadic& d) { return d.mantissa().get_str(); })
        .def_property_readonly("exponent", &gm::Dyadic::exponent)
        .def("to_decimal",
             [](const gm::Dyadic& d, long places) {
                 auto r = d.to_decimal(places);
                 return py::make_tuple(r.text, r.truncated);
             },
             py::arg("places"))
        .def("floor_log10_abs", &gm::Dyadic::floor_log10_abs)
        .def("__add__", [](const gm::Dyadic& a, const gm::Dyadic& b) { return a + b; })
        .def("__sub__", [](const gm::Dyadic& a, const gm::Dyadic& b) { return a - b; })
        .def("__mul__", [](const gm::Dyadic& a, const gm::Dyadic& b) { return a * b; })
        .def("__neg__", [](const gm::Dyadic& a) { return -a; })
        .def("__eq__", [](const gm::Dyadic& a, const gm::Dyadic& b) { return a == b; })
        .def("__lt__", [](const gm::Dyadic& a, const gm::Dyadic& b) { return a < b; })
        .def("__repr__", [](const gm::Dyadic& d) {
            return "Dyadic(" + d.mantissa().get_str() + ", " + std::to_string(d.exponent()) + ")";
        });

    py::class_<gm::ReferenceValue>(m, "ReferenceValue")
        .def_property_readonly("target",
                               [](const gm::ReferenceValue& r) { return gm::to_string(r.target); })
        .def_readonly("value", &gm::ReferenceValue::value)
        .def_readonly("error_bound", &gm::ReferenceValue::error_bound);

    py::class_<gm::AccuracyRow>(m, "AccuracyRow")
        .def_readonly("n", &gm::AccuracyRow::n)
        .def_readonly("terms", &gm::AccuracyRow::terms)
        .def_readonly("predicted", &gm::AccuracyRow::predicted)
        .def_readonly("actual_alpha", &gm::AccuracyRow::actual_alpha)
        .def_readonly("actual_beta", &gm::AccuracyRow::actual_beta)
        .def_readonly("actual_gap", &gm::AccuracyRow::actual_gap)
        .def("__repr__", [](const gm::AccuracyRow& r) {
            return "AccuracyRow(n=" + std::to_string(r.n) + ", terms=" + std::to_string(r.terms) +
                   ", predicted=" + std::to_string(r.predicted) + ", actual=(" +
                   std::to_string(r.actual_alpha) + ", " + std::to_string(r.actual_beta) + ", " +
                   std::to_string(r.actual_gap) + "))";
        });

    m.def("evaluate",
          [](long n, const std::string& series, long terms) {
              return gm::evaluate(n, kind_of(series), terms);
          },
          py::arg("n"), py::arg("series"), py::arg("terms"),
          "Exact truncated series value with its affine wrapper applied.");
    m.def("tail_bound",
          [](long n, const std::string& series, long terms) {
              return gm::tail_bound(n, kind_of(series), terms);
          },
          py::arg("n"), py::arg("series"), py::arg("terms"),
          "Upper bound on the truncation error of evaluate(n, series, terms).");
    m.def("series_digits",
          [](long n, const std::string& series, long digits) {
              auto rv = gm::series_digits(n, kind_of(series), digits);
              return py::make_tuple(rv.text, rv.work, rv.error_exponent);
          },
          py::arg("n"), py::arg("series"), py::arg("digits"),
          "Certified decimal digits from the series alone: (text, terms, error_exponent).");
    m.def("oracle_digits",
          [](long n, const std::string& target, long digits) {
              auto rv = gm::oracle_digits(n, kind_of(target), digits);
              return py::make_tuple(rv.text, rv.work, rv.error_exponent);
          },
          py::arg("n"), py::arg("target"), py::arg("digits"),
          "Certified decimal digits from the root-finding oracle: (text, bits, error_exponent).");
    m.def("alpha_ref",
          [](long n, long bits, bool accelerate) { return gm::alpha_ref(n, bits, accelerate); },
          py::arg("n"), py::arg("bits"), py::arg("accelerate") = true);
    m.def("derived_ref",
          [](const std::string& target, long n, long bits) {
              return gm::derived_ref(kind_of(target), n, bits);
          },
          py::arg("target"), py::arg("n"), py::arg("bits"));
    m.def("digits_of_accuracy", &gm::digits_of_accuracy, py::arg("estimate"), py::arg("reference"));
    m.def("predicted_accuracy", &gm::predicted_accuracy, py::arg("n"), py::arg("terms"));
    m.def("term_bits",
          [](long n, const std::string& series, long k) {
              auto tb = gm::term_bits(n, kind_of(series), k);
              return py::make_tuple(tb.numerator_bits, tb.shift);
          },
          py::arg("n"), py::arg("series"), py::arg("k"));
    m.def("accuracy_table",
          [](const std::vector<std::pair<long, long>>& rows) { return gm::accuracy_table(rows); },
          py::arg("rows"));
    m.def("kbonacci_ratio", &gm::kbonacci_ratio, py::arg("n"), py::arg("i"), py::arg("digits"));
    m.def("verify",
          [](long n_max, long k_max, long bits) {
              auto suites = gm::run_all_checks(n_max, k_max, bits);
              py::list out;
              for (const auto& s : suites) {
                  py::dict d;
                  d["name"] = s.name;
                  d["checks"] = s.checks;
                  d["failures"] = s.failures;
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("n_max") = 16, py::arg("k_max") = 50, py::arg("bits") = 256);
}
