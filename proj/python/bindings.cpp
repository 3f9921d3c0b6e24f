#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <thetaform/cli.hpp>
#include <thetaform/corpus.hpp>
#include <thetaform/decompose.hpp>
#include <thetaform/eisenstein.hpp>
#include <thetaform/error.hpp>
#include <thetaform/eta.hpp>
#include <thetaform/numeric.hpp>
#include <thetaform/serialize.hpp>
#include <thetaform/theta.hpp>
#include <thetaform/wp.hpp>

namespace py = pybind11;
using namespace thetaform;

namespace
{

py::object to_fraction(const Rational &r)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(r));
}

Rational from_python(const py::handle &h)
{
    return parse_rational(py::str(h).cast<std::string>());
}

// JSON crosses the boundary as text; the Python side parses it.
std::string json_text(const json &j)
{
    return dump(j);
}

SL2Matrix matrix(const std::tuple<long, long, long, long> &m)
{
    return {std::get<0>(m), std::get<1>(m), std::get<2>(m), std::get<3>(m)};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact q-series for powers of theta2, their decompositions and numeric checks";

    const auto base = py::register_exception<error>(m, "Error", PyExc_RuntimeError);
#define THETAFORM_PY_ERROR(name) py::register_exception<name>(m, #name, base.ptr())
    THETAFORM_PY_ERROR(zero_leading_coefficient);
    THETAFORM_PY_ERROR(non_integral_exponent);
    THETAFORM_PY_ERROR(insufficient_order);
    THETAFORM_PY_ERROR(odd_index);
    THETAFORM_PY_ERROR(out_of_range);
    THETAFORM_PY_ERROR(unsupported_power);
    THETAFORM_PY_ERROR(residual_nonzero);
    THETAFORM_PY_ERROR(internal_mismatch);
    THETAFORM_PY_ERROR(convergence_too_slow);
    THETAFORM_PY_ERROR(odd_c);
    THETAFORM_PY_ERROR(branch_unavailable);
    THETAFORM_PY_ERROR(cutoff_too_small);
    THETAFORM_PY_ERROR(invalid_argument);
#undef THETAFORM_PY_ERROR

    py::class_<QSeries>(m, "QSeries", "Truncated series in u = q^(1/4) with rational coefficients")
        .def_static(
            "from_coefficients",
            [](QSeries::exponent_t min_exp, const std::vector<py::object> &coeffs, QSeries::exponent_t order) {
                std::vector<Rational> c;
                for (const auto &x : coeffs) {
                    c.push_back(from_python(x));
                }
                return QSeries::from_coefficients(min_exp, std::move(c), order);
            },
            py::arg("min_exp"), py::arg("coeffs"), py::arg("order"))
        .def_property_readonly("min_exp", &QSeries::min_exp)
        .def_property_readonly("order", &QSeries::order)
        .def("is_zero", &QSeries::is_zero)
        .def("coeff", [](const QSeries &s, QSeries::exponent_t e) { return to_fraction(s.coeff(e)); })
        .def("coefficients",
             [](const QSeries &s) {
                 py::list out;
                 for (const auto &c : s.coefficients()) {
                     out.append(to_fraction(c));
                 }
                 return out;
             })
        .def("truncated", &QSeries::truncated)
        .def("to_json", [](const QSeries &s) { return json_text(to_json(s)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__mul__", [](const QSeries &s, const py::object &c) { return s * from_python(c); })
        .def("__rmul__", [](const QSeries &s, const py::object &c) { return s * from_python(c); })
        .def("__neg__", [](const QSeries &s) { return -s; })
        .def(py::self == py::self)
        .def("__str__", [](const QSeries &s) { return s.to_string(); })
        .def("__repr__", [](const QSeries &s) { return "<QSeries " + s.to_string(6) + ">"; });

    m.def("series_from_json", [](const std::string &text) { return series_from_json(json::parse(text)); });
    m.def("equal_to_order",
          [](const QSeries &a, const QSeries &b, QSeries::exponent_t n) {
              const CheckResult r = equal_to_order(a, b, n);
              py::dict d;
              d["equal"] = r.equal;
              d["order_checked"] = r.order_checked;
              if (r.mismatch) {
                  d["mismatch"] = py::make_tuple(r.mismatch->u_exp, to_fraction(r.mismatch->lhs),
                                                 to_fraction(r.mismatch->rhs));
              }
              return d;
          });

    m.def("theta_power", &theta_power, py::arg("j"), py::arg("k"), py::arg("n"), py::arg("m") = 1,
          "theta_j(m tau)^k to u-order n");
    m.def(
        "eta_quotient",
        [](QSeries::exponent_t prefactor, const std::vector<std::pair<long, long>> &factors, QSeries::exponent_t n) {
            return expand(EtaQuotient{prefactor, factors}, n);
        },
        py::arg("prefactor_u_exp"), py::arg("factors"), py::arg("n"));
    m.def("lambert_odd", &lambert_odd);
    m.def("lambert_even", &lambert_even);
    m.def("sigma_series", &sigma_series);

    m.def("eisenstein_constant", [](long two_k) { return to_fraction(eisenstein_spec(two_k).constant); });
    m.def("decompose_json", [](long two_k, QSeries::exponent_t n) { return json_text(to_json(decompose(two_k, n))); });
    m.def("render_decomposition", [](long two_k, QSeries::exponent_t n) {
        return render_decomposition(two_k, decompose(two_k, n));
    });

    m.def("catalog", [] {
        py::list out;
        for (const auto &e : identity_catalog()) {
            out.append(py::make_tuple(e.id, to_string(e.group), e.statement, e.note));
        }
        return out;
    });
    m.def(
        "verify_json",
        [](const std::vector<std::string> &ids, QSeries::exponent_t n, unsigned jobs) {
            std::vector<const CorpusEntry *> entries;
            if (ids.empty()) {
                for (const auto &e : identity_catalog()) {
                    entries.push_back(&e);
                }
            } else {
                for (const auto &id : ids) {
                    entries.push_back(&find_identity(id));
                }
            }
            std::vector<IdentityCertificate> certs;
            {
                py::gil_scoped_release release;
                certs = verify_entries(entries, n, jobs);
            }
            json list = json::array();
            for (const auto &c : certs) {
                list.push_back(to_json(c));
            }
            return json_text(list);
        },
        py::arg("ids"), py::arg("n"), py::arg("jobs") = 1);

    m.def("palin_p", [](long n) { return json_text(to_json(palin_p(n))); });
    m.def("palin_P", [](long n) { return json_text(to_json(palin_P(n))); });
    m.def("wp_recurrence_poly", [](long two_k) { return json_text(to_json(wp_recurrence_poly(two_k))); });

    m.def("eval_theta", [](int j, complex_t tau) { return eval_theta(j, tau).value; });
    m.def("eval_eta", [](complex_t tau) { return eval_eta(tau).value; });
    m.def("psi_multiplier", [](const std::tuple<long, long, long, long> &s) { return psi_multiplier(matrix(s)); });
    m.def(
        "transform_check",
        [](const std::tuple<long, long, long, long> &s, complex_t tau, long power, double tol) {
            return json_text(to_json(transform_check(matrix(s), tau, power, tol)));
        },
        py::arg("sigma"), py::arg("tau"), py::arg("power") = 2, py::arg("tol") = default_theta_tol);
    m.def(
        "dedekind_eta_check",
        [](const std::tuple<long, long, long, long> &s, complex_t tau, double tol) {
            return json_text(to_json(dedekind_eta_check(matrix(s), tau, tol)));
        },
        py::arg("sigma"), py::arg("tau"), py::arg("tol") = default_theta_tol);
    m.def(
        "lattice_sum_check",
        [](const std::string &family, long k, complex_t tau, long cutoff, double tol) {
            return json_text(to_json(lattice_sum_check(parse_lattice_family(family), k, tau, cutoff, tol)));
        },
        py::arg("family"), py::arg("k"), py::arg("tau"), py::arg("cutoff"), py::arg("tol") = default_lattice_tol);

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
