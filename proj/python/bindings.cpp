#include "cumbound/asymptotics.hpp"
#include "cumbound/bounds.hpp"
#include "cumbound/combinatorics.hpp"
#include "cumbound/distributions.hpp"
#include "cumbound/numeric.hpp"
#include "cumbound/tail.hpp"
#include "cumbound/transforms.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;

namespace pybind11::detail {

// Arbitrary-precision integers cross the boundary as Python ints, through
// their decimal representation.
template <>
struct type_caster<cumbound::Int> {
    PYBIND11_TYPE_CASTER(cumbound::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = cumbound::Int(std::string(py::str(src)));
        return true;
    }

    static handle cast(const cumbound::Int& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

// Exact rationals map to fractions.Fraction. Ints and Fractions load;
// binary floats are rejected so exactness is never silently lost.
template <>
struct type_caster<cumbound::Rat> {
    PYBIND11_TYPE_CASTER(cumbound::Rat, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) return false;
        if (PyLong_Check(src.ptr())) {
            value = cumbound::Rat(cumbound::Int(std::string(py::str(src))));
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            const cumbound::Int num(std::string(py::str(src.attr("numerator"))));
            const cumbound::Int den(std::string(py::str(src.attr("denominator"))));
            if (den == 0) return false;
            value = cumbound::Rat(num, den);
            return true;
        }
        return false;
    }

    static handle cast(const cumbound::Rat& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(
            PyLong_FromString(boost::multiprecision::numerator(src).str().c_str(), nullptr, 10));
        object den = reinterpret_steal<object>(
            PyLong_FromString(boost::multiprecision::denominator(src).str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

// Exact-or-float scalars surface as Fraction or float.
template <>
struct type_caster<cumbound::Value> {
    PYBIND11_TYPE_CASTER(cumbound::Value, const_name("Union[Fraction, float]"));

    bool load(handle src, bool convert) {
        type_caster<cumbound::Rat> rat_caster;
        if (rat_caster.load(src, convert)) {
            value = cumbound::Value(static_cast<cumbound::Rat&>(rat_caster));
            return true;
        }
        if (PyFloat_Check(src.ptr())) {
            value = cumbound::Value(PyFloat_AsDouble(src.ptr()));
            return true;
        }
        return false;
    }

    static handle cast(const cumbound::Value& src, return_value_policy policy, handle parent) {
        if (cumbound::is_exact(src)) {
            return type_caster<cumbound::Rat>::cast(std::get<cumbound::Rat>(src), policy, parent);
        }
        return PyFloat_FromDouble(std::get<double>(src));
    }
};

}  // namespace pybind11::detail

namespace {

using namespace cumbound;

MomentSequence make_moment_sequence(const std::vector<Rat>& values,
                                    const std::vector<Value>& abs_values, bool mean_known_zero,
                                    bool symmetric) {
    MomentSequence m;
    m.values = values;
    m.abs_values = abs_values;
    m.mean_known_zero = mean_known_zero;
    m.symmetric = symmetric;
    return m;
}

MixedMomentTable make_mixed_table(const py::dict& moments, int dimension, int max_total_degree,
                                  const py::dict& abs_moments) {
    MixedMomentTable table;
    table.dimension = dimension;
    table.max_total_degree = max_total_degree;
    for (const auto& item : moments) {
        table.moments.emplace(item.first.cast<std::vector<int>>(), item.second.cast<Rat>());
    }
    for (const auto& item : abs_moments) {
        table.abs_moments.emplace(item.first.cast<std::pair<int, int>>(),
                                  item.second.cast<Rat>());
    }
    return table;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cumulant-bound coefficients, moment transforms, universal "
              "cumulant bounds, asymptotic rates and Bernstein tail calculators";
    m.attr("__version__") = "0.1.0";

    py::enum_<PartitionClass>(m, "PartitionClass")
        .value("All", PartitionClass::All)
        .value("NoSingletons", PartitionClass::NoSingletons)
        .value("EvenBlocks", PartitionClass::EvenBlocks);

    // combinatorics
    m.def("stirling2", &stirling2, py::arg("n"), py::arg("k"));
    m.def("ordered_bell", &ordered_bell, py::arg("m"));
    m.def("bell_ordinary", &bell_ordinary, py::arg("n"));
    m.def("no_singleton_bell", &no_singleton_bell, py::arg("n"));
    m.def("count_restricted", &count_restricted, py::arg("cls"), py::arg("n"), py::arg("k"));
    m.def("coefficient_mass", &coefficient_mass, py::arg("cls"), py::arg("n"));
    m.def(
        "enumerate_partitions",
        [](int n, PartitionClass cls, int limit) {
            std::vector<std::vector<std::vector<int>>> out;
            for (const auto& partition : enumerate_partitions(n, cls, limit)) {
                out.push_back(partition.blocks);
            }
            return out;
        },
        py::arg("n"), py::arg("cls") = PartitionClass::All,
        py::arg("limit") = kEnumerationLimit);

    // transforms
    m.def(
        "moments_to_cumulants",
        [](const std::vector<Rat>& moments) {
            MomentSequence m;
            m.values = moments;
            return moments_to_cumulants(m).values;
        },
        py::arg("moments"));
    m.def(
        "cumulants_to_moments",
        [](const std::vector<Rat>& cumulants) {
            CumulantSequence k;
            k.values = cumulants;
            return cumulants_to_moments(k).values;
        },
        py::arg("cumulants"));
    m.def(
        "center_moments",
        [](const std::vector<Rat>& moments) {
            MomentSequence m;
            m.values = moments;
            return center_moments(m).values;
        },
        py::arg("moments"));
    m.def(
        "joint_cumulant",
        [](const py::dict& moments, const std::vector<int>& nu, int max_total_degree, int limit) {
            MultiIndex index{nu};
            const int total = index.total_order();
            MixedMomentTable table = make_mixed_table(
                moments, index.dimension(), max_total_degree > 0 ? max_total_degree : total,
                py::dict());
            return joint_cumulant(table, index, limit);
        },
        py::arg("moments"), py::arg("nu"), py::arg("max_total_degree") = 0,
        py::arg("limit") = kEnumerationLimit,
        "Joint cumulant from a dict {exponent tuple: Fraction} of mixed moments");

    // bounds
    py::class_<ForwardBound>(m, "ForwardBound")
        .def_readonly("coefficient", &ForwardBound::coefficient)
        .def_readonly("value", &ForwardBound::value)
        .def_readonly("vanishes", &ForwardBound::vanishes);
    m.def("forward_bound", &forward_bound, py::arg("cls"), py::arg("n"),
          py::arg("moment_functional"));
    m.def(
        "multivariate_bound",
        [](const std::vector<int>& nu, const std::vector<double>& functionals,
           PartitionClass cls) {
            return multivariate_bound(MultiIndex{nu}, functionals, cls);
        },
        py::arg("nu"), py::arg("functionals"), py::arg("cls"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("order", &BoundReport::order)
        .def_readonly("bound_class", &BoundReport::bound_class)
        .def_property_readonly("family",
                               [](const BoundReport& r) {
                                   return std::string(moment_functional_name(r.functional_kind));
                               })
        .def_readonly("cumulant_abs", &BoundReport::cumulant_abs)
        .def_readonly("coefficient", &BoundReport::coefficient)
        .def_readonly("moment_functional", &BoundReport::moment_functional)
        .def_readonly("bound_value", &BoundReport::bound_value)
        .def_readonly("slack_ratio", &BoundReport::slack_ratio)
        .def_readonly("strict", &BoundReport::strict)
        .def_readonly("equality", &BoundReport::equality)
        .def_readonly("vanishes", &BoundReport::vanishes)
        .def_readonly("exact", &BoundReport::exact)
        .def("__repr__", [](const BoundReport& r) {
            return "<BoundReport n=" + std::to_string(r.order) + " family=" +
                   std::string(moment_functional_name(r.functional_kind)) +
                   " slack=" + format_double(r.slack_ratio) + ">";
        });
    m.def(
        "bound_report",
        [](const std::vector<Rat>& moments, const std::vector<Value>& abs_moments,
           bool mean_known_zero, bool symmetric, int n_max) {
            MomentSequence m =
                make_moment_sequence(moments, abs_moments, mean_known_zero, symmetric);
            return bound_report(m, n_max > 0 ? n_max : m.order());
        },
        py::arg("moments"), py::arg("abs_moments"), py::arg("mean_known_zero") = false,
        py::arg("symmetric") = false, py::arg("n_max") = 0);

    m.def(
        "envelope",
        [](const std::vector<Rat>& cumulants) {
            CumulantSequence k;
            k.values = cumulants;
            return envelope(k).value;
        },
        py::arg("cumulants"));

    py::class_<ConverseReport>(m, "ConverseReport")
        .def_readonly("order", &ConverseReport::order)
        .def_readonly("raw_moment_abs", &ConverseReport::raw_moment_abs)
        .def_readonly("central_moment_abs", &ConverseReport::central_moment_abs)
        .def_readonly("envelope_value", &ConverseReport::envelope_value)
        .def_readonly("bell_count", &ConverseReport::bell_count)
        .def_readonly("no_singleton_count", &ConverseReport::no_singleton_count)
        .def_readonly("raw_limit", &ConverseReport::raw_limit)
        .def_readonly("central_limit", &ConverseReport::central_limit)
        .def_readonly("raw_slack", &ConverseReport::raw_slack)
        .def_readonly("central_slack", &ConverseReport::central_slack)
        .def_readonly("raw_ok", &ConverseReport::raw_ok)
        .def_readonly("central_ok", &ConverseReport::central_ok);
    m.def(
        "converse_sweep",
        [](const std::vector<Rat>& moments, int n_max) {
            MomentSequence m;
            m.values = moments;
            return converse_sweep(m, n_max > 0 ? n_max : m.order());
        },
        py::arg("moments"), py::arg("n_max") = 0);

    // asymptotics
    py::class_<RateConstant>(m, "RateConstant")
        .def_readonly("cls", &RateConstant::cls)
        .def_readonly("rho", &RateConstant::rho)
        .def_readonly("defining_equation", &RateConstant::defining_equation);
    m.def("rate", &rate, py::arg("cls"));
    m.def("asymptotic_coefficient", &asymptotic_coefficient, py::arg("cls"), py::arg("n"));
    m.def("ratio_diagnostic", &ratio_diagnostic, py::arg("cls"), py::arg("n_max"));
    m.def("egf_coefficients", &egf_coefficients, py::arg("cls"), py::arg("n_max"));
    m.def("cgf_radius_lower_bound", &cgf_radius_lower_bound, py::arg("rho"), py::arg("L"));
    py::class_<EfficiencyGap>(m, "EfficiencyGap")
        .def_readonly("rho_sym", &EfficiencyGap::rho_sym)
        .def_readonly("pi_half", &EfficiencyGap::pi_half)
        .def_readonly("eta", &EfficiencyGap::eta);
    m.def("efficiency_gap", &efficiency_gap);
    m.def("rademacher_rate", &rademacher_rate, py::arg("two_m"));

    // distributions
    py::class_<ReferenceLaw>(m, "ReferenceLaw")
        .def_property_readonly("name", &ReferenceLaw::name)
        .def_property_readonly("symmetric", &ReferenceLaw::symmetric)
        .def_property_readonly("mean_zero", &ReferenceLaw::mean_zero)
        .def_property_readonly("unit_absolute_moments", &ReferenceLaw::unit_absolute_moments)
        .def("moment", &law_moment, py::arg("n"))
        .def("abs_moment", &law_abs_moment, py::arg("n"))
        .def("cumulant", &law_cumulant, py::arg("n"))
        .def(
            "sample",
            [](const ReferenceLaw& law, std::size_t count, std::uint64_t seed) {
                return sample(law, count, seed);
            },
            py::arg("count"), py::arg("seed"))
        .def("__repr__", [](const ReferenceLaw& law) { return "<ReferenceLaw " + law.name() + ">"; });
    m.def("law", &parse_law, py::arg("spec"),
          "Reference law from a spec string such as 'gaussian:sigma=1'");
    m.def("law_registry", &law_registry);
    m.def(
        "law_bound_report",
        [](const ReferenceLaw& law, int n_max) {
            return bound_report(law_moment_sequence(law, n_max), n_max);
        },
        py::arg("law"), py::arg("n_max"));
    m.def(
        "law_converse_sweep",
        [](const ReferenceLaw& law, int n_max) {
            return converse_sweep(law_moment_sequence(law, n_max), n_max);
        },
        py::arg("law"), py::arg("n_max"));
    m.def(
        "empirical_moments",
        [](const std::vector<double>& samples, int n_max) {
            return empirical_moments(samples, n_max);
        },
        py::arg("samples"), py::arg("n_max"));

    // tail
    py::class_<DerivedParams>(m, "DerivedParams")
        .def_readonly("v_prime", &DerivedParams::v_prime)
        .def_readonly("b", &DerivedParams::b)
        .def_readonly("a_cen", &DerivedParams::a_cen)
        .def_readonly("scale", &DerivedParams::scale)
        .def_readonly("variance", &DerivedParams::variance);
    m.def(
        "bernstein_tail",
        [](double v, double b, double x, bool two_sided) {
            return bernstein_tail(BernsteinParams{v, b}, x, two_sided);
        },
        py::arg("v"), py::arg("b"), py::arg("x"), py::arg("two_sided") = false);
    m.def(
        "cgf_quadratic_bound",
        [](double v, double b, double t) { return cgf_quadratic_bound(BernsteinParams{v, b}, t); },
        py::arg("v"), py::arg("b"), py::arg("t"));
    m.def(
        "compute_A_cen",
        [](int n_max) {
            const ACenSweep sweep = compute_A_cen(n_max);
            return py::make_tuple(sweep.value, sweep.ratios);
        },
        py::arg("n_max") = 64, "Returns (A_cen, per-order ratio list starting at n = 2)");
    m.def("derive_params", &derive_params, py::arg("v"), py::arg("L"), py::arg("n_max") = 64);
    m.def(
        "validate_moment_growth",
        [](const ReferenceLaw& law, double v, double L, int n_max) -> py::object {
            const auto violation = validate_moment_growth(law, v, L, n_max);
            if (violation) return py::int_(*violation);
            return py::none();
        },
        py::arg("law"), py::arg("v"), py::arg("L"), py::arg("n_max") = 16,
        "First order violating E|X|^n <= v L^(n-2), or None");
    m.def(
        "cumulant_condition_check",
        [](const std::vector<Rat>& cumulants, double v, double b) {
            CumulantSequence k;
            k.values = cumulants;
            const auto result = cumulant_condition_check(k, BernsteinParams{v, b});
            return py::make_tuple(result.ok, result.first_violation
                                                 ? py::object(py::int_(*result.first_violation))
                                                 : py::object(py::none()));
        },
        py::arg("cumulants"), py::arg("v"), py::arg("b"),
        "Returns (ok, first violating order or None); requires kappa_1 = 0");
}
