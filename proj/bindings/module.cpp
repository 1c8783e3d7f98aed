#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaprec/json_io.hpp"
#include "gaprec/rational.hpp"
#include "gaprec/recurrence.hpp"
#include "gaprec/semigroup.hpp"
#include "gaprec/series.hpp"
#include "gaprec/version.hpp"
#include "gaprec/walk.hpp"
#include "gaprec/witness.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact bridge: gaprec::Rational <-> fractions.Fraction. Accepts int, str
// ("p" or "p/q") and Fraction on the way in; floats are rejected so no
// rounding can sneak into an exact computation.
template <>
struct type_caster<gaprec::Rational> {
 public:
  PYBIND11_TYPE_CASTER(gaprec::Rational, const_name("Fraction"));

  bool load(handle src, bool) {
    if (src.is_none() || PyFloat_Check(src.ptr())) return false;
    try {
      value = gaprec::parse_rational(py::str(src).cast<std::string>());
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  static handle cast(const gaprec::Rational& src, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(gaprec::to_string(src)).release();
  }
};

}  // namespace pybind11::detail

namespace {

using gaprec::NumericalSemigroup;
using gaprec::Rational;
using gaprec::WeightVector;

WeightVector weights_or_ones(const std::optional<std::vector<Rational>>& w,
                             const NumericalSemigroup& s) {
  if (w) return WeightVector(*w);
  return WeightVector::ones(s.generators().count());
}

std::int64_t degree_or_default(const std::optional<std::int64_t>& degree,
                               const NumericalSemigroup& s) {
  return degree ? *degree : gaprec::default_truncation(s);
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical semigroup gap sets, their vanishing linear recurrences, and the "
            "associated increasing random walks, under exact rational arithmetic.";

  py::register_exception<gaprec::Error>(m, "Error");

  py::class_<NumericalSemigroup>(m, "Semigroup")
      .def(py::init([](std::vector<std::int64_t> generators) {
             return gaprec::new_semigroup(std::move(generators));
           }),
           py::arg("generators"),
           "Numerical semigroup generated by a list of positive integers with gcd 1.")
      .def_property_readonly(
          "generators",
          [](const NumericalSemigroup& s) { return s.generators().elements(); })
      .def_property_readonly("gaps",
                             [](const NumericalSemigroup& s) { return s.gaps().values; })
      .def_property_readonly("frobenius",
                             [](const NumericalSemigroup& s) { return s.frobenius(); })
      .def("contains", &NumericalSemigroup::contains, py::arg("k"))
      .def("__contains__", &NumericalSemigroup::contains)
      .def("__repr__", [](const NumericalSemigroup& s) {
        std::string out = "Semigroup([";
        const auto& gens = s.generators().elements();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(gens[i]);
        }
        return out + "])";
      });

  m.def("reduce_gcd", &gaprec::reduce_gcd, py::arg("generators"),
        "Divide every element by the collective gcd.");

  m.def("default_truncation", &gaprec::default_truncation, py::arg("semigroup"));

  m.def(
      "build_recurrence",
      [](const NumericalSemigroup& s, const std::optional<std::vector<Rational>>& weights) {
        gaprec::RecurrenceSpec rec = gaprec::build_recurrence(s, weights_or_ones(weights, s));
        py::dict out;
        out["order"] = rec.order;
        out["alpha"] = rec.alphas;
        return out;
      },
      py::arg("semigroup"), py::arg("weights") = py::none(),
      "Order and dense alpha vector of the recurrence induced by (semigroup, weights).");

  m.def(
      "pad_order",
      [](const NumericalSemigroup& s, std::int64_t beta,
         const std::optional<std::vector<Rational>>& weights,
         const std::optional<Rational>& beta_weight) {
        auto [padded, w] = gaprec::pad_order(s, weights_or_ones(weights, s), beta,
                                             beta_weight.value_or(Rational(1)));
        return py::make_tuple(padded, w.values());
      },
      py::arg("semigroup"), py::arg("beta"), py::arg("weights") = py::none(),
      py::arg("beta_weight") = py::none(),
      "Append beta (a member above every generator) as a redundant generator, "
      "raising the recurrence order to beta; returns (semigroup, weights).");

  m.def(
      "run_recurrence",
      [](const NumericalSemigroup& s, const std::optional<std::vector<Rational>>& weights,
         const std::optional<std::int64_t>& degree) {
        return gaprec::run_recurrence(s, weights_or_ones(weights, s), degree_or_default(degree, s))
            .values;
      },
      py::arg("semigroup"), py::arg("weights") = py::none(), py::arg("degree") = py::none(),
      "Exact solution window g_0..g_D of the recurrence.");

  m.def(
      "zero_set",
      [](const std::vector<Rational>& values) {
        gaprec::SequenceWindow window{values,
                                      static_cast<std::int64_t>(values.size()) - 1};
        return gaprec::zero_set(window);
      },
      py::arg("values"));

  m.def(
      "verify_vanishing",
      [](const NumericalSemigroup& s, const std::optional<std::vector<Rational>>& weights,
         const std::optional<std::int64_t>& degree) {
        gaprec::VanishingReport report =
            gaprec::verify_vanishing(s, weights_or_ones(weights, s), degree_or_default(degree, s));
        py::dict out;
        out["sequence"] = report.window.values;
        out["zeros"] = report.zeros;
        out["gaps"] = report.gaps_in_range;
        out["matches"] = report.matches;
        return out;
      },
      py::arg("semigroup"), py::arg("weights") = py::none(), py::arg("degree") = py::none(),
      "Compare the recurrence zero set with the sieve gap set.");

  m.def(
      "characteristic_polynomial",
      [](const NumericalSemigroup& s, const std::optional<std::vector<Rational>>& weights) {
        return gaprec::characteristic_polynomial(
                   gaprec::build_recurrence(s, weights_or_ones(weights, s)))
            .coefficients;
      },
      py::arg("semigroup"), py::arg("weights") = py::none(),
      "Monic characteristic polynomial coefficients, by descending power.");

  m.def(
      "generating_series",
      [](const NumericalSemigroup& s, const std::optional<std::vector<Rational>>& weights,
         const std::optional<std::int64_t>& degree) {
        return gaprec::generating_series(s, weights_or_ones(weights, s),
                                         degree_or_default(degree, s))
            .coefficients;
      },
      py::arg("semigroup"), py::arg("weights") = py::none(), py::arg("degree") = py::none(),
      "Series expansion of 1/(1 - sum w_i z^a_i) through the given degree.");

  m.def(
      "step_power",
      [](const NumericalSemigroup& s, std::int64_t t,
         const std::optional<std::vector<Rational>>& weights,
         const std::optional<std::int64_t>& degree) {
        return gaprec::step_power(s, weights_or_ones(weights, s), t, degree_or_default(degree, s))
            .coefficients;
      },
      py::arg("semigroup"), py::arg("t"), py::arg("weights") = py::none(),
      py::arg("degree") = py::none());

  m.def(
      "step_power_sum",
      [](const NumericalSemigroup& s, const std::optional<std::vector<Rational>>& weights,
         const std::optional<std::int64_t>& degree) {
        return gaprec::step_power_sum(s, weights_or_ones(weights, s),
                                      degree_or_default(degree, s))
            .coefficients;
      },
      py::arg("semigroup"), py::arg("weights") = py::none(), py::arg("degree") = py::none());

  m.def(
      "normalize_weights",
      [](const std::vector<Rational>& weights) {
        return gaprec::normalize_weights(WeightVector(weights)).values();
      },
      py::arg("weights"));

  m.def(
      "exact_visit_probabilities",
      [](const NumericalSemigroup& s, const std::vector<Rational>& probabilities,
         const std::optional<std::int64_t>& degree) {
        return gaprec::exact_visit_probabilities(s, WeightVector(probabilities),
                                                 degree_or_default(degree, s))
            .values;
      },
      py::arg("semigroup"), py::arg("probabilities"), py::arg("degree") = py::none());

  m.def(
      "step_distribution",
      [](const NumericalSemigroup& s, const std::vector<Rational>& probabilities, std::int64_t t,
         const std::optional<std::int64_t>& degree) {
        return gaprec::step_distribution(s, WeightVector(probabilities), t,
                                         degree_or_default(degree, s))
            .coefficients;
      },
      py::arg("semigroup"), py::arg("probabilities"), py::arg("t"),
      py::arg("degree") = py::none());

  m.def(
      "simulate",
      [](const NumericalSemigroup& s, const std::vector<Rational>& probabilities,
         std::int64_t num_walks, std::int64_t max_state, std::uint64_t seed, unsigned workers) {
        gaprec::WalkConfig config{s, WeightVector(probabilities), num_walks, max_state, seed};
        gaprec::VisitEstimate est = gaprec::simulate(config, workers);
        py::dict out;
        out["hit_counts"] = est.hit_counts;
        std::vector<double> estimates, errors;
        for (std::size_t k = 0; k < est.hit_counts.size(); ++k) {
          estimates.push_back(est.estimate(k));
          errors.push_back(est.standard_error(k));
        }
        out["estimates"] = estimates;
        out["standard_errors"] = errors;
        out["num_walks"] = est.num_walks;
        out["seed"] = est.seed;
        out["rng"] = gaprec::kRngFamily;
        return out;
      },
      py::arg("semigroup"), py::arg("probabilities"), py::arg("num_walks"), py::arg("max_state"),
      py::arg("seed") = std::uint64_t{0}, py::arg("workers") = 0u,
      "Seeded Monte Carlo tally of walk visits per state; identical for any worker count.");

  m.def(
      "find_witness",
      [](std::int64_t order, std::vector<std::int64_t> target_set) -> py::object {
        gaprec::WitnessSearchResult res =
            gaprec::find_witness(gaprec::make_query(order, std::move(target_set)));
        if (!res.found()) return py::none();
        return json_to_py(gaprec::certificate_to_json(*res.certificate));
      },
      py::arg("order"), py::arg("target_set"),
      "Witness certificate as a dict, or None when the search fails.");

  m.def(
      "certify",
      [](const py::object& certificate) {
        std::string text;
        if (py::isinstance<py::str>(certificate)) {
          text = certificate.cast<std::string>();
        } else {
          text = py::module_::import("json").attr("dumps")(certificate).cast<std::string>();
        }
        gaprec::CertifyResult outcome =
            gaprec::certify(gaprec::certificate_from_json(nlohmann::json::parse(text)));
        return py::make_tuple(outcome.ok, outcome.failures);
      },
      py::arg("certificate"),
      "Re-verify a certificate (dict or JSON string); returns (ok, failures).");

  m.attr("RNG_FAMILY") = gaprec::kRngFamily;
  m.attr("__version__") = GAPREC_VERSION;
}
