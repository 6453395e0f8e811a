#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eprdep/bellagg.hpp"
#include "eprdep/infodep.hpp"
#include "eprdep/mcharness.hpp"
#include "eprdep/qcore.hpp"
#include "eprdep/report_io.hpp"

namespace py = pybind11;
using namespace eprdep;

namespace {

AngleConfig config_of(double mu1, double mu2, double nu1, double nu2) {
  return AngleConfig::from_radians(mu1, mu2, nu1, nu2);
}

py::tuple distribution_tuple(const JointDistribution& d) {
  return py::make_tuple(d.xi11(), d.xi12(), d.xi21(), d.xi22());
}

JointDistribution distribution_of(const std::array<double, 4>& p) {
  return JointDistribution{p[0], p[1], p[2], p[3]};
}

py::object optional_float(const std::optional<double>& x) {
  return x ? py::object(py::float_(*x)) : py::object(py::none());
}

py::object interval_tuple(const std::optional<Interval>& iv) {
  return iv ? py::object(py::make_tuple(iv->lower, iv->upper)) : py::object(py::none());
}

py::dict report_dict(const BellReport& r) {
  py::dict d;
  d["config"] = py::make_tuple(r.config.mu1.radians(), r.config.mu2.radians(),
                               r.config.nu1.radians(), r.config.nu2.radians());
  py::list thetas, degrees;
  for (int i = 0; i < 2; ++i) {
    thetas.append(py::make_tuple(r.thetas[i][0].value(), r.thetas[i][1].value()));
    degrees.append(py::make_tuple(r.degrees[i][0], r.degrees[i][1]));
  }
  d["thetas"] = thetas;
  d["degrees"] = degrees;
  d["bell_value"] = r.bell_value;
  d["total_flow"] = r.total_flow;
  d["total_signed_flow"] = r.total_signed_flow;
  d["degree_sum"] = r.degree_sum;
  d["abs_degree_sum"] = r.abs_degree_sum;
  d["violates_bell"] = r.violates_bell;
  return d;
}

py::dict mc_dict(const MonteCarloReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["seed"] = r.seed;
  d["alpha_hat"] = r.alpha_hat;
  d["beta_hat"] = r.beta_hat;
  d["beta_s_hat"] = r.beta_s_hat;
  d["tau_hat"] = r.tau_hat;
  d["tau_s_hat"] = r.tau_s_hat;
  d["cond_Vc_given_U"] = optional_float(r.cond_Vc_given_U);
  d["cond_V_given_Uc"] = optional_float(r.cond_V_given_Uc);
  d["cond_VSc_given_U"] = optional_float(r.cond_VSc_given_U);
  d["cond_VS_given_Uc"] = optional_float(r.cond_VS_given_Uc);
  d["undefined_conditionals"] = r.undefined_conditionals();
  d["flow_range_in_U"] = interval_tuple(r.flow_range_in_U);
  d["signed_flow_range_in_U"] = interval_tuple(r.signed_flow_range_in_U);
  d["frechet_V"] = py::make_tuple(r.frechet_V.lower, r.frechet_V.upper);
  d["frechet_VS"] = py::make_tuple(r.frechet_VS.lower, r.frechet_VS.upper);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Joint polarizer probabilities, degree of dependence and information flow";
  m.attr("__version__") = std::string(tool_version());

  m.def("polarizer_operator", [](double mu) { return polarizer_operator(Angle{mu}).entries; },
        py::arg("mu"), "2x2 matrix [[cos mu, sin mu], [sin mu, -cos mu]] as nested lists");
  m.def("eigensystem", [](double mu) {
        const auto e = eigensystem(Angle{mu});
        return py::make_tuple(e.eigenvalues, e.eigenvectors);
      }, py::arg("mu"));
  m.def("singlet_state", [] { return singlet_state().coordinates(); });
  m.def("joint_distribution",
        [](const std::array<Complex, 4>& psi, double mu, double nu) {
          return distribution_tuple(joint_distribution(State4{psi}, Angle{mu}, Angle{nu}));
        },
        py::arg("psi"), py::arg("mu"), py::arg("nu"));
  m.def("singlet_joint_closed_form",
        [](double mu, double nu) { return distribution_tuple(singlet_joint_closed_form(Angle{mu}, Angle{nu})); },
        py::arg("mu"), py::arg("nu"));
  m.def("marginals", [](const std::array<double, 4>& p) {
        const auto mg = marginals(distribution_of(p));
        return py::make_tuple(mg.a, mg.b);
      }, py::arg("distribution"));
  m.def("product_expectation",
        [](const std::array<double, 4>& p) { return product_expectation(distribution_of(p)); },
        py::arg("distribution"));
  m.def("sample_joint_outcomes",
        [](const std::array<double, 4>& p, std::uint64_t n, std::uint64_t seed) {
          return sample_joint_outcomes(distribution_of(p), n, seed);
        },
        py::arg("distribution"), py::arg("n"), py::arg("seed"));

  m.def("theta_of_angles", [](double mu, double nu) { return theta_of_angles(Angle{mu}, Angle{nu}).value(); },
        py::arg("mu"), py::arg("nu"));
  m.def("entropy", [](double t) { return entropy(Theta{t}); }, py::arg("theta"));
  m.def("degree_of_dependence", [](double t) { return degree_of_dependence(Theta{t}); }, py::arg("theta"));
  m.def("inverse_degree", [](double e) { return inverse_degree(e).value(); }, py::arg("e_value"));
  m.def("info_flow", [](double t) { return info_flow(Theta{t}); }, py::arg("theta"));
  m.def("signed_info_flow", [](double t) { return signed_info_flow(Theta{t}); }, py::arg("theta"));
  m.def("distribution_from_signed_flow",
        [](double s) { return distribution_tuple(distribution_from_signed_flow(s)); },
        py::arg("signed_flow"));

  m.def("bell_functional",
        [](double a, double b, double c, double d) { return bell_functional(config_of(a, b, c, d)); },
        py::arg("mu1"), py::arg("mu2"), py::arg("nu1"), py::arg("nu2"));
  m.def("bell_report",
        [](double a, double b, double c, double d) { return report_dict(bell_report(config_of(a, b, c, d))); },
        py::arg("mu1"), py::arg("mu2"), py::arg("nu1"), py::arg("nu2"));
  m.def("tsirelson_config", [] {
        const auto c = tsirelson_config();
        return py::make_tuple(c.mu1.radians(), c.mu2.radians(), c.nu1.radians(), c.nu2.radians());
      });
  m.def("classify", [](double a, double b, double c, double d) {
        const auto e = classify(config_of(a, b, c, d));
        return py::make_tuple(e.in_U, e.in_V, e.in_VS);
      }, py::arg("mu1"), py::arg("mu2"), py::arg("nu1"), py::arg("nu2"));
  m.def("sample_config", [](std::uint64_t seed, std::uint64_t index) {
        const auto c = sample_config(seed, index);
        return py::make_tuple(c.mu1.radians(), c.mu2.radians(), c.nu1.radians(), c.nu2.radians());
      }, py::arg("seed"), py::arg("index"));
  m.def("frechet_interval", [](double a, double b) {
        const auto iv = frechet_interval(a, b);
        return py::make_tuple(iv.lower, iv.upper);
      }, py::arg("alpha"), py::arg("beta"));
  m.def("run_monte_carlo",
        [](std::uint64_t n, std::uint64_t seed, unsigned workers) {
          MonteCarloReport r;
          {
            py::gil_scoped_release release;
            r = run_monte_carlo(n, seed, workers);
          }
          return mc_dict(r);
        },
        py::arg("n"), py::arg("seed"), py::arg("workers") = 1);
  m.def("parse_angle", &parse_angle_expression, py::arg("text"),
        "Parse '3pi/8'-style angle expressions to radians");
}
