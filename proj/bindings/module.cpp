#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaborpair/gabor.hpp"
#include "gaborpair/numeric.hpp"
#include "gaborpair/partner.hpp"
#include "gaborpair/theta.hpp"
#include "gaborpair/verify.hpp"
#include "gaborpair/windows.hpp"
#include "gaborpair/zak.hpp"

namespace py = pybind11;
namespace gp = gaborpair;

namespace {

gp::WindowSpec window_from_name(const std::string& name, double sigma, double a,
                                double c_psi) {
    if (name == "gaussian") return gp::WindowSpec::gaussian(sigma);
    if (name == "box") return gp::WindowSpec::box();
    if (name == "bastiaans")
        return gp::WindowSpec::bastiaans(c_psi > 0 ? c_psi
                                                   : gp::calibrate_bastiaans_constant());
    if (name == "example4_g") return gp::WindowSpec::example4_g(a);
    if (name == "example4_gamma") return gp::WindowSpec::example4_gamma(a);
    throw std::invalid_argument("unknown window: " + name);
}

py::array_t<std::complex<double>> zak_matrix(const std::string& window, double a,
                                             int n_x, int n_omega, int K, double sigma,
                                             double c_psi, double x_offset,
                                             double omega_offset) {
    const gp::WindowSpec w = window_from_name(window, sigma, a, c_psi);
    const gp::ZakField Z = gp::zak_forward(w, a, n_x, n_omega, K, x_offset, omega_offset);
    py::array_t<std::complex<double>> out({n_x, n_omega});
    auto buf = out.mutable_unchecked<2>();
    for (int i = 0; i < n_x; ++i)
        for (int j = 0; j < n_omega; ++j) buf(i, j) = Z.at(i, j);
    return out;
}

} // namespace

PYBIND11_MODULE(_gaborpair, m) {
    m.doc() = "Zak-transform analysis of Gabor systems at critical density";

    m.def("gaussian_eval", &gp::gaussian_eval, py::arg("sigma"), py::arg("t"));
    m.def("bastiaans_eval", &gp::bastiaans_eval, py::arg("c_psi"), py::arg("t"),
          py::arg("n_terms") = 40);
    m.def("calibrate_bastiaans_constant", &gp::calibrate_bastiaans_constant);
    m.def("example4_g_eval", &gp::example4_g_eval, py::arg("a"), py::arg("t"));
    m.def("example4_gamma_eval", &gp::example4_gamma_eval, py::arg("a"), py::arg("t"));
    m.def("example4_g_norm2", &gp::example4_g_norm2, py::arg("a"));
    m.def("example4_gamma_norm2", &gp::example4_gamma_norm2, py::arg("a"));

    m.def("vartheta", &gp::vartheta, py::arg("n"), py::arg("m"));
    m.def("theta_eval", &gp::theta_eval, py::arg("w1"), py::arg("w2"), py::arg("R") = 8);
    m.def("theta_eval_product", &gp::theta_eval_product, py::arg("w1"), py::arg("w2"));

    m.def("zak_point",
          [](const std::string& window, double a, double x, double omega, int K,
             double sigma, double c_psi) {
              return gp::zak_point(window_from_name(window, sigma, a, c_psi), a, x,
                                   omega, K);
          },
          py::arg("window"), py::arg("a"), py::arg("x"), py::arg("omega"),
          py::arg("K") = -1, py::arg("sigma") = 1.0, py::arg("c_psi") = -1.0);
    m.def("zak_field", &zak_matrix, py::arg("window"), py::arg("a") = 1.0,
          py::arg("n_x") = 512, py::arg("n_omega") = 512, py::arg("K") = -1,
          py::arg("sigma") = 1.0, py::arg("c_psi") = -1.0, py::arg("x_offset") = 0.0,
          py::arg("omega_offset") = 0.0);

    m.def("g_series", &gp::g_series, py::arg("k"), py::arg("terms") = 8);
    m.def("h_factor", &gp::h_factor, py::arg("k"));
    m.def("mu_fourier", &gp::mu_fourier, py::arg("k"), py::arg("l"));
    m.def("xi0_eval",
          [](int k, int l, double c_psi) {
              gp::PartnerConfig cfg;
              cfg.c_psi = c_psi > 0 ? c_psi : gp::calibrate_bastiaans_constant();
              return gp::xi0_eval(k, l, cfg);
          },
          py::arg("k"), py::arg("l"), py::arg("c_psi") = -1.0);
    m.def("c_coeff",
          [](int k, int l, double c_psi) {
              gp::PartnerConfig cfg;
              cfg.c_psi = c_psi > 0 ? c_psi : gp::calibrate_bastiaans_constant();
              return gp::c_coeff(k, l, cfg);
          },
          py::arg("k"), py::arg("l"), py::arg("c_psi") = -1.0);
    m.def("column_sums",
          [](int n, int m, std::vector<int> radii, bool corrected, double c_psi) {
              gp::PartnerConfig cfg;
              cfg.c_psi = c_psi > 0 ? c_psi : gp::calibrate_bastiaans_constant();
              int r_max = 0;
              for (int r : radii) r_max = std::max(r_max, r);
              gp::XiTable table(r_max + std::abs(n) + 1, r_max + std::abs(m) + 1, cfg);
              const gp::ColumnSumProfile p =
                  gp::column_sum_profile(n, m, radii, corrected, table);
              return py::make_tuple(p.sums, p.log_slope, p.fit_residual);
          },
          py::arg("n"), py::arg("m"), py::arg("radii"), py::arg("corrected") = true,
          py::arg("c_psi") = -1.0);

    m.def("verify",
          [](const std::string& group) {
              const auto criteria = gp::verify_group(group);
              py::list out;
              for (const auto& c : criteria) {
                  py::dict d;
                  d["id"] = c.id;
                  d["name"] = c.name;
                  d["pass"] = c.pass;
                  d["seconds"] = c.seconds;
                  out.append(d);
              }
              return out;
          },
          py::arg("group") = "all");
}
