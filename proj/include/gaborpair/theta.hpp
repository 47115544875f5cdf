#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "gaborpair/report.hpp"
#include "gaborpair/signal.hpp"

namespace gaborpair {

/// Gram sequence of the integer Gaussian system:
/// (-1)^{nm} e^{-pi (n^2 + m^2) / 2}.
double vartheta(int n, int m);

/// Materialized Gram sequence on the box |n|,|m| <= radius. Symmetric under
/// index swap and global sign flip; entry (0,0) is one.
struct GramSeq {
    int radius = 1;
    std::vector<double> values; // (2R+1)^2 row-major, n outer

    static GramSeq make(int radius);
    double at(int n, int m) const {
        return values[static_cast<size_t>(n + radius) * (2 * radius + 1) +
                      static_cast<size_t>(m + radius)];
    }
};

/// Theta symbol: truncated double sum
///   sum_{|n|,|m|<=R} vartheta[n,m] e^{-2 pi i (n w1 + m w2)}.
/// The imaginary part cancels by symmetry and is asserted below 1e-13.
double theta_eval(double w1, double w2, int R = 8);

/// Jacobi theta partial sums, conventions fixed as
///   theta2(z,q) = 2 sum q^{(n+1/2)^2} cos((2n+1)z)
///   theta3(z,q) = 1 + 2 sum q^{n^2} cos(2nz)
///   theta4(z,q) = 1 + 2 sum (-1)^n q^{n^2} cos(2nz).
double jacobi_theta2(double z, double q, int terms = 16);
double jacobi_theta3(double z, double q, int terms = 16);
double jacobi_theta4(double z, double q, int terms = 16);

/// Product-form oracle for the theta symbol:
/// theta3(pi w1, e^{-pi/2}) theta3(2 pi w2, e^{-2pi})
///   + theta4(pi w1, e^{-pi/2}) theta2(2 pi w2, e^{-2pi}).
double theta_eval_product(double w1, double w2);

/// Row-major n x n grid of theta_eval over [0,1)^2, evaluated separably.
std::vector<double> theta_grid(int n, int R = 8);

/// Central finite differences at (1/2,1/2): the two pure second partials
/// must be positive and equal, first partials and the mixed one vanish.
Report theta_hessian_check(int R = 8, double h = 1e-3);

/// Kernel sequences (-1)^{n+m} sum_{|alpha|<=N} c_alpha n^{alpha1} m^{alpha2}.
struct KernelPoly {
    int degree = 0;
    std::map<std::pair<int, int>, double> coeffs; // alpha -> c_alpha
};
double kernel_poly_eval(const KernelPoly& p, int n, int m);

/// (p * vartheta)[n, m] truncated to |k|,|l| <= R; vanishes for kernel
/// elements, equals the theta symbol at suitable points otherwise.
cdouble kernel_convolution(const std::function<double(int, int)>& p, int n, int m, int R);
cdouble kernel_convolution(const KernelPoly& p, int n, int m, int R);

} // namespace gaborpair
