#pragma once

#include <functional>
#include <vector>

#include "statdg/basis.hpp"

namespace statdg {

// Uniform periodic Cartesian grid over [0, lx] x [0, ly].
struct Grid {
  int nx = 1;
  int ny = 1;
  double lx = 1.0;
  double ly = 1.0;

  double dx() const { return lx / nx; }
  double dy() const { return ly / ny; }
  double xc(int i) const { return (i + 0.5) * dx(); }
  double yc(int j) const { return (j + 0.5) * dy(); }
  int cells() const { return nx * ny; }
};

// Modal DG coefficients. Per cell, one contiguous block ordered
//   idx = var (K+1)^2 + a (K+1) + b
// with a the x basis index and b the y basis index; this matches the
// ordering of the Fourier evolution matrix.
class DGField {
 public:
  DGField() = default;
  DGField(const Grid& grid, int degree, int nvars);

  const Grid& grid() const { return grid_; }
  int degree() const { return degree_; }
  int nvars() const { return nvars_; }
  int block_size() const { return block_; }

  double* cell(int i, int j) { return data_.data() + (i * grid_.ny + j) * block_; }
  const double* cell(int i, int j) const {
    return data_.data() + (i * grid_.ny + j) * block_;
  }
  double& coeff(int i, int j, int var, int a, int b) {
    return cell(i, j)[(var * (degree_ + 1) + a) * (degree_ + 1) + b];
  }
  double coeff(int i, int j, int var, int a, int b) const {
    return cell(i, j)[(var * (degree_ + 1) + a) * (degree_ + 1) + b];
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  // Pointwise reconstruction at reference coordinates (xi, eta) in the cell.
  void eval(const BasisSet& basis, int i, int j, double xi, double eta,
            double* out) const;

  // Cell mean of one variable (coefficient of the constant mode).
  double mean(int i, int j, int var) const { return coeff(i, j, var, 0, 0); }

 private:
  Grid grid_;
  int degree_ = 0;
  int nvars_ = 0;
  int block_ = 0;
  std::vector<double> data_;
};

// L2 projection onto the DG space, cellwise with the 5-point tensor rule.
// f(x, y, out) fills the nvars values at a physical point.
DGField project_to_dg(const Grid& grid, int degree, int nvars,
                      const std::function<void(double, double, double*)>& f);

}  // namespace statdg
