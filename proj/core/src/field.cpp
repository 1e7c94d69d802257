#include "statdg/field.hpp"

namespace statdg {

DGField::DGField(const Grid& grid, int degree, int nvars)
    : grid_(grid),
      degree_(degree),
      nvars_(nvars),
      block_(nvars * (degree + 1) * (degree + 1)),
      data_(static_cast<size_t>(grid.cells()) * block_, 0.0) {}

void DGField::eval(const BasisSet& basis, int i, int j, double xi, double eta,
                   double* out) const {
  int n = degree_ + 1;
  const double* c = cell(i, j);
  std::vector<double> bx(n), by(n);
  for (int a = 0; a < n; ++a) bx[a] = basis.value(a, xi);
  for (int b = 0; b < n; ++b) by[b] = basis.value(b, eta);
  for (int var = 0; var < nvars_; ++var) {
    double acc = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) acc += c[(var * n + a) * n + b] * bx[a] * by[b];
    }
    out[var] = acc;
  }
}

DGField project_to_dg(const Grid& grid, int degree, int nvars,
                      const std::function<void(double, double, double*)>& f) {
  DGField q(grid, degree, nvars);
  BasisSet basis(degree);
  const QuadratureRule& rule = gauss5();
  int n = degree + 1, ng = rule.size();
  std::vector<std::vector<double>> B = basis.values_at(rule);
  std::vector<double> vals(nvars);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      double* c = q.cell(i, j);
      for (int g = 0; g < ng; ++g) {
        double x = grid.xc(i) + grid.dx() * rule.nodes[g];
        for (int h = 0; h < ng; ++h) {
          double y = grid.yc(j) + grid.dy() * rule.nodes[h];
          f(x, y, vals.data());
          double w = rule.weights[g] * rule.weights[h];
          for (int var = 0; var < nvars; ++var) {
            double wv = w * vals[var];
            for (int a = 0; a < n; ++a) {
              for (int b = 0; b < n; ++b) {
                c[(var * n + a) * n + b] += wv * B[a][g] * B[b][h];
              }
            }
          }
        }
      }
    }
  }
  return q;
}

}  // namespace statdg
