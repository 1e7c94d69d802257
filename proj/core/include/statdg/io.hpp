#pragma once

#include <string>
#include <vector>

#include "statdg/diagnostics.hpp"
#include "statdg/kernel.hpp"
#include "statdg/projectors.hpp"
#include "statdg/solver.hpp"

namespace statdg {

// All files use '.' decimals, '\n' line endings, and shortest round-trip
// float formatting, so identical inputs produce byte-identical outputs.

// Cell-center reconstructed values: header `i,j,x,y,<var names>`.
void write_snapshot_csv(const std::string& path, const Solver& solver,
                        const DGField& q, const std::vector<std::string>& var_names);

// Header `t,l2_err_u,l2_err_v,l2_err_p,norm_u,norm_v,norm_p,sum_mean_1..m`.
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows, int nvars);

// Header `t,order_u,order_v,order_p,order_all`.
void write_order_csv(const std::string& path, const std::vector<OrderRow>& rows);

// {flux, K, samples: [{kx, ky, dim, sigmas}], min_dim, verdict,
//  order_fit: {slope, residual}} (order_fit only when an order was fitted).
void write_kernel_report_json(const std::string& path, const KernelSweep& sweep,
                              const StationarityOrder* order_fit);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path);

std::string format_double(double v);

}  // namespace statdg
