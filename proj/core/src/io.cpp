#include "statdg/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "statdg/errors.hpp"

namespace statdg {
namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";  // strip the sign so CSV readers parse it
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_snapshot_csv(const std::string& path, const Solver& solver,
                        const DGField& q, const std::vector<std::string>& var_names) {
  auto out = open_out(path);
  out << "i,j,x,y";
  for (const auto& name : var_names) out << ',' << name;
  out << '\n';
  const Grid& grid = solver.grid();
  std::vector<double> vals(static_cast<std::size_t>(q.nvars()));
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      q.eval(solver.basis(), i, j, 0.0, 0.0, vals.data());
      out << i << ',' << j << ',' << format_double(grid.xc(i)) << ','
          << format_double(grid.yc(j));
      for (double v : vals) out << ',' << format_double(v);
      out << '\n';
    }
  }
  finish(out, path);
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows, int nvars) {
  auto out = open_out(path);
  out << "t,l2_err_u,l2_err_v,l2_err_p,norm_u,norm_v,norm_p";
  for (int v = 1; v <= nvars; ++v) out << ",sum_mean_" << v;
  out << '\n';
  for (const auto& row : rows) {
    out << format_double(row.t);
    for (double e : row.l2_err) out << ',' << format_double(e);
    for (double n : row.norm) out << ',' << format_double(n);
    for (double s : row.sum_mean) out << ',' << format_double(s);
    out << '\n';
  }
  finish(out, path);
}

void write_order_csv(const std::string& path, const std::vector<OrderRow>& rows) {
  auto out = open_out(path);
  out << "t,order_u,order_v,order_p,order_all\n";
  for (const auto& row : rows) {
    out << format_double(row.t);
    for (double o : row.order) out << ',' << format_double(o);
    out << '\n';
  }
  finish(out, path);
}

void write_kernel_report_json(const std::string& path, const KernelSweep& sweep,
                              const StationarityOrder* order_fit) {
  nlohmann::ordered_json doc;
  doc["flux"] = to_string(sweep.flux);
  doc["K"] = sweep.degree;
  doc["samples"] = nlohmann::ordered_json::array();
  for (const auto& s : sweep.samples) {
    nlohmann::ordered_json item;
    item["kx"] = s.kx;
    item["ky"] = s.ky;
    item["dim"] = s.dim;
    item["ambiguous"] = s.ambiguous;
    item["sigmas"] = s.sigmas;
    doc["samples"].push_back(std::move(item));
  }
  doc["min_dim"] = sweep.min_dim;
  doc["max_dim"] = sweep.max_dim;
  doc["verdict"] = sweep.verdict;
  if (order_fit != nullptr) {
    nlohmann::ordered_json fit;
    fit["spacings"] = order_fit->spacings;
    fit["distances"] = order_fit->distances;
    fit["exact"] = order_fit->exact;
    if (!order_fit->exact) {
      fit["slope"] = order_fit->fit.slope;
      fit["residual"] = order_fit->fit.residual;
    }
    doc["order_fit"] = std::move(fit);
  }
  auto out = open_out(path);
  out << doc.dump(1) << '\n';
  finish(out, path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty CSV file: " + path);
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.header.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw IoError("non-numeric CSV cell '" + cell + "' in " + path);
      }
    }
    if (row.size() != table.header.size()) {
      throw IoError("ragged CSV row in " + path);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace statdg
