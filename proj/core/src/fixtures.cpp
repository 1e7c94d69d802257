#include "statdg/fixtures.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include <random>

#include <json.hpp>

#include "statdg/errors.hpp"
#include "statdg/evolution.hpp"
#include "statdg/kernel.hpp"

#ifndef STATDG_FIXTURE_FILE
#define STATDG_FIXTURE_FILE ""
#endif

namespace statdg {
namespace {

using cplx = std::complex<double>;
using VarMap = std::map<std::string, cplx>;

// Recursive-descent parser for the fixture expression grammar:
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := unary ('^' factor)?
//   unary   := '-' unary | primary
//   primary := number | ident | ident '(' expr ')' | '(' expr ')'
class ExprParser {
 public:
  ExprParser(const std::string& src, const VarMap& vars) : src_(src), vars_(vars) {}

  cplx parse() {
    cplx v = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing characters");
    return v;
  }

 private:
  const std::string& src_;
  const VarMap& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("bad expression '" + src_ + "' at offset " + std::to_string(pos_) +
                      ": " + what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  cplx expr() {
    cplx v = term();
    for (;;) {
      if (consume('+')) {
        v += term();
      } else if (consume('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  cplx term() {
    cplx v = factor();
    for (;;) {
      if (consume('*')) {
        v *= factor();
      } else if (consume('/')) {
        cplx d = factor();
        if (d == cplx(0.0, 0.0)) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  cplx factor() {
    cplx base = unary();
    if (consume('^')) {
      cplx e = factor();
      if (e.imag() != 0.0 || e.real() != std::floor(e.real())) fail("non-integer exponent");
      return std::pow(base, static_cast<int>(e.real()));
    }
    return base;
  }

  cplx unary() {
    if (consume('-')) return -unary();
    return primary();
  }

  cplx primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (consume('(')) {
      cplx v = expr();
      if (!consume(')')) fail("expected ')'");
      return v;
    }
    fail("unexpected character");
  }

  cplx number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
      ++pos_;
    }
    return cplx(std::stod(src_.substr(start, pos_ - start)), 0.0);
  }

  cplx identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                  src_[pos_] == '_')) {
      ++pos_;
    }
    std::string name = src_.substr(start, pos_ - start);
    if (name == "sqrt") {
      if (!consume('(')) fail("expected '(' after sqrt");
      cplx v = expr();
      if (!consume(')')) fail("expected ')'");
      return std::sqrt(v);
    }
    if (name == "i") return cplx(0.0, 1.0);
    auto it = vars_.find(name);
    if (it == vars_.end()) fail("unknown identifier '" + name + "'");
    return it->second;
  }
};

KernelFixture parse_fixture(const nlohmann::json& j) {
  KernelFixture f;
  f.flux = j.at("flux").get<std::string>();
  f.degree = j.at("degree").get<int>();
  f.nvars = j.value("nvars", 3);
  const int nloc = f.nvars * (f.degree + 1) * (f.degree + 1);
  for (const auto& vec : j.at("vectors")) {
    std::vector<std::string> entries = vec.get<std::vector<std::string>>();
    if (static_cast<int>(entries.size()) != nloc) {
      throw ConfigError("fixture " + f.flux + " degree " + std::to_string(f.degree) +
                        ": vector has " + std::to_string(entries.size()) +
                        " entries, expected " + std::to_string(nloc));
    }
    f.vectors.push_back(std::move(entries));
  }
  return f;
}

}  // namespace

std::complex<double> eval_expression(const std::string& expr, const VarMap& vars) {
  return ExprParser(expr, vars).parse();
}

std::string default_fixture_path() {
  if (const char* env = std::getenv("STATDG_FIXTURES")) return env;
  return STATDG_FIXTURE_FILE;
}

FixtureSet load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fixture file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse fixture file " + path + ": " + e.what());
  }
  FixtureSet set;
  for (const auto& item : j.at("kernels")) set.kernels.push_back(parse_fixture(item));
  if (j.contains("subspaces")) {
    for (const auto& item : j.at("subspaces")) set.subspaces.push_back(parse_fixture(item));
  }
  return set;
}

std::vector<FixtureCheck> verify_kernel_fixtures(const FixtureSet& set, unsigned seed,
                                                 int nsamples) {
  std::mt19937 rng(seed);
  // Angles bounded away from 0 and pi: several fixtures carry (t - 1) or
  // (t + 1) denominators.
  std::uniform_real_distribution<double> angle(0.15, 2.95);
  const std::vector<std::pair<double, double>> spacings{{1.0, 1.0}, {0.1, 0.07}};
  const LinearModel model = acoustics();
  std::vector<FixtureCheck> checks;
  for (const auto& fixture : set.kernels) {
    const FluxMatrices flux = acoustic_flux(flux_kind_from_string(fixture.flux));
    const BasisSet basis = legendre_basis(fixture.degree);
    FixtureCheck check{fixture.flux, fixture.degree,
                       static_cast<int>(fixture.vectors.size()), 0.0};
    std::vector<std::pair<cplx, cplx>> shifts;
    for (int s = 0; s < nsamples; ++s) {
      shifts.emplace_back(std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)));
    }
    for (const auto& [dx, dy] : spacings) {
      const ShiftBlocks blocks = evolution_blocks(model, flux, basis, dx, dy);
      for (const auto& [tx, ty] : shifts) {
        const Eigen::MatrixXcd E = evolution_matrix(blocks, tx, ty);
        for (const auto& exprs : fixture.vectors) {
          const Eigen::VectorXcd w = eval_fixture_vector(exprs, tx, ty, dx, dy);
          check.max_residual = std::max(check.max_residual, kernel_residual(E, w));
        }
      }
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

Eigen::VectorXcd eval_fixture_vector(const std::vector<std::string>& exprs,
                                     std::complex<double> tx, std::complex<double> ty,
                                     double dx, double dy, double kx, double ky) {
  VarMap vars{{"tx", tx},        {"ty", ty},        {"dx", cplx(dx, 0.0)},
              {"dy", cplx(dy, 0.0)}, {"kx", cplx(kx, 0.0)}, {"ky", cplx(ky, 0.0)}};
  Eigen::VectorXcd v(static_cast<Eigen::Index>(exprs.size()));
  for (std::size_t n = 0; n < exprs.size(); ++n) {
    v(static_cast<Eigen::Index>(n)) = eval_expression(exprs[n], vars);
  }
  return v;
}

}  // namespace statdg
