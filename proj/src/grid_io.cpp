#include "diraccert/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "diraccert/version.hpp"

namespace diraccert {

namespace {

// 17 significant digits: enough for exact double round-trips.
std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_num(const std::string& tok) {
  size_t pos = 0;
  const double v = std::stod(tok, &pos);
  if (pos != tok.size()) throw std::runtime_error("grid file: bad number '" + tok + "'");
  return v;
}

}  // namespace

void write_grid(std::ostream& os, const RegionGrid& grid,
                const std::string& command_echo) {
  os << "# diraccert grid\n";
  os << "# version: " << kVersion << "\n";
  os << "# command: " << (command_echo.empty() ? "raster" : command_echo) << "\n";
  os << "# m: " << num(grid.m) << "\n";
  os << "# norm3: " << num(grid.norm3) << "\n";
  os << "# norm32: " << (grid.norm32 ? num(*grid.norm32) : "none") << "\n";
  os << "# grid: " << num(grid.spec.re_min) << " " << num(grid.spec.re_max) << " "
     << grid.spec.n_re << " " << num(grid.spec.im_min) << " " << num(grid.spec.im_max)
     << " " << grid.spec.n_im << "\n";
  os << "# columns: re im f thm1_lhs thm2_lhs certified\n";
  for (const EnclosureReport& c : grid.cells) {
    os << num(c.lambda.real()) << ' ' << num(c.lambda.imag()) << ' ' << num(c.f_value)
       << ' ' << num(c.thm1_lhs) << ' '
       << (c.thm2_lhs ? num(*c.thm2_lhs) : std::string("nan")) << ' '
       << (c.certified ? '1' : '0') << '\n';
  }
}

RegionGrid parse_grid(std::istream& is) {
  RegionGrid grid;
  bool have_grid_spec = false;
  bool norm32_present = false;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key;
      hs >> key;
      if (key == "m:") {
        std::string v;
        hs >> v;
        grid.m = parse_num(v);
      } else if (key == "norm3:") {
        std::string v;
        hs >> v;
        grid.norm3 = parse_num(v);
      } else if (key == "norm32:") {
        std::string v;
        hs >> v;
        if (v != "none") {
          grid.norm32 = parse_num(v);
          norm32_present = true;
        }
      } else if (key == "grid:") {
        std::string a, b, d, e;
        int n_re = 0, n_im = 0;
        hs >> a >> b >> n_re >> d >> e >> n_im;
        if (!hs) throw std::runtime_error("grid file: malformed grid header");
        grid.spec = {parse_num(a), parse_num(b), n_re, parse_num(d), parse_num(e), n_im};
        have_grid_spec = true;
      }
      continue;
    }
    std::istringstream rs(line);
    std::string re, im, f, l1, l2;
    int cert = 0;
    rs >> re >> im >> f >> l1 >> l2 >> cert;
    if (!rs) throw std::runtime_error("grid file: malformed data row: " + line);
    EnclosureReport rep;
    rep.lambda = Complex{parse_num(re), parse_num(im)};
    rep.m = grid.m;
    rep.f_value = parse_num(f);
    rep.thm1_lhs = parse_num(l1);
    rep.thm1_certified = rep.thm1_lhs < 1.0;
    const double t2 = parse_num(l2);
    if (!std::isnan(t2)) {
      rep.thm2_lhs = t2;
      rep.thm2_certified = t2 < 1.0;
    }
    rep.certified = cert != 0;
    grid.cells.push_back(rep);
  }
  if (!have_grid_spec) throw std::runtime_error("grid file: missing grid header");
  if (grid.cells.size() !=
      static_cast<size_t>(grid.spec.n_re) * static_cast<size_t>(grid.spec.n_im))
    throw std::runtime_error("grid file: row count does not match grid spec");
  (void)norm32_present;  // per-row nan is authoritative for thm2 presence
  return grid;
}

}  // namespace diraccert
