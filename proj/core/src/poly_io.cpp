#include "hcross/poly_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hcross/errors.hpp"

namespace hcross {

void write_polynomial(std::ostream& out, const TrigPolynomial& f, const std::vector<std::string>& comments) {
  for (const auto& c : comments) fmt::print(out, "# {}\n", c);
  fmt::print(out, "d={}\n", f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int kj : f.frequency(i)) fmt::print(out, "{} ", kj);
    fmt::print(out, "{:.17g} {:.17g}\n", f.coefficient(i).real(), f.coefficient(i).imag());
  }
}

TrigPolynomial read_polynomial(std::istream& in) {
  std::string line;
  int line_no = 0;
  int dim = 0;
  std::vector<std::pair<Frequency, Complex>> terms;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (dim == 0) {
      std::istringstream header(line.substr(first));
      std::string key;
      if (!std::getline(header, key, '=') || key != "d" || !(header >> dim) || dim < 1) {
        throw ConfigError(fmt::format("polynomial file line {}: expected header 'd=<int>'", line_no));
      }
      continue;
    }
    std::istringstream row(line);
    Frequency k(static_cast<std::size_t>(dim));
    double re = 0.0;
    double im = 0.0;
    for (int& kj : k) {
      if (!(row >> kj)) throw ConfigError(fmt::format("polynomial file line {}: expected {} integers", line_no, dim));
    }
    if (!(row >> re >> im)) {
      throw ConfigError(fmt::format("polynomial file line {}: expected real and imaginary parts", line_no));
    }
    std::string extra;
    if (row >> extra) throw ConfigError(fmt::format("polynomial file line {}: trailing field '{}'", line_no, extra));
    terms.emplace_back(std::move(k), Complex(re, im));
  }
  if (dim == 0) throw ConfigError("polynomial file: missing 'd=<int>' header");
  return TrigPolynomial::from_terms(dim, std::move(terms));
}

TrigPolynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open polynomial file '{}'", path));
  return read_polynomial(in);
}

void write_polynomial_file(const std::string& path, const TrigPolynomial& f, const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw ConfigError(fmt::format("cannot write polynomial file '{}'", path));
  write_polynomial(out, f, comments);
}

}  // namespace hcross
