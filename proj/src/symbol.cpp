#include "tzeig/symbol.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

namespace tzeig {

namespace {

// key=value pairs after the family prefix, comma separated
std::map<std::string, std::string> parse_params(const std::string& body) {
  std::map<std::string, std::string> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw std::invalid_argument("symbol spec: expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

double to_real(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("symbol spec: bad number '" + s + "'");
  return v;
}

std::string real_to_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

SymbolSpec parse_symbol(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("symbol spec: expected '<family>:<params>', got '" + text + "'");
  const std::string family = text.substr(0, colon);
  const auto params = parse_params(text.substr(colon + 1));

  SymbolSpec spec;
  if (family == "kms") {
    spec.family = SymbolFamily::Kms;
    const auto it = params.find("rho");
    if (params.size() != 1 || it == params.end())
      throw std::invalid_argument("symbol spec: kms takes exactly rho=<r>");
    spec.rho = to_real(it->second);
    if (!(spec.rho > 0.0 && spec.rho < 1.0))
      throw std::invalid_argument("symbol spec: kms rho must lie in (0, 1)");
  } else if (family == "rctp") {
    spec.family = SymbolFamily::Rctp;
    const auto it = params.find("l");
    if (params.size() != 1 || it == params.end())
      throw std::invalid_argument("symbol spec: rctp takes exactly l=<int>");
    spec.ell = static_cast<int>(std::strtol(it->second.c_str(), nullptr, 10));
    if (spec.ell < 1 || spec.ell > 31)
      throw std::invalid_argument("symbol spec: rctp l must lie in [1, 31]");
  } else if (family == "fdep") {
    spec.family = SymbolFamily::OrderDependent;
    const auto a0 = params.find("a0");
    const auto a1 = params.find("a1");
    if (params.size() != 2 || a0 == params.end() || a1 == params.end())
      throw std::invalid_argument("symbol spec: fdep takes exactly a0=<r>,a1=<r>");
    spec.a0 = to_real(a0->second);
    spec.a1 = to_real(a1->second);
  } else {
    throw std::invalid_argument("symbol spec: unknown family '" + family + "'");
  }
  return spec;
}

std::string format_symbol(const SymbolSpec& spec) {
  switch (spec.family) {
    case SymbolFamily::Kms:
      return "kms:rho=" + real_to_string(spec.rho);
    case SymbolFamily::Rctp:
      return "rctp:l=" + std::to_string(spec.ell);
    case SymbolFamily::OrderDependent:
    default:
      return "fdep:a0=" + real_to_string(spec.a0) + ",a1=" + real_to_string(spec.a1);
  }
}

}  // namespace tzeig
