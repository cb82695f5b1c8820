#include "prozeta/common.hpp"

#include <sstream>

namespace prozeta {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::not_prime: return "NOT_PRIME";
    case Errc::undefined: return "UNDEFINED";
    case Errc::power_of_p: return "POWER_OF_P";
    case Errc::out_of_range: return "OUT_OF_RANGE";
    case Errc::division_by_zero: return "DIVISION_BY_ZERO";
    case Errc::factor_not_monic: return "FACTOR_NOT_MONIC";
    case Errc::invalid_rank: return "INVALID_RANK";
    case Errc::not_an_automorphism: return "NOT_AN_AUTOMORPHISM";
    case Errc::unsupported_form: return "UNSUPPORTED_FORM";
    case Errc::not_cyclotomic_product: return "NOT_CYCLOTOMIC_PRODUCT";
    case Errc::non_integral_index: return "NON_INTEGRAL_INDEX";
    case Errc::hypothesis_violation: return "HYPOTHESIS_VIOLATION";
    case Errc::cap_exceeded: return "CAP_EXCEEDED";
    case Errc::not_normal: return "NOT_NORMAL";
    case Errc::p_not_dividing: return "P_NOT_DIVIDING";
    case Errc::unknown_sporadic: return "UNKNOWN_SPORADIC";
    case Errc::partial_factor: return "PARTIAL_FACTOR";
    case Errc::precondition_violated: return "PRECONDITION_VIOLATED";
  }
  return "ERROR";
}

Caps& global_caps() {
  static Caps caps;
  return caps;
}

Caps caps_from_spec(const std::string& spec, Caps base) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::parse_error, "bad caps item '" + item + "'");
    std::string key = item.substr(0, eq);
    unsigned long long value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad caps value in '" + item + "'");
    }
    if (key == "element") base.element_cap = static_cast<std::size_t>(value);
    else if (key == "lattice") base.lattice_cap = static_cast<std::size_t>(value);
    else if (key == "tuple") base.tuple_cap = value;
    else if (key == "interval") base.interval_cap = static_cast<std::size_t>(value);
    else throw Error(Errc::parse_error, "unknown cap '" + key + "'");
  }
  return base;
}

}  // namespace prozeta
