#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace prozeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Errc {
  parse_error,
  not_prime,
  undefined,
  power_of_p,
  out_of_range,
  division_by_zero,
  factor_not_monic,
  invalid_rank,
  not_an_automorphism,
  unsupported_form,
  not_cyclotomic_product,
  non_integral_index,
  hypothesis_violation,
  cap_exceeded,
  not_normal,
  p_not_dividing,
  unknown_sporadic,
  partial_factor,
  precondition_violated,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
  Errc code;
};

// Enumeration limits. All configurable; the CLI honors PROZETA_CAPS.
struct Caps {
  std::size_t element_cap = 100000;             // max |G| for element enumeration
  std::size_t lattice_cap = 10000;              // max |G| for full subgroup lattices
  unsigned long long tuple_cap = 100000000ULL;  // max |G|^t for generation counts
  std::size_t interval_cap = 1000;              // max |X:H| for overgroup intervals
};

Caps& global_caps();

// Parses "lattice=20000,element=200000,tuple=1e8,interval=500" style overrides.
Caps caps_from_spec(const std::string& spec, Caps base);

}  // namespace prozeta
