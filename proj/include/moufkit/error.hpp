#pragma once

#include <stdexcept>
#include <string>

namespace moufkit {

enum class errc {
  not_latin_square,
  no_two_sided_identity,
  order_too_large,
  not_power_associative,
  not_a_subloop,
  not_normal,
  not_partition,
  order_cap_exceeded,
  cap_exceeded,
  not_pseudoautomorphism,
  not_autotopism,
  not_moufang,
  not_diassociative,
  invalid_extension_data,
  not_a_loop,
  kernel_not_commutative_group,
  not_3_divisible,
  kernel_not_2_divisible,
  restriction_not_automorphism,
  no_cube_root,
  not_bilinear,
  spec_invalid,
  unknown_fixture,
  parse_error,
};

constexpr const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::not_latin_square: return "NotLatinSquare";
    case errc::no_two_sided_identity: return "NoTwoSidedIdentity";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::not_power_associative: return "NotPowerAssociative";
    case errc::not_a_subloop: return "NotASubloop";
    case errc::not_normal: return "NotNormal";
    case errc::not_partition: return "NotPartition";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_pseudoautomorphism: return "NotPseudoautomorphism";
    case errc::not_autotopism: return "NotAutotopism";
    case errc::not_moufang: return "NotMoufang";
    case errc::not_diassociative: return "NotDiassociative";
    case errc::invalid_extension_data: return "InvalidExtensionData";
    case errc::not_a_loop: return "NotALoop";
    case errc::kernel_not_commutative_group: return "KernelNotCommutativeGroup";
    case errc::not_3_divisible: return "Not3Divisible";
    case errc::kernel_not_2_divisible: return "KernelNot2Divisible";
    case errc::restriction_not_automorphism: return "RestrictionNotAutomorphism";
    case errc::no_cube_root: return "NoCubeRoot";
    case errc::not_bilinear: return "NotBilinear";
    case errc::spec_invalid: return "SpecInvalid";
    case errc::unknown_fixture: return "UnknownFixture";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this exception;
/// `code()` identifies the violated precondition or axiom.
class loop_error : public std::runtime_error {
 public:
  loop_error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace moufkit
