#pragma once

namespace radix {

// Euler's constant gamma_0 and the first Stieltjes constant gamma_1, to 30+
// significant digits (OEIS A001620, A082633). Only ~17 survive in a double.
struct Constants {
  static constexpr const char* euler_gamma_digits = "0.577215664901532860606512090082402431";
  static constexpr const char* stieltjes_gamma1_digits = "-0.0728158454836767248605863758749013191";

  static constexpr double euler_gamma = 0.577215664901532860606512090082402431;
  static constexpr double stieltjes_gamma1 = -0.0728158454836767248605863758749013191;
};

inline constexpr double kEulerGamma = Constants::euler_gamma;
inline constexpr double kStieltjesGamma1 = Constants::stieltjes_gamma1;

}  // namespace radix
