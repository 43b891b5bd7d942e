// Generated by tests/oracle/oracle.py; do not edit.
#pragma once

#include <array>

namespace golden {

// rational coordinates on 1, i, sqrt3, i*sqrt3
using FieldCoordinates = std::array<const char*, 4>;

inline constexpr bool sum_of_squares_matches_expansion = true;
inline constexpr FieldCoordinates s_hat_1234 = {"-3/4", "0", "0", "0"};
inline constexpr FieldCoordinates s_hat_1444 = {"0", "0", "1", "0"};
inline constexpr FieldCoordinates s_hat_1313 = {"-3/2", "0", "0", "0"};
inline constexpr int quartic_monomials = 35;
inline constexpr int substitution_mismatches = 0;
inline constexpr int dis_repeated_root = 0;
inline constexpr int dis_1_0_m1_0 = 4;
inline constexpr FieldCoordinates upsilon_pairing_diagonal = {"5", "0", "0", "0"};
inline constexpr bool upsilon_pairing_offdiag_zero = true;
inline constexpr bool upsilon_pairing_diag_equal = true;
inline constexpr bool upsilon_eigen_7_2 = true;
inline constexpr const char* spectrum_on_s2w = "-3/2:7, 7/2:3";
inline constexpr int sp2_dimension = 10;
inline constexpr int dagger_two_eigenspace_dim = 35;
inline constexpr int jacobi_triples_14 = 364;
inline constexpr const char* torsion_summands = "20, 16, 12, 8";
inline constexpr int torsion_carrier_dim = 56;

}  // namespace golden
