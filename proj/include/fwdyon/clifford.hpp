#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>

namespace fwdyon {

/// One of the 16 Dirac-algebra basis matrices (block Pauli) x (spin Pauli),
/// times a phase i^phase.  Index 0 is the 2x2 identity, 1..3 are x, y, z.
struct BasisElement {
    std::uint8_t left = 0;
    std::uint8_t right = 0;
    std::uint8_t phase = 0;  // power of i, 0..3

    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

enum class Grade { Even, Odd };

using Matrix4c = Eigen::Matrix<std::complex<double>, 4, 4>;

BasisElement basis_mul(BasisElement a, BasisElement b);
Grade beta_grade(BasisElement a);
Matrix4c to_numeric(BasisElement a);

/// Hermitian conjugate: the Pauli products are Hermitian, only the phase flips.
BasisElement basis_adjoint(BasisElement a);

/// Product of two Pauli indices: sigma_a sigma_b = i^phase sigma_c.
struct PauliProduct {
    std::uint8_t index;
    std::uint8_t phase;
};
PauliProduct pauli_mul(std::uint8_t a, std::uint8_t b);

std::string phase_string(std::uint8_t phase);
std::uint8_t parse_phase(const std::string& s);

std::string to_string(BasisElement a);

namespace basis {
// Spatial indices below run over 1..3.
BasisElement identity();
BasisElement beta();
BasisElement alpha(int i);
BasisElement sigma(int i);
BasisElement beta_sigma(int i);
BasisElement gamma(int i);
BasisElement eta();
}  // namespace basis

}  // namespace fwdyon
