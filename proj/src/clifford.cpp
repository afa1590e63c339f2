#include "fwdyon/clifford.hpp"

#include <stdexcept>

namespace fwdyon {

PauliProduct pauli_mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0) return {b, 0};
    if (b == 0) return {a, 0};
    if (a == b) return {0, 0};
    auto c = static_cast<std::uint8_t>(6 - a - b);
    bool cyclic = (a % 3) + 1 == b;
    return {c, static_cast<std::uint8_t>(cyclic ? 1 : 3)};
}

BasisElement basis_mul(BasisElement a, BasisElement b) {
    auto l = pauli_mul(a.left, b.left);
    auto r = pauli_mul(a.right, b.right);
    return {l.index, r.index,
            static_cast<std::uint8_t>((a.phase + b.phase + l.phase + r.phase) % 4)};
}

Grade beta_grade(BasisElement a) {
    return (a.left == 0 || a.left == 3) ? Grade::Even : Grade::Odd;
}

BasisElement basis_adjoint(BasisElement a) {
    a.phase = static_cast<std::uint8_t>((4 - a.phase) % 4);
    return a;
}

namespace {

Eigen::Matrix2cd pauli(std::uint8_t k) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m;
    switch (k) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, C(0, -1), C(0, 1), 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw std::out_of_range("pauli index");
    }
    return m;
}

}  // namespace

Matrix4c to_numeric(BasisElement a) {
    static const std::complex<double> phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Eigen::Matrix2cd l = pauli(a.left);
    Eigen::Matrix2cd r = pauli(a.right);
    Matrix4c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = l(i, j) * r;
    return phases[a.phase] * out;
}

std::string phase_string(std::uint8_t phase) {
    static const char* names[4] = {"+1", "+i", "-1", "-i"};
    return names[phase % 4];
}

std::uint8_t parse_phase(const std::string& s) {
    if (s == "+1" || s == "1") return 0;
    if (s == "+i" || s == "i") return 1;
    if (s == "-1") return 2;
    if (s == "-i") return 3;
    throw std::invalid_argument("bad phase: " + s);
}

std::string to_string(BasisElement a) {
    static const char* p[4] = {"1", "x", "y", "z"};
    return phase_string(a.phase) + "*(" + p[a.left] + "⊗" + p[a.right] + ")";
}

namespace basis {

namespace {
std::uint8_t idx(int i) {
    if (i < 1 || i > 3) throw std::out_of_range("spatial index must be 1..3");
    return static_cast<std::uint8_t>(i);
}
}  // namespace

BasisElement identity() { return {0, 0, 0}; }
BasisElement beta() { return {3, 0, 0}; }
BasisElement alpha(int i) { return {1, idx(i), 0}; }
BasisElement sigma(int i) { return {0, idx(i), 0}; }
BasisElement beta_sigma(int i) { return {3, idx(i), 0}; }
BasisElement gamma(int i) { return {2, idx(i), 1}; }
BasisElement eta() { return {2, 0, 3}; }

}  // namespace basis

}  // namespace fwdyon
