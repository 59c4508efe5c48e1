// Builds operators from text and checks one of the anticommutation relations.
#include "bisphere/sphere_model.hpp"

#include <iostream>

int main() {
    using namespace bisphere;
    const ModelParams p = default_params();
    auto basis = std::make_shared<const Basis>(Basis::sphere(3));

    const LinOp L1 = build_symmetry("L1", p, basis);
    const LinOp L2 = build_symmetry("L2", p, basis);
    const LinOp L3 = build_symmetry("L3", p, basis);

    std::cout << "L3 = " << symmetry_text("L3", p) << '\n';
    std::cout << "[H, L3] = 0: " << std::boolalpha << commutator(build_symmetry("H", p, basis), L3).is_zero() << '\n';

    // {L1, L2} - L3 should be a combination of C R3, the mu's and R3
    LinOp omega = anticommutator(L1, L2) - L3;
    std::cout << "{L1, L2} - L3 commutes with L3: " << commutator(omega, L3).is_zero() << '\n';

    const LinOp custom = build_matrix("(s1*D2 - s2*D1)*R1 + 1/2*R1*R2", basis, p, "custom");
    std::cout << custom.name() << " has " << custom.dim() << " columns\n";
}
