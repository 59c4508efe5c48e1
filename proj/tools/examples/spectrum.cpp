// Energy levels of the Hamiltonian and their degeneracies on polynomials of degree <= 4.
#include "bisphere/sphere_model.hpp"

#include <iostream>

int main() {
    using namespace bisphere;
    const ModelParams p{make_rational(1, 2), make_rational(1, 4), make_rational(3, 4)};
    const SymmetryCatalog cat(p, 4);
    const LinOp& H = cat["H"];

    std::cout << "dimension " << cat.basis()->size() << '\n';
    for (int N = 0; N <= 4; ++N) {
        LinOp shifted = H;
        shifted.add_identity(-energy(p, N));
        const std::size_t kernel = H.dim() - rank_exact(shifted);
        std::cout << "N=" << N << "  E=" << to_short(energy(p, N)) << "  multiplicity " << kernel << '\n';
    }
    const auto roots = energies(p, 4);
    std::cout << "product of (H - E_N) vanishes: " << std::boolalpha << annihilator_check(H, roots) << '\n';
}
