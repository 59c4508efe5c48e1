// Evaluates closed-form eigenfunctions and checks their orthonormality numerically.
#include "bisphere/closed_form.hpp"

#include <iostream>

int main() {
    using namespace bisphere;
    const ModelParams p = default_params();
    const StateSpec s{3, 1, 1, 0, 0};
    std::cout << "state " << s.label() << " admissible: " << std::boolalpha << admissible(s, Coords::Standard) << '\n';
    std::cout << "psi(pi/3, pi/5) = " << psi_eval(s, p, 3.14159265358979 / 3, 3.14159265358979 / 5, Coords::Standard)
              << '\n';

    const QuadratureGrid grid(200);
    const Eigen::MatrixXd gram = gram_matrix(3, p, grid);
    std::cout << gram.rows() << " states, grid " << grid.descriptor() << ", max |G - I| = "
              << max_deviation_from_identity(gram) << '\n';
}
