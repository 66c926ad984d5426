#include <iostream>
#include "tautring/phi.hpp"
#include "tautring/kappa.hpp"
#include "tautring/relations.hpp"
#include "tautring/json_io.hpp"
int main() {
    using namespace tautring;
    std::cout << phi(4, 0).str() << "\n";
    std::cout << phi_oracle_residue(4, 0).str() << "\n";
    std::cout << kappa_n1(4, 0).str() << "\n";
    std::cout << kappa_even(2, 2, 0).str() << "\n";
    for (auto& r : phi_relation_kernel(6)) std::cout << relation_to_csv_row(r) << "\n";
    std::cout << relation_to_csv_row(signature_relation(7)) << "\n";
    std::cout << poly_to_json(phi(4,0)).dump() << "\n";
    auto pr = cp2_pointed_relation();
    std::cout << pr.alpha.str() << " " << pr.beta.str() << " " << pr.gamma1.str() << " " << pr.gamma2.str() << "\n";
    return 0;
}
