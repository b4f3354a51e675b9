// Walks the future light cone x1^2 + x2^2 = x3^2 through the library:
// tube datum, kernel chain, modulus, and the CR-algebra of the tube.
#include <iostream>

#include "crtube/cralgebra.hpp"
#include "crtube/endo.hpp"
#include "crtube/families.hpp"
#include "crtube/io.hpp"

int main()
{
    using namespace crtube;
    QMatrix phi = families::ei();
    TubeDatum td = make_tube(phi, 2, {1, 0, 1});

    auto chain = kernel_chain(td);
    std::cout << "kernel chain dims:";
    for (const auto& k : chain.spaces)
        std::cout << ' ' << k.dim();
    std::cout << "\ndegree: " << chain.degree << "\n";

    auto c = classify3(phi);
    std::cout << "class: " << to_string(c.cls) << ", modulus: " << to_string(c.mu) << "\n";

    CRAlgebra cra = tube_to_cralgebra(td);
    auto r = condition_report(cra);
    std::cout << "CR-algebra dim " << r.dim_g << ", k = " << (r.k ? *r.k : -1)
              << ", conditions I-V: " << (r.i_dims && r.ii_brackets && r.iii_not_levi_flat && r.iv_levi_degenerate &&
                                          r.v_two_nondegenerate)
              << "\n";
    std::cout << io::dump(io::to_json(td));
}
