// A short walk through the library: wedge products, the cross product via L,
// and the determinant/distance sandwich for a few simplices.

#include <iostream>

#include "projsimplex/projsimplex.hpp"

int main() {
    using namespace projsimplex;

    const CVector a{1.0, Cplx(0.0, 1.0), 0.0};
    const CVector b{0.0, 1.0, Cplx(2.0, -1.0)};
    const CVector cross = generalized_cross(std::vector<CVector>{a, b});
    std::cout << "L(a^b) = (" << cross[0] << ", " << cross[1] << ", " << cross[2] << ")\n";
    std::cout << "a . L(a^b) = " << dot(a, cross) << '\n';

    for (double s : {0.25, 0.6, 1.0}) {
        const Simplex iso = make_isosceles({s});
        std::cout << "isosceles s=" << s << ": |D|=" << iso.abs_det() << " d_min=" << iso.d_min() << '\n';
    }

    const Simplex reg = make_regular({3, 0.4});
    const InequalityCheck chk = check_inequalities(reg);
    std::cout << "regular n=3 c=0.4: |D|=" << reg.abs_det() << " d_min=" << reg.d_min()
              << " lower margin=" << chk.lower_margin << " upper margin=" << chk.upper_margin << '\n';

    Rng rng = make_stream(2024, 0);
    const Simplex rnd = sample_random_simplex(4, rng);
    std::cout << "random n=4: |D|=" << rnd.abs_det() << " d_min=" << rnd.d_min() << '\n';
}
