// Bounds, construction and verification on the butterfly network, or on a
// network file given as the first argument.
//
//   demo_bounds [network.json] [r]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "snfc/capacity_bounds.hpp"
#include "snfc/code.hpp"
#include "snfc/fixtures.hpp"
#include "snfc/verification.hpp"

using namespace snfc;

int main(int argc, char** argv) {
    Network n = fixtures::butterfly();
    if (argc > 1) {
        std::ifstream in(argv[1]);
        std::stringstream ss;
        ss << in.rdbuf();
        n = Network::parse(ss.str());
    }
    const std::size_t r = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 1;

    const auto b = upper_bound(n, r);
    std::cout << "C_min = " << b.c_min << ", C_min_bar = " << b.c_min_bar << "\n";
    std::cout << "r = " << r << ": " << b.lower << " <= capacity <= " << b.upper << "\n";
    if (b.exact) std::cout << "exact: " << b.exact->value << " (" << reason_name(b.exact->reason) << ")\n";

    try {
        const auto res = construct_report(n, r);
        const auto& sc = res.code;
        std::cout << "code over GF(" << sc.field().to_string() << "), R = " << sc.rate()
                  << ", message symbols per use = " << sc.message_dims() << "\n";
        std::cout << "B =\n";
        for (std::size_t i = 0; i < sc.B.rows(); ++i) {
            for (Elem x : sc.B.row(i)) std::cout << ' ' << x;
            std::cout << "\n";
        }
        const auto v = verify(sc, n, r);
        std::cout << "computable " << v.computable << ", secure " << v.secure_rank;
        if (v.secure_exhaustive) std::cout << " (exhaustive " << *v.secure_exhaustive << ")";
        std::cout << "\n";
        if (sc.field().m() > 1) {
            const auto l = lift_extension(sc);
            std::cout << "as a code over GF(" << l.base.to_string() << "): (" << l.ell << ", " << l.n << ")\n";
        }
    } catch (const Error& e) {
        std::cout << "no code: " << e.what() << "\n";
    }
}
