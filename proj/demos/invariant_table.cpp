// Library usage walkthrough: computes a small table of invariants for
// punctured surfaces, cross-checks one of them against the counting oracle,
// and shows the core-module primitives directly.

#include <sl2tqft/charvar.hpp>
#include <sl2tqft/ff_oracle.hpp>

#include <iostream>

using namespace sl2tqft;

int main() {
    std::cout << "E(Rep) for small surfaces:\n";
    for (int g = 1; g <= 3; ++g) {
        const SurfaceSpec closed{g, {}};
        std::cout << "  genus " << g << ", no punctures:   " << to_string(evaluate(closed)) << "\n";
        const SurfaceSpec punctured{g, {PunctureClass::JPlus}};
        std::cout << "  genus " << g << ", one [J+]:       " << to_string(evaluate(punctured))
                  << "\n";
    }

    std::cout << "\ncharacter varieties:\n";
    for (int n = 1; n <= 3; ++n)
        std::cout << "  F_" << n << ":       " << to_string(e_char(CharVarQuery::free_group(n)))
                  << "\n";
    for (int g = 1; g <= 2; ++g)
        std::cout << "  Sigma_" << g << ":   " << to_string(e_char(CharVarQuery::surface(g)))
                  << "\n";

    // the two computation paths agree, and the value counts F_5 points
    const SurfaceSpec spec{2, {PunctureClass::NegId, PunctureClass::NegId}};
    const LaurentPoly cls = evaluate(spec);
    std::cout << "\ngenus 2 with two -Id punctures:\n";
    std::cout << "  engine:       " << to_string(cls) << "\n";
    std::cout << "  closed form:  " << to_string(closed_form(spec)) << "\n";
    std::cout << "  E(5) = " << cls.eval_int(5).str() << ", #Rep(F_5) = " << count(spec, 5).str()
              << "\n";

    // core-module primitives: one genus tube applied to the disc class
    const CoreVector after_tube = rz_genus() * CoreVector::unit(0);
    std::cout << "\nT_1 coordinate after one genus tube: " << to_string(after_tube[0]) << "\n";
    std::cout << "its measure: " << to_string(measure(after_tube)) << "\n";
    return 0;
}
