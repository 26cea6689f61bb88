// Builds the Groebner family for a few parameter points and prints the facets of the
// induced triangulation in terms of the variables z_i, y_j.

#include <iostream>

#include "idp/idp.hpp"

int main() {
    for (auto [r1, x1] : {std::pair{2, 1}, std::pair{3, 1}}) {
        const auto q = idp::build_q(r1, x1);
        const auto G = idp::groebner_family(q);
        const auto names = idp::ToricRing(q).names();

        std::cout << "r1=" << r1 << " x1=" << x1 << "  N(q)=" << q.volume() << "  |G|=" << G.generators.size()
                  << '\n';
        for (const auto& g : G.generators)
            std::cout << "  " << idp::to_string(g.origin) << "  " << idp::to_text(g.binomial, names) << '\n';

        const auto rep = idp::run_triangulate(G);
        std::cout << "  " << rep.triangulation.facets.size() << " facets, unimodular="
                  << (rep.all_unimodular ? "yes" : "no") << ", regular=" << (rep.regular_certified ? "yes" : "no")
                  << '\n';
        for (const auto& f : rep.triangulation.facets) {
            std::cout << "   {";
            for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << names(f[i]);
            std::cout << "}\n";
        }
    }
}
