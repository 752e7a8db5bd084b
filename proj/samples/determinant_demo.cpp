// Builds the 6x6 frieze matrix with seeds x = (1,-2,6,2,1), y = (2,1,-1,sqrt 5)
// over Q(sqrt 5), triangulates it and compares the two determinants.

#include "frieze/frieze.hpp"

#include <iostream>

int main()
{
    using namespace frieze;

    const FieldDescriptor q5 = FieldDescriptor::quadratic(5);
    SeedData seeds;
    for (int v : {1, -2, 6, 2, 1})
        seeds.x.emplace_back(v);
    for (int v : {2, 1, -1})
        seeds.y.emplace_back(v);
    seeds.y.push_back(FieldElement::sqrt_d(q5));

    FriezeMatrix m = build_from_seeds(seeds, q5);
    std::cout << "M =\n" << io::to_grid(m.matrix());

    TriangulatedForm form = triangulate(m, false);
    std::cout << "T_M =\n" << io::to_grid(form.t.matrix());

    FieldElement closed = det_closed_form(m);
    FieldElement eliminated = det_elimination(m.matrix());
    std::cout << "det (closed form)  = " << closed << "\n"
              << "det (elimination)  = " << eliminated << "\n"
              << "product diag(T_M)  = " << form.t.diagonal_product() << "\n";
    return closed == eliminated ? 0 : 1;
}
