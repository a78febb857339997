// Radii of univalence and convexity of the Re(f/z) class, searched on the
// extremal function and compared with the closed forms.

#include <cstdio>

#include "convharm/membership.hpp"
#include "convharm/oracle.hpp"

using namespace convharm;

int main() {
    for (const double alpha : {0.0, 0.25, 0.5}) {
        const HarmonicSeries extremal = HarmonicSeries::th(2, {0.0}, {0.0, 1.0 - alpha});
        const ClassRadii closed = class_radii(alpha);
        const double univalence = radius_search(extremal, RadiusProperty::Jacobian);
        const double convexity = radius_search(extremal, RadiusProperty::Convex);
        std::printf("alpha = %.2f: univalence %.4f (closed %.4f), convexity %.4f (closed %.4f)\n",
                    alpha, univalence, closed.univalence, convexity, closed.convex);
    }
    return 0;
}
