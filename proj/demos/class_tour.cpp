// A short tour: build a class, test a function, transform it, and confirm the
// verdict with the disk oracle.

#include <cstdio>

#include "convharm/membership.hpp"
#include "convharm/oracle.hpp"
#include "convharm/transforms.hpp"

using namespace convharm;

int main() {
    const KernelPair starlike = named_kernel(NamedKernel::Starlike, 0.0);

    const HarmonicSeries f = HarmonicSeries::th(3, {0.2, 0.1}, {0.05, 0.0, 0.0});
    const MembershipReport report = condition_lhs(f, starlike);
    std::printf("condition lhs = %.6f  -> %s\n", report.lhs,
                report.verdict ? "member" : "not a member");

    const HarmonicSeries smoothed = bernardi_transform(f, 1.5);
    std::printf("after the Bernardi transform: lhs = %.6f\n",
                condition_lhs(smoothed, starlike).lhs);

    GridSpec grid;
    grid.radii = 24;
    grid.angles = 120;
    const OracleReport oracle = check_defining_inequality(f, starlike, grid);
    std::printf("disk oracle: min Re((f*Phi)/(f*Psi)) - alpha = %.6f at r = %.3f\n",
                oracle.re_ratio.value, oracle.re_ratio.at.r);
    return 0;
}
