// Compares the serial and the OpenMP-parallel certificate sweeps on the
// heaviest acceptance family.
#include <chrono>
#include <cstdio>

#include "ellsurf/gaussmanin.hpp"
#include "ellsurf/idr.hpp"

using namespace ellsurf;

namespace {

double run(const DiffOp2& op, bool parallel) {
    auto start = std::chrono::steady_clock::now();
    IdrSolver solver(op, parallel);
    long dim = -1;
    for (long n = 0; n <= 3; ++n) {
        PoleDivisor D;
        for (const Place& v : solver.places()) {
            auto cap = solver.pole_cap(v);
            D.orders[v] = cap ? std::min(n, *cap) : n;
        }
        dim = solver.idr_quotient(D).dimension;
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::printf("  %-8s dim %ld  %.3f s\n", parallel ? "parallel" : "serial", dim, dt.count());
    return dt.count();
}

} // namespace

int main() {
    RatFunc a6(Poly(std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0),
                                     Rat(1)}));
    WeierstrassModel k3 = WeierstrassModel::short_form(RatFunc::zero(), a6);
    DiffOp2 op = picard_fuchs(k3);
    std::printf("K3 family, IDR certificate sweep:\n");
    double serial = run(op, false);
    double parallel = run(op, true);
    std::printf("speedup: %.2fx\n", serial / parallel);
    return 0;
}
