#include "sl2char/fq.hpp"

namespace sl2char {

int sgn_mod(int p, long x) {
    long r = mod_pos(x, p);
    if (r == 0) return 0;
    // Euler criterion: r^((p-1)/2) mod p.
    long e = (p - 1) / 2;
    long base = r, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc == 1 ? +1 : -1;
}

int smallest_nonsquare(int p) {
    for (int x = 2; x < p; x++)
        if (sgn_mod(p, x) == -1) return x;
    throw std::domain_error("no non-residue found; p not an odd prime?");
}

long inv_mod(long x, long m) {
    long r0 = m, r1 = mod_pos(x, m);
    long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("inverse of a non-unit");
    return mod_pos(t0, m);
}

}  // namespace sl2char
