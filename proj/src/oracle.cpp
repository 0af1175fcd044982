#include "sl2char/oracle.hpp"

#include "sl2char/padic.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

namespace sl2char {

namespace {

long pow_long(int p, int e) {
    long r = 1;
    for (int i = 0; i < e; i++) r *= p;
    return r;
}

void (*g_progress)(const char*) = nullptr;

void report_progress(const std::string& msg) {
    if (g_progress) g_progress(msg.c_str());
}

int ord_mod(long v, int p, int m) {
    if (v == 0) return m;
    int k = 0;
    while (v % p == 0) {
        v /= p;
        k++;
    }
    return k;
}

struct M2 {
    long a, b, c, d;
};

M2 conj_by(const M2& t, long a, long b, long c, long d, long P) {
    // y^{-1} t y with y = [a b; c d], det 1, y^{-1} = [d -b; -c a]
    long ua = (t.a * a + t.b * c) % P, ub = (t.a * b + t.b * d) % P;
    long uc = (t.c * a + t.d * c) % P, ud = (t.c * b + t.d * d) % P;
    M2 r;
    r.a = mod_pos(d * ua - b * uc, P);
    r.b = mod_pos(d * ub - b * ud, P);
    r.c = mod_pos(a * uc - c * ua, P);
    r.d = mod_pos(a * ud - c * ub, P);
    return r;
}

int classify_reduced(int p, long ra, long rb, long rc, long rd) {
    // class index of a unipotent element of SL(2,F_p): 0, 1 (square), 2.
    ra %= p; rb %= p; rc %= p; rd %= p;
    if (ra == 1 && rb == 0 && rc == 0 && rd == 1) return 0;
    long z = mod_pos(ra - 1, p);
    if (mod_pos(ra - 1 + rd - 1, p) != 0 || mod_pos(z * z + rb * rc, p) != 0)
        throw std::logic_error("oracle: reduction is not unipotent");
    int s;
    if (rb % p != 0)
        s = sgn_mod(p, rb);
    else
        s = sgn_mod(p, rc) * sign_minus_one(p);
    return s == +1 ? 1 : 2;
}

int orbit_index(VOrbit v) {
    switch (v) {
        case VOrbit::V0: return 0;
        case VOrbit::V1p: return 1;
        case VOrbit::V1m: return 2;
        case VOrbit::V2p: return 3;
        default: return 4;
    }
}

long default_u(int p, const CellIndex& cell, std::optional<long> u,
               std::optional<long> eps) {
    long e = eps.value_or(smallest_nonsquare(p));
    long uu = u.value_or(cell.nu > 0 ? 1 : e);
    if (sgn_mod(p, uu) != cell.nu)
        throw std::invalid_argument("oracle: sgn(u) must match the cell sign");
    return uu;
}

// Extract the four integral entries of a PadicMat.
M2 entries_of(const PadicMat& m) {
    if (!m.entries_integral()) throw std::logic_error("oracle target must be integral");
    return {m.entry(0, 0).val.value(), m.entry(0, 1).val.value(), m.entry(1, 0).val.value(),
            m.entry(1, 1).val.value()};
}

// Representative transported to the vertex-1 chart: conjugation by
// diag(1, pi) multiplies the upper right entry by pi and divides the
// lower left by pi.
PadicMat y_rep_transported(int p, int prec, const CellIndex& cell, long u, long eps) {
    long P = pow_long(p, prec);
    PadicMat y = y_rep(p, prec + 1, cell, u, eps);
    long B = y.entry(0, 1).val.value();
    long C = y.entry(1, 0).val.value();
    if (C % p != 0) throw std::logic_error("lower-left entry of the representative is a unit");
    return PadicMat(p, prec, {y.entry(0, 0).val.value() % P, (B % P) * p % P, (C / p) % P,
                              y.entry(1, 1).val.value() % P});
}

struct ScanKey {
    int p;
    Cocycle z;
    int n, nu;
    long u, eps;
    bool operator<(const ScanKey& o) const {
        return std::tie(p, z, n, nu, u, eps) < std::tie(o.p, o.z, o.n, o.nu, o.u, o.eps);
    }
};

std::map<ScanKey, CellScan> g_scan_cache;
std::mutex g_scan_mutex;

struct SubgroupSizes {
    std::vector<Int> vertex;  // [lambda], count at the enumeration level
    Int group_size;
};

std::map<std::pair<int, int>, SubgroupSizes> g_subgroup_cache;

// Enumerate SL(2, Z/P) and call visit(a,b,c,d) for each element; the a-loop
// is split into [a_lo, a_hi) so scans can be partitioned.
template <typename F>
void for_each_sl2(int p, int m, long a_lo, long a_hi, F&& visit) {
    long P = pow_long(p, m);
    for (long a = a_lo; a < a_hi; a++) {
        if (a % p != 0) {
            long ainv = inv_mod(a, P);
            for (long b = 0; b < P; b++)
                for (long c = 0; c < P; c++) {
                    long d = (1 + b * c) % P * ainv % P;
                    visit(a, b, c, d);
                }
        } else if (a == 0) {
            // b c = -1; d is free.
            for (long b = 1; b < P; b++) {
                if (b % p == 0) continue;
                long c = mod_pos(-inv_mod(b, P), P);
                for (long d = 0; d < P; d++) visit(a, b, c, d);
            }
        } else {
            int k = ord_mod(a, p, m);
            long pk = pow_long(p, k);
            long step = P / pk;
            long a0 = a / pk;  // unit
            long a0inv = inv_mod(a0, P);
            for (long b = 0; b < P; b++)
                for (long c = 0; c < P; c++) {
                    long t = (1 + b * c) % P;
                    if (t % pk != 0) continue;
                    long d0 = (t / pk) % step * a0inv % step;
                    for (long j = 0; j < pk; j++) visit(a, b, c, d0 + j * step);
                }
        }
    }
}

// Size of {y : ord(upper right) >= 2 lambda} at level m.  The index in the
// full group is the vertex-vertex coset count, so the size follows from the
// group order; enumeration cross-checks this at small levels (see tests).
Int lambda_subgroup_size(int p, int m, int lambda) {
    Int idx = coset_count_vertex(p, lambda);
    Int total = sl2_group_size(p, m);
    if (total % idx != 0) throw std::logic_error("lambda subgroup index does not divide");
    return total / idx;
}

const SubgroupSizes& subgroup_sizes(int p, int m) {
    auto key = std::make_pair(p, m);
    auto it = g_subgroup_cache.find(key);
    if (it != g_subgroup_cache.end()) return it->second;
    SubgroupSizes s;
    s.vertex.assign(static_cast<size_t>(m) + 1, Int(0));
    long total = 0;
    std::vector<long> hist_b(static_cast<size_t>(m) + 1, 0);
    for_each_sl2(p, m, 0, pow_long(p, m), [&](long, long b, long, long) {
        hist_b[static_cast<size_t>(ord_mod(b, p, m))]++;
        total++;
    });
    for (int ob = 0; ob <= m; ob++)
        for (int l = 0; 2 * l <= ob && l <= m; l++)
            s.vertex[static_cast<size_t>(l)] += hist_b[static_cast<size_t>(ob)];
    s.group_size = total;
    if (sl2_group_size(p, m) != s.group_size)
        throw std::logic_error("group enumeration size mismatch");
    for (int l = 0; 2 * l <= m; l++)
        if (s.vertex[static_cast<size_t>(l)] != lambda_subgroup_size(p, m, l))
            throw std::logic_error("lambda subgroup enumeration disagrees with the index");
    auto [pos, ok] = g_subgroup_cache.emplace(key, std::move(s));
    (void)ok;
    return pos->second;
}

CellScan run_scan(int p, const CellIndex& cell, long u, long eps) {
    cell.require_valid();
    if (cell.z == Cocycle::s0)
        throw std::domain_error("generic scan does not cover s0 cells; use the paired mode");
    require_oracle_scope(p, cell.n);
    int n = cell.n;
    int m = n + 2;
    long P = pow_long(p, m);
    report_progress("scanning SL(2, Z/" + std::to_string(p) + "^" + std::to_string(m) +
                    ") for cell " + cell.str());

    CellScan scan;
    scan.p = p;
    scan.m = m;
    scan.lv = (n + 3) / 2;
    scan.li = (n + 3) / 2;
    scan.v.assign(static_cast<size_t>(scan.lv) + 1, {});
    scan.iw.assign(2 * static_cast<size_t>(scan.li) + 1, {});

    M2 h0 = entries_of(cayley(y_rep(p, m, cell, u, eps)));
    M2 h1 = entries_of(cayley(y_rep_transported(p, m, cell, u, eps)));
    M2 yl = entries_of(y_rep(p, m, cell, u, eps));
    const M2 targets[2] = {h0, h1};

    int nthreads = oracle_threads();
    std::vector<CellScan> parts(static_cast<size_t>(nthreads), scan);
    std::vector<long> totals(static_cast<size_t>(nthreads), 0);

    auto work = [&](int tid) {
        CellScan& out = parts[static_cast<size_t>(tid)];
        long lo = P * tid / nthreads, hi = P * (tid + 1) / nthreads;
        for_each_sl2(p, m, lo, hi, [&](long a, long b, long c, long d) {
            totals[static_cast<size_t>(tid)]++;
            for (int x = 0; x < 2; x++) {
                M2 q = conj_by(targets[x], a, b, c, d, P);
                int ob = ord_mod(q.b, p, m);
                for (int l = 0; l <= out.lv; l++) {
                    if (ob < 2 * l) break;
                    long beta = l == 0 ? q.b % p : (q.b / pow_long(p, 2 * l)) % p;
                    long gamma = l == 0 ? q.c % p : 0;
                    int cls = classify_reduced(p, q.a % p, beta, gamma, q.d % p);
                    out.v[static_cast<size_t>(l)][static_cast<size_t>(x)]
                         [static_cast<size_t>(cls)]++;
                }
            }
            {
                M2 q = conj_by(yl, a, b, c, d, P);
                int oA = ord_mod(q.b, p, m), oC = ord_mod(q.c, p, m);
                for (int l = -out.li; l <= out.li; l++) {
                    if (oA < 2 * l - 1 || oC < -2 * l) continue;
                    long xt = (2 * l - 1 >= 0 && oA == 2 * l - 1)
                                  ? (q.b / pow_long(p, 2 * l - 1)) % p
                                  : 0;
                    long yt = (-2 * l >= 0 && oC == -2 * l) ? (q.c / pow_long(p, -2 * l)) % p : 0;
                    int orb;
                    if (xt == 0 && yt == 0)
                        orb = 0;
                    else if (xt == 0)
                        orb = sgn_mod(p, yt) == +1 ? 1 : 2;
                    else if (yt == 0)
                        orb = sgn_mod(p, xt) == +1 ? 3 : 4;
                    else
                        throw std::logic_error("oracle: reduction misses the cone {xy=0}");
                    out.iw[static_cast<size_t>(l + out.li)][static_cast<size_t>(orb)]++;
                }
            }
        });
    };

    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; t++) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    long total = 0;
    for (int t = 0; t < nthreads; t++) {
        total += totals[static_cast<size_t>(t)];
        for (size_t l = 0; l < scan.v.size(); l++)
            for (int x = 0; x < 2; x++)
                for (int cls = 0; cls < 3; cls++)
                    scan.v[l][static_cast<size_t>(x)][static_cast<size_t>(cls)] +=
                        parts[static_cast<size_t>(t)].v[l][static_cast<size_t>(x)]
                             [static_cast<size_t>(cls)];
        for (size_t l = 0; l < scan.iw.size(); l++)
            for (int orb = 0; orb < 5; orb++)
                scan.iw[l][static_cast<size_t>(orb)] +=
                    parts[static_cast<size_t>(t)].iw[l][static_cast<size_t>(orb)];
    }
    scan.group_size = total;
    if (Int(total) != sl2_group_size(p, m))
        throw std::logic_error("cell scan enumeration size mismatch");
    return scan;
}

}  // namespace

bool oracle_in_scope(int p, int n) { return (p == 3 && n <= 3) || (p == 5 && n <= 1); }

void require_oracle_scope(int p, int n) {
    if (!oracle_in_scope(p, n))
        throw std::domain_error("oracle scope is p=3 with n<=3 and p=5 with n<=1");
}

int oracle_threads() {
    static int threads = [] {
        const char* env = std::getenv("SL2CHAR_THREADS");
        if (!env) return 1;
        int t = std::atoi(env);
        return t >= 1 ? t : 1;
    }();
    return threads;
}

void oracle_set_progress(void (*hook)(const char*)) { g_progress = hook; }

Int sl2_group_size(int p, int m) {
    Int r = pow_int(p, static_cast<unsigned>(3 * m - 2));
    return r * (static_cast<long>(p) * p - 1);
}

Int coset_count_vertex(long q, int lambda) {
    if (lambda < 0) throw std::invalid_argument("vertex coset count needs lambda >= 0");
    if (lambda == 0) return 1;
    return Int(q + 1) * pow_int(q, static_cast<unsigned>(2 * lambda - 1));
}

Int coset_count_iwahori(long q, int lambda) {
    if (lambda > 0) return pow_int(q, static_cast<unsigned>(2 * lambda - 1));
    return pow_int(q, static_cast<unsigned>(-2 * lambda));
}

const CellScan& scan_cell(int p, const CellIndex& cell, std::optional<long> u,
                          std::optional<long> eps) {
    long e = eps.value_or(smallest_nonsquare(p));
    long uu = default_u(p, cell, u, eps);
    ScanKey key{p, cell.z, cell.n, cell.nu, uu, e};
    {
        std::lock_guard<std::mutex> lock(g_scan_mutex);
        auto it = g_scan_cache.find(key);
        if (it != g_scan_cache.end()) return it->second;
    }
    CellScan scan = run_scan(p, cell, uu, e);
    std::lock_guard<std::mutex> lock(g_scan_mutex);
    return g_scan_cache.emplace(key, std::move(scan)).first->second;
}

Rat count_N_U_lambda(int p, const CellIndex& cell, int vertex, int lambda, UnipClass cls,
                     std::optional<long> u, std::optional<long> eps) {
    if (lambda < 0) throw std::invalid_argument("count_N_U_lambda needs lambda >= 0");
    const CellScan& scan = scan_cell(p, cell, u, eps);
    if (lambda > scan.lv) return rat(0);
    int ci = cls == UnipClass::U0 ? 0 : cls == UnipClass::U1 ? 1 : 2;
    long raw = scan.v[static_cast<size_t>(lambda)][static_cast<size_t>(vertex)]
                     [static_cast<size_t>(ci)];
    if (raw == 0) return rat(0);
    if (2 * lambda > scan.m)
        throw std::logic_error("nonzero count at a lambda beyond the deciding level");
    Int sub = subgroup_sizes(p, scan.m).vertex[static_cast<size_t>(lambda)];
    Rat n = rat(Int(raw), sub);
    if (!is_integer(n))
        throw std::logic_error("coset count is not an integer; enumeration level too low");
    return n;
}

Rat oracle_M(int p, int vertex, const CellIndex& cell, UnipClass cls, std::optional<long> u,
             std::optional<long> eps) {
    const CellScan& scan = scan_cell(p, cell, u, eps);
    Rat total = rat(0);
    for (int l = 0; l <= scan.lv; l++) {
        Rat term = count_N_U_lambda(p, cell, vertex, l, cls, u, eps);
        if (2 * l > cell.n + 1 && term != 0)
            throw std::logic_error("lambda window violation on the vertex side");
        total += term;
    }
    return total;
}

Rat oracle_N_iwahori(int p, const CellIndex& cell, int lambda, VOrbit orbit,
                     std::optional<long> u, std::optional<long> eps) {
    const CellScan& scan = scan_cell(p, cell, u, eps);
    if (lambda < -scan.li || lambda > scan.li) return rat(0);
    long raw = scan.iw[static_cast<size_t>(lambda + scan.li)]
                      [static_cast<size_t>(orbit_index(orbit))];
    // The coset weight q^(2 lambda - 1) resp. q^(2|lambda|) times the
    // volume fraction of the satisfying set.
    return rat(Int(raw) * coset_count_iwahori(p, lambda), Int(scan.group_size));
}

Rat oracle_N_total(int p, const CellIndex& cell, VOrbit orbit, std::optional<long> u,
                   std::optional<long> eps) {
    const CellScan& scan = scan_cell(p, cell, u, eps);
    Rat total = rat(0);
    for (int l = -scan.li; l <= scan.li; l++)
        total += oracle_N_iwahori(p, cell, l, orbit, u, eps);
    return total;
}

Rat oracle_N0(int p, const CellIndex& cell) { return oracle_N_total(p, cell, VOrbit::V0); }

namespace {

PairedS0 paired_from_counts(int p, const std::vector<std::array<Rat, 3>>& n_by_lambda, int n) {
    PairedS0 out{rat(0), rat(0)};
    for (size_t l = 0; l < n_by_lambda.size(); l++) {
        Rat qt = rat(1 - p) * n_by_lambda[l][0] + n_by_lambda[l][1] + n_by_lambda[l][2];
        Rat qg = n_by_lambda[l][1] - n_by_lambda[l][2];
        if (2 * static_cast<int>(l) > n && (qt != 0 || qg != 0))
            throw std::logic_error("split-cell tail fails to cancel");
        out.qt_sum += qt;
        out.n1_minus_neps += qg;
    }
    return out;
}

}  // namespace

PairedS0 oracle_s0_paired(int p, int vertex, const CellIndex& cell, std::optional<long> u,
                          std::optional<long> eps) {
    cell.require_valid();
    if (cell.z != Cocycle::s0) throw std::domain_error("paired mode is for s0 cells");
    require_oracle_scope(p, cell.n);
    if (vertex != 0 && vertex != 1) throw std::invalid_argument("vertex must be 0 or 1");
    long uu = default_u(p, cell, u, eps);
    static std::map<std::tuple<int, int, int, long>, PairedS0> cache;
    static std::mutex cache_mutex;
    auto key = std::make_tuple(p, cell.n, cell.nu, uu);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int n = cell.n;
    int lstar = n / 2 + 2;
    // Digits up to position 2*lstar must be certain.
    int m = std::max(n + 2, 2 * lstar + 1);
    long P = pow_long(p, m);
    // w = 1 + u pi^n; the conjugate's upper-right entry is b d (w - 1/w),
    // which depends only on the pair (b, d).  Each (b, d) with b or d a
    // unit admits exactly P completions (a, c) with ad - bc = 1, and the
    // diagonal target is fixed by the chart swap, so both vertices share
    // these counts.
    long w = mod_pos(1 + uu * pow_long(p, n), P);
    long winv = inv_mod(w, P);
    long delta = mod_pos(w - winv, P);
    std::vector<std::array<Rat, 3>> counts(static_cast<size_t>(lstar) + 1,
                                           {rat(0), rat(0), rat(0)});
    std::vector<std::array<long, 3>> raw(static_cast<size_t>(lstar) + 1, {0, 0, 0});
    std::vector<int> sgn_table(static_cast<size_t>(p), 0);
    for (int x = 1; x < p; x++) sgn_table[static_cast<size_t>(x)] = sgn_mod(p, x);
    std::vector<long> p2l(static_cast<size_t>(lstar) + 1, 1);
    for (int l = 1; l <= lstar; l++) p2l[static_cast<size_t>(l)] = pow_long(p, 2 * l);
    for (long b = 0; b < P; b++)
        for (long d = 0; d < P; d++) {
            if (b % p == 0 && d % p == 0) continue;
            long ur = b * d % P * delta % P;
            int ob = ord_mod(ur, p, m);
            for (int l = 0; l <= lstar; l++) {
                if (ob < 2 * l) break;
                // Diagonal reduces to 1; the class is that of [1 beta; 0 1].
                long beta = (ob == 2 * l) ? (ur / p2l[static_cast<size_t>(l)]) % p : 0;
                int cls = beta == 0 ? 0 : (sgn_table[static_cast<size_t>(beta)] == +1 ? 1 : 2);
                raw[static_cast<size_t>(l)][static_cast<size_t>(cls)]++;
            }
        }
    for (int l = 0; l <= lstar; l++)
        for (int cls = 0; cls < 3; cls++) {
            Rat nval = rat(Int(raw[static_cast<size_t>(l)][static_cast<size_t>(cls)]) * Int(P),
                           lambda_subgroup_size(p, m, l));
            if (!is_integer(nval))
                throw std::logic_error("split-cell count is not an integer");
            counts[static_cast<size_t>(l)][static_cast<size_t>(cls)] = nval;
        }
    PairedS0 result = paired_from_counts(p, counts, n);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, result);
    return result;
}

PairedS0 oracle_s0_paired_full(int p, int vertex, const CellIndex& cell, int lambda_max) {
    cell.require_valid();
    if (cell.z != Cocycle::s0) throw std::domain_error("paired mode is for s0 cells");
    require_oracle_scope(p, cell.n);
    if (vertex != 0 && vertex != 1) throw std::invalid_argument("vertex must be 0 or 1");
    long e = smallest_nonsquare(p);
    long uu = cell.nu > 0 ? 1 : e;
    int n = cell.n;
    int m = std::max(n + 2, 2 * lambda_max + 1);
    long P = pow_long(p, m);
    M2 h = entries_of(cayley(y_rep(p, m, cell, uu, e)));
    std::vector<std::array<long, 3>> raw(static_cast<size_t>(lambda_max) + 1, {0, 0, 0});
    for_each_sl2(p, m, 0, P, [&](long a, long b, long c, long d) {
        M2 q = conj_by(h, a, b, c, d, P);
        int ob = ord_mod(q.b, p, m);
        for (int l = 0; l <= lambda_max; l++) {
            if (ob < 2 * l) break;
            long beta = (ob == 2 * l) ? (q.b / pow_long(p, 2 * l)) % p : 0;
            long gamma = l == 0 ? q.c % p : 0;
            int cls = classify_reduced(p, q.a % p, beta, gamma, q.d % p);
            raw[static_cast<size_t>(l)][static_cast<size_t>(cls)]++;
        }
    });
    std::vector<std::array<Rat, 3>> counts(static_cast<size_t>(lambda_max) + 1,
                                           {rat(0), rat(0), rat(0)});
    for (int l = 0; l <= lambda_max; l++)
        for (int cls = 0; cls < 3; cls++)
            counts[static_cast<size_t>(l)][static_cast<size_t>(cls)] =
                rat(Int(raw[static_cast<size_t>(l)][static_cast<size_t>(cls)]),
                    lambda_subgroup_size(p, m, l));
    return paired_from_counts(p, counts, n);
}

long hyperbola_count(int q) {
    long count = 0;
    for (int x = 0; x < q; x++)
        for (int y = 0; y < q; y++)
            if (mod_pos(static_cast<long>(x) * x - static_cast<long>(y) * y, q) == 1) count++;
    return count;
}

long half_conic_count(int q, int eta) {
    if (sgn_mod(q, eta) != -1) throw std::invalid_argument("eta must be a non-residue");
    long count = 0;
    for (int a = 0; a < q; a++)
        for (int b = 0; b < q; b++)
            for (int c = 0; c < q; c++)
                for (int d = 0; d < q; d++) {
                    if (mod_pos(static_cast<long>(a) * d - static_cast<long>(b) * c, q) != 1)
                        continue;
                    long v = mod_pos(static_cast<long>(d) * d - static_cast<long>(b) * b * eta, q);
                    if (sgn_mod(q, v) == +1) count++;
                }
    return count;
}

}  // namespace sl2char
