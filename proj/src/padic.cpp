#include "sl2char/padic.hpp"

namespace sl2char {

namespace {

long pow_long(int p, int e) {
    long r = 1;
    for (int i = 0; i < e; i++) {
        if (r > (1L << 61) / p) throw std::overflow_error("p^m exceeds the working range");
        r *= p;
    }
    return r;
}

long mulmod(long a, long b, long m) {
    return static_cast<long>(static_cast<__int128>(a) * b % m);
}

}  // namespace

PadicInt::PadicInt(int p, int prec, long value) : p_(p), m_(prec) {
    if (!is_odd_prime(p)) throw std::domain_error("PadicInt requires an odd prime");
    if (prec < 1) throw std::domain_error("PadicInt requires positive precision");
    pm_ = pow_long(p, prec);
    v_ = mod_pos(value, pm_);
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    int m = std::min(m_, o.m_);
    return PadicInt(p_, m, v_ + o.v_);
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    int m = std::min(m_, o.m_);
    return PadicInt(p_, m, v_ - o.v_);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    int m = std::min(m_, o.m_);
    long mod = pow_long(p_, m);
    return PadicInt(p_, m, mulmod(v_ % mod, o.v_ % mod, mod));
}

PadicInt PadicInt::inv() const {
    if (v_ % p_ == 0) throw std::domain_error("p-adic inverse of a non-unit");
    return PadicInt(p_, m_, inv_mod(v_, pm_));
}

PadicInt::Ord PadicInt::ord() const {
    if (v_ == 0) return {m_, true};
    int k = 0;
    long v = v_;
    while (v % p_ == 0) {
        v /= p_;
        k++;
    }
    return {k, false};
}

FqElem PadicInt::ac() const {
    Ord o = ord();
    if (o.at_least)
        throw InsufficientPrecision("angular component undecided at this precision");
    long v = v_;
    for (int i = 0; i < o.value; i++) v /= p_;
    return FqElem(p_, v);
}

bool PadicInt::ord_at_least(int t) const {
    Ord o = ord();
    if (!o.at_least) return o.value >= t;
    if (o.value >= t) return true;  // ord >= m >= t
    throw InsufficientPrecision("ord threshold exceeds the working precision");
}

int PadicInt::digit(int k) const {
    if (k < 0) throw std::invalid_argument("digit position must be nonnegative");
    if (k >= m_) throw InsufficientPrecision("digit beyond the working precision");
    long v = v_;
    for (int i = 0; i < k; i++) v /= p_;
    return static_cast<int>(v % p_);
}

std::pair<PadicInt::Ord, std::optional<FqElem>> ord_ac(const PadicInt& x) {
    PadicInt::Ord o = x.ord();
    if (o.at_least) return {o, std::nullopt};
    return {o, x.ac()};
}

PadicMat::PadicMat(int p, int prec, std::array<long, 4> a)
    : p_(p), m_(prec),
      e_{Entry{PadicInt(p, prec, a[0]), 0}, Entry{PadicInt(p, prec, a[1]), 0},
         Entry{PadicInt(p, prec, a[2]), 0}, Entry{PadicInt(p, prec, a[3]), 0}} {}

PadicMat PadicMat::identity(int p, int prec) { return PadicMat(p, prec, {1, 0, 0, 1}); }
PadicMat PadicMat::zero(int p, int prec) { return PadicMat(p, prec, {0, 0, 0, 0}); }

PadicMat PadicMat::a_lambda(int p, int prec, int l) {
    PadicMat m = zero(p, prec);
    if (l >= 0) {
        m.entry(0, 0) = {PadicInt(p, prec, pow_long(p, l)), 0};
        m.entry(1, 1) = {PadicInt(p, prec, 1), l};
    } else {
        m.entry(0, 0) = {PadicInt(p, prec, 1), -l};
        m.entry(1, 1) = {PadicInt(p, prec, pow_long(p, -l)), 0};
    }
    return m;
}

PadicMat::Entry PadicMat::normalized(Entry e) {
    while (e.den > 0 && e.val.value() % e.val.p() == 0 && e.val.prec() > 1) {
        e = Entry{PadicInt(e.val.p(), e.val.prec() - 1, e.val.value() / e.val.p()), e.den - 1};
    }
    return e;
}

PadicMat::Entry PadicMat::add_entries(const Entry& x, const Entry& y) {
    int d = std::max(x.den, y.den);
    int p = x.val.p();
    long fx = pow_long(p, d - x.den), fy = pow_long(p, d - y.den);
    int prec = std::min(x.val.prec() + (d - x.den), y.val.prec() + (d - y.den));
    PadicInt xs(p, prec, 0), ys(p, prec, 0);
    {
        long mod = pow_long(p, prec);
        xs = PadicInt(p, prec, mulmod(x.val.value() % mod, fx % mod, mod));
        ys = PadicInt(p, prec, mulmod(y.val.value() % mod, fy % mod, mod));
    }
    return normalized(Entry{xs + ys, d});
}

PadicMat::Entry PadicMat::mul_entries(const Entry& x, const Entry& y) {
    return normalized(Entry{x.val * y.val, x.den + y.den});
}

PadicMat PadicMat::operator+(const PadicMat& o) const {
    PadicMat r = *this;
    for (int i = 0; i < 4; i++) r.e_[static_cast<size_t>(i)] =
        add_entries(e_[static_cast<size_t>(i)], o.e_[static_cast<size_t>(i)]);
    r.m_ = std::min(m_, o.m_);
    return r;
}

PadicMat PadicMat::operator-(const PadicMat& o) const {
    PadicMat neg = o;
    for (auto& e : neg.e_) e.val = -e.val;
    return *this + neg;
}

PadicMat PadicMat::operator*(const PadicMat& o) const {
    PadicMat r = zero(p_, std::min(m_, o.m_));
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) {
            Entry acc = mul_entries(entry(i, 0), o.entry(0, j));
            acc = add_entries(acc, mul_entries(entry(i, 1), o.entry(1, j)));
            r.entry(i, j) = acc;
        }
    return r;
}

PadicMat PadicMat::scale(const Rat& r) const {
    // Only p-power denominators are representable.
    Int den = r.get_den();
    int dshift = 0;
    while (den % p_ == 0) {
        den /= p_;
        dshift++;
    }
    if (den != 1)
        throw std::domain_error("PadicMat::scale: denominator is not a p-power");
    PadicMat out = *this;
    for (auto& e : out.e_) {
        Int num = r.get_num() % Int(e.val.modulus());
        e.val = e.val * PadicInt(p_, e.val.prec(), num.get_si());
        e.den += dshift;
        e = normalized(e);
    }
    return out;
}

bool PadicMat::entries_integral() const {
    for (const auto& e : e_)
        if (e.den != 0) return false;
    return true;
}

PadicInt PadicMat::det_integral() const {
    if (!entries_integral()) throw std::domain_error("det_integral on a non-integral matrix");
    return entry(0, 0).val * entry(1, 1).val - entry(0, 1).val * entry(1, 0).val;
}

PadicInt PadicMat::trace_integral() const {
    if (entry(0, 0).den != 0 || entry(1, 1).den != 0)
        throw std::domain_error("trace_integral with non-integral diagonal");
    return entry(0, 0).val + entry(1, 1).val;
}

PadicMat PadicMat::inv_integral() const {
    PadicInt det = det_integral();
    PadicInt dinv = det.inv();
    int prec = std::min({entry(0, 0).val.prec(), entry(0, 1).val.prec(), entry(1, 0).val.prec(),
                         entry(1, 1).val.prec(), dinv.prec()});
    PadicMat adj(p_, prec, {entry(1, 1).val.value(), -entry(0, 1).val.value(),
                            -entry(1, 0).val.value(), entry(0, 0).val.value()});
    for (auto& e : adj.e_) e.val = e.val * dinv;
    return adj;
}

bool PadicMat::congruent(const PadicMat& o) const {
    for (int i = 0; i < 4; i++) {
        Entry d = add_entries(e_[static_cast<size_t>(i)],
                              Entry{-o.e_[static_cast<size_t>(i)].val, o.e_[static_cast<size_t>(i)].den});
        if (!d.val.is_exactly_zero_mod()) return false;
    }
    return true;
}

namespace {

// ord(entry) >= t for an entry p^(-den) * val.
bool entry_ord_at_least(const PadicMat::Entry& e, int t) { return e.val.ord_at_least(t + e.den); }

FqElem entry_digit_at(const PadicMat::Entry& e, int pos) {
    // digit of the entry at p^pos, i.e. digit of val at pos + den
    int k = pos + e.den;
    if (k < 0) return FqElem(e.val.p(), 0);
    return FqElem(e.val.p(), e.val.digit(k));
}

}  // namespace

bool lattice_member(const PadicMat& m, Lattice which) {
    auto o = [&](int i, int j, int t) { return entry_ord_at_least(m.entry(i, j), t); };
    switch (which) {
        case Lattice::G0:
        case Lattice::Iwahori: {
            bool base = o(0, 0, 0) && o(0, 1, 0) && o(1, 0, which == Lattice::Iwahori ? 1 : 0) &&
                        o(1, 1, 0);
            if (!base) return false;
            break;
        }
        case Lattice::G1:
            if (!(o(0, 0, 0) && o(0, 1, -1) && o(1, 0, 1) && o(1, 1, 0))) return false;
            break;
        case Lattice::g00:
            return o(0, 0, 0) && o(0, 1, 0) && o(1, 0, 0) && o(1, 1, 0);
        case Lattice::g10:
            return o(0, 0, 0) && o(0, 1, -1) && o(1, 0, 1) && o(1, 1, 0);
        case Lattice::g01_half:
            return o(0, 0, 1) && o(0, 1, 0) && o(1, 0, 1) && o(1, 1, 1);
        case Lattice::g01_minus_half:
            return o(0, 0, 0) && o(0, 1, -1) && o(1, 0, 0) && o(1, 1, 0);
    }
    // Group lattices also require determinant 1 at the working precision:
    // scale away denominators before forming the determinant.
    PadicMat scaled = m;
    int shift = std::max(m.entry(0, 1).den, std::max(m.entry(1, 0).den,
                          std::max(m.entry(0, 0).den, m.entry(1, 1).den)));
    if (shift > 0) {
        // det(p^shift * m) = p^(2*shift) * det(m); check det(m) = 1 via digits.
        Rat f(1);
        for (int i = 0; i < shift; i++) f *= m.p();
        scaled = m.scale(f);
    }
    if (!scaled.entries_integral()) return false;
    PadicInt det = scaled.det_integral();
    long want = 1;
    for (int i = 0; i < 2 * shift; i++) want *= m.p();
    return mod_pos(det.value() - want, det.modulus()) == 0;
}

PadicMat cayley(const PadicMat& y) {
    if (!y.entries_integral())
        throw std::domain_error("cayley expects an integral (topologically nilpotent) matrix");
    int p = y.p(), m = y.prec();
    long half = inv_mod(2, pow_long(p, m));
    PadicMat half_y = y.scale(rat(half));
    PadicMat plus = PadicMat::identity(p, m) + half_y;
    PadicMat minus = PadicMat::identity(p, m) - half_y;
    if (minus.det_integral().value() % p == 0)
        throw std::domain_error("cayley: 1 - Y/2 is not invertible at this precision");
    return plus * minus.inv_integral();
}

PadicMat cayley_inverse(const PadicMat& g) {
    if (!g.entries_integral()) throw std::domain_error("cayley_inverse expects an integral matrix");
    int p = g.p(), m = g.prec();
    PadicMat one = PadicMat::identity(p, m);
    PadicMat gp = g + one;
    if (gp.det_integral().value() % p == 0)
        throw std::domain_error("cayley_inverse: g + 1 is not invertible");
    return (g - one).scale(rat(2)) * gp.inv_integral();
}

Reduction reduce(const PadicMat& m, Lattice which) {
    if (!lattice_member(m, which)) throw std::domain_error("reduce: matrix is not in the lattice");
    int p = m.p();
    auto dig = [&](int i, int j, int pos) { return entry_digit_at(m.entry(i, j), pos); };
    switch (which) {
        case Lattice::G0:
        case Lattice::Iwahori:
            return MatFq(p, dig(0, 0, 0).v, dig(0, 1, 0).v, dig(1, 0, 0).v, dig(1, 1, 0).v);
        case Lattice::G1:
            // [a, b/pi; pi c, d] -> [a, b; c, d] over the residue field
            return MatFq(p, dig(0, 0, 0).v, dig(0, 1, -1).v, dig(1, 0, 1).v, dig(1, 1, 0).v);
        case Lattice::g00:
            return Sl2Fq(p, dig(0, 0, 0).v, dig(0, 1, 0).v, dig(1, 0, 0).v);
        case Lattice::g10:
            return Sl2Fq(p, dig(0, 0, 0).v, dig(0, 1, -1).v, dig(1, 0, 1).v);
        case Lattice::g01_half:
            // [z pi, x; y pi, -z pi] -> (x, y)
            return A2Point{dig(0, 1, 0), dig(1, 0, 1)};
        case Lattice::g01_minus_half:
            // [c, a/pi; b, -c] -> (a, b)
            return A2Point{dig(0, 1, -1), dig(1, 0, 0)};
    }
    throw std::logic_error("unreachable");
}

PadicMat y_rep(int p, int prec, const CellIndex& cell, long u, std::optional<long> eps_lift) {
    cell.require_valid();
    if (mod_pos(u, p) == 0) throw std::invalid_argument("y_rep: u must be a unit");
    long eps = eps_lift.value_or(smallest_nonsquare(p));
    if (sgn_mod(p, eps) != -1) throw std::invalid_argument("y_rep: eps must lift a non-residue");
    long pm = pow_long(p, prec);
    auto pw = [&](int e) {
        long r = 1;
        for (int i = 0; i < e; i++) r = mulmod(r, p, pm);
        return r;
    };
    long pn = pw(cell.n);
    long pn1 = pw(cell.n + 1);
    switch (cell.z) {
        case Cocycle::s0:
            return PadicMat(p, prec, {mulmod(pn, u, pm), 0, 0, -mulmod(pn, u, pm)});
        case Cocycle::s1:
            return PadicMat(p, prec, {0, mulmod(pn, u, pm), mulmod(mulmod(eps, pn, pm), u, pm), 0});
        case Cocycle::s2: {
            long pnm1 = pw(cell.n - 1);
            return PadicMat(p, prec,
                            {0, mulmod(pnm1, u, pm), mulmod(mulmod(eps, pn1, pm), u, pm), 0});
        }
        case Cocycle::t0:
            return PadicMat(p, prec, {0, mulmod(pn, u, pm), mulmod(pn1, u, pm), 0});
        case Cocycle::t1: {
            long einv = inv_mod(eps, pm);
            return PadicMat(p, prec, {0, mulmod(mulmod(eps, pn, pm), u, pm),
                                      mulmod(mulmod(einv, pn1, pm), u, pm), 0});
        }
        case Cocycle::t2:
            return PadicMat(p, prec,
                            {0, mulmod(pn, u, pm), mulmod(mulmod(eps, pn1, pm), u, pm), 0});
        default:
            return PadicMat(p, prec,
                            {0, mulmod(mulmod(eps, pn, pm), u, pm), mulmod(pn1, u, pm), 0});
    }
}

PadicMat x_rep(int p, int prec, Cocycle z, long v, std::optional<long> eps_lift) {
    if (z == Cocycle::s0) throw std::domain_error("x_rep: no representative for s0");
    if (mod_pos(v, p) == 0) throw std::invalid_argument("x_rep: v must be a unit");
    long eps = eps_lift.value_or(smallest_nonsquare(p));
    if (sgn_mod(p, eps) != -1) throw std::invalid_argument("x_rep: eps must lift a non-residue");
    long pm = pow_long(p, prec);
    long vv = mod_pos(v, pm);
    switch (z) {
        case Cocycle::s1:
            return PadicMat(p, prec, {0, vv, mulmod(eps, vv, pm), 0});
        case Cocycle::s2: {
            // [0, v/pi; eps pi v, 0]
            PadicMat m = PadicMat::zero(p, prec);
            m.entry(0, 1) = {PadicInt(p, prec, vv), 1};
            m.entry(1, 0) = {PadicInt(p, prec, mulmod(mulmod(eps, p, pm), vv, pm)), 0};
            return m;
        }
        case Cocycle::t0:
            return PadicMat(p, prec, {0, vv, mulmod(p, vv, pm), 0});
        case Cocycle::t1: {
            long einv = inv_mod(eps, pm);
            return PadicMat(p, prec,
                            {0, mulmod(eps, vv, pm), mulmod(mulmod(p, einv, pm), vv, pm), 0});
        }
        case Cocycle::t2:
            return PadicMat(p, prec, {0, vv, mulmod(mulmod(p, eps, pm), vv, pm), 0});
        default:
            return PadicMat(p, prec, {0, mulmod(eps, vv, pm), mulmod(p, vv, pm), 0});
    }
}

}  // namespace sl2char
