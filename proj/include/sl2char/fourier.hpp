#pragma once

#include "sl2char/finite.hpp"
#include "sl2char/labels.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sl2char {

// Function on sl(2,F_q), indexed by (z, x, y) for [z x; y -z].
class FnSl2 {
  public:
    explicit FnSl2(int p);
    int p() const { return p_; }
    CycloNum& at(int z, int x, int y);
    const CycloNum& at(int z, int x, int y) const;
    const CycloNum& at(const Sl2Fq& m) const { return at(m.z, m.x, m.y); }
    bool operator==(const FnSl2& o) const { return p_ == o.p_ && v_ == o.v_; }

  private:
    size_t idx(int z, int x, int y) const;
    int p_;
    std::vector<CycloNum> v_;
};

// Function on A^2(F_q).
class FnA2 {
  public:
    explicit FnA2(int p);
    int p() const { return p_; }
    CycloNum& at(int a, int b);
    const CycloNum& at(int a, int b) const;
    bool operator==(const FnA2& o) const { return p_ == o.p_ && v_ == o.v_; }

  private:
    int p_;
    std::vector<CycloNum> v_;
};

// Character sums with kernel zeta^<.,.>; not unitary.  The sl(2) pairing is
// the trace form <Y,Z> = xb + ya + 2zc; the A^2 pairing is (x,y),(a,b) |->
// xb + ya.  Double transform gives q^3 f(-Y) resp. q^2 f(-x,-y).
FnSl2 ft_sl2(const FnSl2& f);
FnA2 ft_a2(const FnA2& f);

// Normalized indicator of the split-form orbit {xy + z^2 = eps*v^2} in
// sl(2,F_q), of cardinality q(q-1); value 1/(q(q-1)) on the orbit.
FnSl2 phi_orbit_sl2(int p, const FqElem& v, std::optional<int> eps = std::nullopt);

// Normalized indicator of the GL(1)-orbit attached to a ramified label:
// {xy = v^2} or {xy = eps*v^2} with the sign of x pinned; value 2/(q-1).
FnA2 phi_orbit_a2(Cocycle z, int p, const FqElem& v, std::optional<int> eps = std::nullopt);

// Q_T = (1-q) * phihat on the full nilpotent cone, for every nonzero v.
bool springer_check(int p, std::optional<int> eps = std::nullopt);

// Which orbit of {xy=0} a point of A^2 lies on, if any.
std::optional<VOrbit> orbit_of(int p, int a, int b);

// Restriction of the transform of phi_orbit_a2 to the five orbits; throws
// if the transform fails to be constant on one of them.
std::map<VOrbit, CycloNum> phihat_a2_on_orbits(Cocycle z, int p, const FqElem& v,
                                               std::optional<int> eps = std::nullopt);

// Transforms of the alternating combinations (t0 - t1) +/- (t2 - t3),
// restricted to orbits and expressed in Q(g).  These are the raw character
// sums; both combinations carry the factor g on their supporting axis.
std::map<VOrbit, QuadGNum> phi01_hat(int which, int p, std::optional<int> eps = std::nullopt,
                                     const std::optional<FqElem>& v = std::nullopt);

}  // namespace sl2char
