#pragma once

#include <stdexcept>
#include <string>

namespace sl2char {

// The seven standard Cartan labels: s* unramified, t* ramified.
enum class Cocycle { s0, s1, s2, t0, t1, t2, t3 };

inline bool is_ramified(Cocycle z) { return z >= Cocycle::t0; }

inline const char* name(Cocycle z) {
    switch (z) {
        case Cocycle::s0: return "s0";
        case Cocycle::s1: return "s1";
        case Cocycle::s2: return "s2";
        case Cocycle::t0: return "t0";
        case Cocycle::t1: return "t1";
        case Cocycle::t2: return "t2";
        default: return "t3";
    }
}

enum class CuspLabel { sigma_theta, sigma_plus, sigma_minus };

// One of the six depth-zero supercuspidal labels pi(vertex, cusp).
struct ReprLabel {
    int vertex;  // 0 or 1
    CuspLabel cusp;

    bool operator==(const ReprLabel& o) const { return vertex == o.vertex && cusp == o.cusp; }
};

inline std::string name(const ReprLabel& pi) {
    const char* c = pi.cusp == CuspLabel::sigma_theta ? "theta"
                    : pi.cusp == CuspLabel::sigma_plus ? "+"
                                                       : "-";
    return std::string("pi(") + std::to_string(pi.vertex) + "," + c + ")";
}

inline const ReprLabel kAllRepr[6] = {
    {0, CuspLabel::sigma_theta}, {0, CuspLabel::sigma_plus}, {0, CuspLabel::sigma_minus},
    {1, CuspLabel::sigma_theta}, {1, CuspLabel::sigma_plus}, {1, CuspLabel::sigma_minus},
};

// Elliptic endoscopic labels: SL(2) and the three U(1) forms.
enum class EndoLabel { SL2, Ueps, Upi, Uepspi };

inline const char* name(EndoLabel h) {
    switch (h) {
        case EndoLabel::SL2: return "SL2";
        case EndoLabel::Ueps: return "U_eps";
        case EndoLabel::Upi: return "U_pi";
        default: return "U_epspi";
    }
}

// Index (z, n, nu) of one invariant set of topologically nilpotent elements.
struct CellIndex {
    Cocycle z;
    int n;
    int nu;  // +1 or -1

    bool valid() const {
        if (nu != +1 && nu != -1) return false;
        return is_ramified(z) ? n >= 0 : n >= 1;
    }
    void require_valid() const {
        if (!valid()) throw std::domain_error("cell index out of range: " + str());
    }
    std::string str() const {
        return std::string("(") + name(z) + "," + std::to_string(n) + "," +
               (nu > 0 ? "+" : "-") + ")";
    }
    bool operator==(const CellIndex& o) const { return z == o.z && n == o.n && nu == o.nu; }
};

// GL(1)-orbits of {xy = 0} in A^2: the origin, the two half-axes with first
// coordinate zero (V1), and the two with second coordinate zero (V2).
enum class VOrbit { V0, V1p, V1m, V2p, V2m };

inline const char* name(VOrbit v) {
    switch (v) {
        case VOrbit::V0: return "V0";
        case VOrbit::V1p: return "V1+";
        case VOrbit::V1m: return "V1-";
        case VOrbit::V2p: return "V2+";
        default: return "V2-";
    }
}

inline const VOrbit kAllVOrbits[5] = {VOrbit::V0, VOrbit::V1p, VOrbit::V1m, VOrbit::V2p,
                                      VOrbit::V2m};

}  // namespace sl2char
