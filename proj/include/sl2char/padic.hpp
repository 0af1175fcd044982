#pragma once

#include "sl2char/finite.hpp"
#include "sl2char/fq.hpp"
#include "sl2char/labels.hpp"

#include <array>
#include <optional>
#include <utility>
#include <variant>

namespace sl2char {

struct InsufficientPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated p-adic integer: a residue mod p^m together with its precision.
class PadicInt {
  public:
    PadicInt(int p, int prec, long value);

    int p() const { return p_; }
    int prec() const { return m_; }
    long value() const { return v_; }
    long modulus() const { return pm_; }
    bool is_exactly_zero_mod() const { return v_ == 0; }

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    PadicInt operator-() const { return PadicInt(p_, m_, pm_ - v_); }
    // Inverse of a unit at full precision.
    PadicInt inv() const;
    bool operator==(const PadicInt& o) const {
        return p_ == o.p_ && m_ == o.m_ && v_ == o.v_;
    }

    // Valuation: the exact ord when v != 0, otherwise "at least m".
    struct Ord {
        int value;      // exact ord, or the precision when flagged
        bool at_least;  // true when only a lower bound "ord >= value" is known
    };
    Ord ord() const;
    // Angular component: first nonzero digit; requires a nonzero residue.
    FqElem ac() const;

    // Decide ord >= t; throws InsufficientPrecision when unknowable.
    bool ord_at_least(int t) const;
    // Digit at position k (coefficient of p^k); requires k < prec.
    int digit(int k) const;

  private:
    int p_, m_;
    long v_, pm_;
};

// Valuation and angular component in one step; the component is absent
// when the residue vanishes at the working precision.
std::pair<PadicInt::Ord, std::optional<FqElem>> ord_ac(const PadicInt& x);

// 2x2 matrix whose entries are p^(-den) * (residue mod p^prec); negative
// powers appear in the edge lattices and in diag(p^l, p^-l).
class PadicMat {
  public:
    struct Entry {
        PadicInt val;
        int den;  // entry = p^(-den) * val, den >= 0
    };

    PadicMat(int p, int prec, std::array<long, 4> integral_entries);
    PadicMat(int p, int prec, std::array<Entry, 4> entries) : p_(p), m_(prec), e_(std::move(entries)) {}

    static PadicMat identity(int p, int prec);
    static PadicMat zero(int p, int prec);
    // diag(p^l, p^-l)
    static PadicMat a_lambda(int p, int prec, int l);

    int p() const { return p_; }
    int prec() const { return m_; }
    const Entry& entry(int i, int j) const { return e_[static_cast<size_t>(2 * i + j)]; }
    Entry& entry(int i, int j) { return e_[static_cast<size_t>(2 * i + j)]; }

    PadicMat operator+(const PadicMat& o) const;
    PadicMat operator-(const PadicMat& o) const;
    PadicMat operator*(const PadicMat& o) const;
    PadicMat scale(const Rat& r) const;  // r with p-power denominator only

    bool entries_integral() const;
    // Inverse of an integral matrix with unit determinant part.
    PadicMat inv_integral() const;
    PadicInt det_integral() const;
    PadicInt trace_integral() const;
    bool congruent(const PadicMat& o) const;

  private:
    static Entry add_entries(const Entry& x, const Entry& y);
    static Entry mul_entries(const Entry& x, const Entry& y);
    static Entry normalized(Entry e);
    int p_, m_;
    std::array<Entry, 4> e_;
};

enum class Lattice { G0, G1, Iwahori, g00, g10, g01_half, g01_minus_half };

// Membership per the entry-wise integrality conditions of each lattice;
// throws InsufficientPrecision rather than guessing.
bool lattice_member(const PadicMat& m, Lattice which);

// Modified Cayley transform (1 + Y/2)(1 - Y/2)^{-1} of a topologically
// nilpotent integral Y.
PadicMat cayley(const PadicMat& y);
// Its inverse 2(g - 1)(g + 1)^{-1} on topologically unipotent elements.
PadicMat cayley_inverse(const PadicMat& g);

struct A2Point {
    FqElem a, b;
};

using Reduction = std::variant<MatFq, Sl2Fq, A2Point>;

// Reduction maps to the finite quotients of the three standard lattices
// (group form at the two vertices, Lie form at vertices and the edge).
Reduction reduce(const PadicMat& m, Lattice which);

// Standard cell representatives.  eps_lift defaults to the least positive
// non-residue mod p and may be any unit lifting a non-residue.
PadicMat y_rep(int p, int prec, const CellIndex& cell, long u,
               std::optional<long> eps_lift = std::nullopt);
PadicMat x_rep(int p, int prec, Cocycle z, long v, std::optional<long> eps_lift = std::nullopt);

}  // namespace sl2char
