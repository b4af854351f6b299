#pragma once

#include "higgs_lab/hilbert_poly.hpp"
#include "higgs_lab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace higgs_lab {

/// Fixed ambient data of the polarized manifold (X, H). Only intersection
/// pairings are stored.
///
/// hn         = ∫ c1(H)^n
/// c1X_H      = ∫ c1(X) · c1(H)^(n-1)
/// todd[j]    = ∫ c1(H)^j · td(X)_(n-j), j = 0..n (optional for n >= 2)
///
/// On a curve, todd = {1 - g, degH}, hn = degH and c1X_H = 2 - 2g.
struct KahlerData {
    unsigned n = 1;
    Rational hn{1};
    Rational c1X_H{0};
    std::optional<unsigned> genus;
    std::optional<long> curve_degH;
    std::vector<Rational> todd;

    static KahlerData curve(unsigned genus, long degH);
    /// td2 = ∫ td_2(X) = χ(O_X).
    static KahlerData surface(const Rational& hn, const Rational& c1X_H, const Rational& td2);
    static KahlerData general(unsigned n, const Rational& hn, const Rational& c1X_H,
                              std::vector<Rational> todd = {});

    /// hn / n!
    Rational volume() const;

    /// Empty iff hn > 0 and the curve/Todd consistency relations hold.
    std::vector<std::string> check() const;

    friend bool operator==(const KahlerData&, const KahlerData&) = default;
};

/// Numerical shadow of one sheaf: rank, H-degree and χ(E(k)).
struct NumericalSheafData {
    unsigned rank = 0;
    Rational degH{0};
    HilbertPolynomial chi;
    bool torsion_free = true;

    static NumericalSheafData zero() { return {}; }
    bool is_zero() const { return rank == 0 && degH == 0 && chi.is_zero(); }

    friend bool operator==(const NumericalSheafData&, const NumericalSheafData&) = default;
};

/// Chern pairings of a sheaf on a surface.
struct SurfaceChernInput {
    Rational c1H{0};    ///< ∫ c1(E)·c1(H)
    Rational ch2{0};    ///< ∫ ch2(E)
    Rational c1c1X{0};  ///< ∫ c1(E)·c1(X)
    Rational c1sq{0};   ///< ∫ c1(E)^2
    Rational c2int{0};  ///< ∫ c2(E)

    /// Fills ch2 = (c1sq - 2 c2) / 2.
    static SurfaceChernInput from_classes(const Rational& c1H, const Rational& c1c1X,
                                          const Rational& c1sq, const Rational& c2int);
    bool consistent() const { return ch2 == (c1sq - 2 * c2int) / 2; }

    friend bool operator==(const SurfaceChernInput&, const SurfaceChernInput&) = default;
};

/// χ(E(k)) = deg + rank·degH·k + rank·(1 - g) on a curve.
NumericalSheafData chi_curve(const KahlerData& kd, unsigned rank, long deg);

/// Riemann–Roch on a surface:
/// χ(E(k)) = (rank/2)·hn·k² + (c1H + rank/2·c1X_H)·k + ch2 + c1c1X/2 + rank·td2.
NumericalSheafData chi_surface(const KahlerData& kd, unsigned rank, const SurfaceChernInput& sc,
                               const Rational& td2);

/// Entry point for any dimension: χ(E(k)) = Σ_j pairings[j] · k^j / j!.
NumericalSheafData chi_from_pairings(const KahlerData& kd, unsigned rank, const Rational& degH,
                                     const std::vector<Rational>& pairings, bool torsion_free = true);

/// Violations of the leading-coefficient relations for `s` on `kd`.
std::vector<std::string> check_coherence(const KahlerData& kd, const NumericalSheafData& s);

/// p_E = χ(E(k)) / rank. Throws ZeroRank.
HilbertPolynomial normalized_p(const NumericalSheafData& s);

/// μ = degH / rank. Throws ZeroRank.
Rational slope(const NumericalSheafData& s);

/// Reads μ back from the k^(n-1) coefficient of p. Throws ZeroRank, or
/// MalformedPolynomial when the k^n coefficient is not vol X.
Rational slope_from_p(const HilbertPolynomial& p, const KahlerData& kd, unsigned rank);

/// Componentwise sum (direct sum or extension).
NumericalSheafData sum_data(const NumericalSheafData& a, const NumericalSheafData& b);

/// a - b, the quotient in an extension 0 → b → a → a/b → 0. The torsion flag
/// of the result is left to the caller.
NumericalSheafData difference_data(const NumericalSheafData& a, const NumericalSheafData& b,
                                   bool torsion_free);

/// rk F·(p_E − p_F) + rk Q·(p_E − p_Q); the zero polynomial for consistent
/// extension data.
HilbertPolynomial rank_p_residual(const NumericalSheafData& e, const NumericalSheafData& f,
                                  const NumericalSheafData& q);

/// 2·r·c2 − (r − 1)·c1², paired against ω^(n-2) (n = 2 only).
Rational bogomolov_discriminant(const KahlerData& kd, unsigned rank, const SurfaceChernInput& sc);

} // namespace higgs_lab
