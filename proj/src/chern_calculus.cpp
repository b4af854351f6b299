#include "higgs_lab/chern_calculus.hpp"

#include "higgs_lab/error.hpp"

#include <utility>

namespace higgs_lab {

KahlerData KahlerData::curve(unsigned genus, long degH) {
    KahlerData kd;
    kd.n = 1;
    kd.hn = Rational(degH);
    kd.c1X_H = Rational(2 - 2 * static_cast<long>(genus));
    kd.genus = genus;
    kd.curve_degH = degH;
    kd.todd = {Rational(1 - static_cast<long>(genus)), Rational(degH)};
    return kd;
}

KahlerData KahlerData::surface(const Rational& hn, const Rational& c1X_H, const Rational& td2) {
    KahlerData kd;
    kd.n = 2;
    kd.hn = hn;
    kd.c1X_H = c1X_H;
    kd.todd = {td2, c1X_H / 2, hn};
    return kd;
}

KahlerData KahlerData::general(unsigned n, const Rational& hn, const Rational& c1X_H,
                               std::vector<Rational> todd) {
    KahlerData kd;
    kd.n = n;
    kd.hn = hn;
    kd.c1X_H = c1X_H;
    kd.todd = std::move(todd);
    return kd;
}

Rational KahlerData::volume() const { return hn / factorial(n); }

std::vector<std::string> KahlerData::check() const {
    std::vector<std::string> problems;
    if (n == 0) problems.emplace_back("dimension must be positive");
    if (hn <= 0) problems.emplace_back("hn = ∫c1(H)^n must be positive (H ample)");
    if (!todd.empty()) {
        if (todd.size() != n + 1) {
            problems.emplace_back("todd pairing vector must have n + 1 entries");
        } else {
            if (todd[n] != hn) problems.emplace_back("todd[n] must equal hn");
            if (n >= 1 && todd[n - 1] != c1X_H / 2) problems.emplace_back("todd[n-1] must equal c1X_H / 2");
        }
    }
    if (genus || curve_degH) {
        if (n != 1) problems.emplace_back("genus/degH only apply to curves");
        if (!genus || !curve_degH) {
            problems.emplace_back("curve ambient needs both genus and degH");
        } else {
            const long g = static_cast<long>(*genus);
            if (*curve_degH <= 0) problems.emplace_back("curve degH must be positive");
            if (c1X_H != Rational(2 - 2 * g)) problems.emplace_back("curve requires c1X_H = 2 - 2g");
            if (hn != Rational(*curve_degH)) problems.emplace_back("curve requires hn = degH");
            if (todd.size() == 2 && todd[0] != Rational(1 - g)) problems.emplace_back("curve requires todd[0] = 1 - g");
        }
    }
    return problems;
}

SurfaceChernInput SurfaceChernInput::from_classes(const Rational& c1H, const Rational& c1c1X,
                                                  const Rational& c1sq, const Rational& c2int) {
    SurfaceChernInput sc;
    sc.c1H = c1H;
    sc.c1c1X = c1c1X;
    sc.c1sq = c1sq;
    sc.c2int = c2int;
    sc.ch2 = (c1sq - 2 * c2int) / 2;
    return sc;
}

NumericalSheafData chi_curve(const KahlerData& kd, unsigned rank, long deg) {
    if (kd.n != 1 || !kd.genus || !kd.curve_degH) {
        throw Error(ErrorCode::PreconditionUnmet, "chi_curve needs curve ambient data");
    }
    const Rational r(rank);
    const Rational g(static_cast<long>(*kd.genus));
    NumericalSheafData s;
    s.rank = rank;
    s.degH = Rational(deg);
    s.chi = HilbertPolynomial{Rational(deg) + r * (1 - g), r * Rational(*kd.curve_degH)};
    s.torsion_free = rank > 0 || s.chi.is_zero();
    return s;
}

NumericalSheafData chi_surface(const KahlerData& kd, unsigned rank, const SurfaceChernInput& sc,
                               const Rational& td2) {
    if (kd.n != 2) throw Error(ErrorCode::PreconditionUnmet, "chi_surface needs a surface ambient");
    const Rational r(rank);
    NumericalSheafData s;
    s.rank = rank;
    s.degH = sc.c1H;
    s.chi = HilbertPolynomial{sc.ch2 + sc.c1c1X / 2 + r * td2, sc.c1H + r / 2 * kd.c1X_H, r / 2 * kd.hn};
    s.torsion_free = rank > 0 || s.chi.is_zero();
    return s;
}

NumericalSheafData chi_from_pairings(const KahlerData& kd, unsigned rank, const Rational& degH,
                                     const std::vector<Rational>& pairings, bool torsion_free) {
    if (pairings.size() > kd.n + 1) {
        throw Error(ErrorCode::MalformedPolynomial, "more pairings than ambient dimension allows");
    }
    std::vector<Rational> coeffs(pairings.size());
    for (std::size_t j = 0; j < pairings.size(); ++j) {
        coeffs[j] = pairings[j] / factorial(static_cast<unsigned>(j));
    }
    NumericalSheafData s;
    s.rank = rank;
    s.degH = degH;
    s.chi = HilbertPolynomial(std::move(coeffs));
    s.torsion_free = torsion_free;
    return s;
}

std::vector<std::string> check_coherence(const KahlerData& kd, const NumericalSheafData& s) {
    std::vector<std::string> problems;
    const unsigned n = kd.n;
    if (s.chi.degree() > static_cast<int>(n)) problems.emplace_back("chi has degree above the ambient dimension");
    if (s.rank > 0) {
        if (s.chi.coeff(n) != Rational(s.rank) * kd.hn / factorial(n)) {
            problems.emplace_back("k^n coefficient of chi must be rank·hn/n!");
        }
        const Rational expected = (s.degH + Rational(s.rank) / 2 * kd.c1X_H) / factorial(n - 1);
        if (s.chi.coeff(n - 1) != expected) {
            problems.emplace_back("k^(n-1) coefficient of chi must be (degH + rank/2·c1X_H)/(n-1)!");
        }
    } else if (!s.chi.is_zero()) {
        if (s.chi.coeff(n) != 0) problems.emplace_back("torsion chi must have degree below n");
        if (!eventually_less(HilbertPolynomial{}, s.chi)) problems.emplace_back("torsion chi must be eventually positive");
        if (s.torsion_free) problems.emplace_back("nonzero rank-0 sheaf cannot be torsion-free");
    }
    return problems;
}

HilbertPolynomial normalized_p(const NumericalSheafData& s) {
    if (s.rank == 0) throw Error(ErrorCode::ZeroRank, "normalized Hilbert polynomial needs positive rank");
    return scale(s.chi, Rational(1, s.rank));
}

Rational slope(const NumericalSheafData& s) {
    if (s.rank == 0) throw Error(ErrorCode::ZeroRank, "slope needs positive rank");
    return s.degH / Rational(s.rank);
}

Rational slope_from_p(const HilbertPolynomial& p, const KahlerData& kd, unsigned rank) {
    if (rank == 0) throw Error(ErrorCode::ZeroRank, "slope needs positive rank");
    if (p.degree() > static_cast<int>(kd.n) || p.coeff(kd.n) != kd.volume()) {
        throw Error(ErrorCode::MalformedPolynomial, "leading coefficient of p must be vol X = hn/n!");
    }
    return factorial(kd.n - 1) * p.coeff(kd.n - 1) - kd.c1X_H / 2;
}

NumericalSheafData sum_data(const NumericalSheafData& a, const NumericalSheafData& b) {
    NumericalSheafData s;
    s.rank = a.rank + b.rank;
    s.degH = a.degH + b.degH;
    s.chi = a.chi + b.chi;
    s.torsion_free = a.torsion_free && b.torsion_free;
    return s;
}

NumericalSheafData difference_data(const NumericalSheafData& a, const NumericalSheafData& b,
                                   bool torsion_free) {
    if (b.rank > a.rank) throw Error(ErrorCode::InvalidModel, "subobject rank exceeds ambient rank");
    NumericalSheafData s;
    s.rank = a.rank - b.rank;
    s.degH = a.degH - b.degH;
    s.chi = a.chi - b.chi;
    s.torsion_free = torsion_free;
    return s;
}

HilbertPolynomial rank_p_residual(const NumericalSheafData& e, const NumericalSheafData& f,
                                  const NumericalSheafData& q) {
    const HilbertPolynomial pe = normalized_p(e);
    const HilbertPolynomial pf = normalized_p(f);
    const HilbertPolynomial pq = normalized_p(q);
    return scale(pe - pf, Rational(f.rank)) + scale(pe - pq, Rational(q.rank));
}

Rational bogomolov_discriminant(const KahlerData& kd, unsigned rank, const SurfaceChernInput& sc) {
    if (kd.n != 2) throw Error(ErrorCode::PreconditionUnmet, "Bogomolov discriminant is paired on surfaces only");
    const Rational r(rank);
    return 2 * r * sc.c2int - (r - 1) * sc.c1sq;
}

} // namespace higgs_lab
