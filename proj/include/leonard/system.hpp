#pragma once

#include <array>
#include <optional>

#include "leonard/matrix.hpp"
#include "leonard/parray.hpp"
#include "leonard/poly.hpp"

namespace leonard {

/// A concrete matrix realization (A; E_0..E_d; A*; E*_0..E*_d) on the
/// coordinate space of dimension d+1, together with both eigenvalue lists.
/// Immutable after construction.
struct Realization {
    FieldCtxPtr ctx;
    int d = 0;
    Matrix A;
    Matrix A_star;
    std::vector<Matrix> E;
    std::vector<Matrix> E_star;
    std::vector<FieldElem> theta;
    std::vector<FieldElem> theta_star;
    /// Present when the realization was built from a parameter array.
    std::optional<ParameterArray> source;
};

struct DiagonalData {
    std::vector<FieldElem> a;
    std::vector<FieldElem> a_star;
};

struct TDCoefficients {
    FieldElem beta, gamma, gamma_star, varrho, varrho_star;
};

struct DaggerConjugator {
    /// Diagonal conjugator in the chosen dual eigenbasis.
    Matrix K;
    /// Columns are the dual eigenbasis vectors the representation uses.
    Matrix basis;
};

struct SplitDecomposition {
    std::vector<FieldElem> xi;
    /// basis[i] spans U_i; basis[i] = tau_i(A) xi.
    std::vector<std::vector<FieldElem>> basis;
};

struct VerificationReport {
    std::vector<Violation> failures;
    bool ok() const { return failures.empty(); }
    std::string summary() const;
};

/// Builds the split-form realization of a valid parameter array: A lower
/// bidiagonal with subdiagonal 1, A* upper bidiagonal with superdiagonal
/// varphi, idempotents by the product formula.
Realization build_split(const ParameterArray& pa);

/// Realization from arbitrary matrices with claimed eigenvalue lists; the
/// idempotents are derived (and validated) by the product formula.
Realization make_realization(const Matrix& a, const Matrix& a_star,
                             const std::vector<FieldElem>& theta,
                             const std::vector<FieldElem>& theta_star);

/// The relatives obtained by reversing either idempotent ordering or
/// swapping the pair.
Realization relative(const Realization& real, D4Generator g);

/// Representation of X with respect to the basis given by the columns of S.
Matrix rep_in_basis(const Matrix& x, const Matrix& s);

/// First nonzero column of a rank-one projector, scaled so its first
/// nonzero coordinate is 1.
std::vector<FieldElem> canonical_vector(const Matrix& projector);

/// Entry-exact check of the five defining conditions: multiplicity-freeness,
/// the idempotent algebra, and both zero/nonzero tridiagonal support
/// patterns.  Report-based so tamper tests can enumerate failures.
VerificationReport verify_leonard(const Realization& real);

/// The four one-sided support patterns (lower/upper for A on the dual
/// eigenbasis, lower/upper for A* on the eigenbasis), evaluated
/// independently.  Any three imply the fourth.
std::array<bool, 4> four_conditions(const Realization& real);

/// a_i = tr(A E*_i), a*_i = tr(A* E_i), with matrix-exact and (when a source
/// array is attached) formula cross-checks.
DiagonalData diagonal_sequences(const Realization& real);

enum class NormalizingWhich { E_star_0, E_0 };

/// Whether every product E_i E*_0 (resp. E*_i E_0) is nonzero; cross-checked
/// against the Krylov dimension test.
bool is_normalizing(const Realization& real, NormalizingWhich which);

/// The diagonal matrix K with K_00 = 1 and
/// K_ii = K_{i-1,i-1} B_{i-1,i} / B_{i,i-1}, where B represents A in a dual
/// eigenbasis; X -> K^{-1} X^t K fixes B, the diagonal representation of A*,
/// and every represented idempotent.
DaggerConjugator dagger_conjugator(const Realization& real);

/// Split decomposition from the canonical xi in E*_0 V.
SplitDecomposition split_decomposition(const Realization& real);

/// Reads the parameter array back off the realization: varphi from the
/// superdiagonal of A* in the basis {tau_i(A) xi}, phi likewise in
/// {eta_i(A) xi}.
ParameterArray extract_parray(const Realization& real);

/// Coefficients making both cubic commutator relations vanish; unique for
/// d >= 3, with the documented deterministic choice of the free parameters
/// for d <= 2.
TDCoefficients td_coefficients(const Realization& real);

/// [A, A^2 A* - beta A A* A + A* A^2 - gamma(A A* + A* A) - varrho A*].
Matrix td_commutator(const Matrix& a, const Matrix& a_star, const FieldElem& beta,
                     const FieldElem& gamma, const FieldElem& varrho);

/// Both wrap-around matrix identities (d >= 2).
bool wraparound_check(const Realization& real);

/// Builds the bidiagonal pair from arbitrary scalars, computes the cubic
/// commutator directly, and compares every entry against the five case
/// formulas.  theta entries out of range only ever appear with a zero
/// multiplier and are omitted.
bool commutator_entry_oracle(const std::vector<FieldElem>& theta,
                             const std::vector<FieldElem>& theta_star,
                             const std::vector<FieldElem>& varphi, const FieldElem& beta,
                             const FieldElem& gamma, const FieldElem& varrho);

/// The expected entries of the cubic commutator for the bidiagonal pair,
/// from the case formulas alone.
Matrix commutator_entry_formulas(const std::vector<FieldElem>& theta,
                                 const std::vector<FieldElem>& theta_star,
                                 const std::vector<FieldElem>& varphi, const FieldElem& beta,
                                 const FieldElem& gamma, const FieldElem& varrho);

/// Invertible G conjugating the split form into the reversed split form
/// (with phi on the superdiagonal); both identities verified exactly.
Matrix transition_G(const ParameterArray& pa);

/// Lower bidiagonal matrix with the given diagonal and all-ones subdiagonal.
Matrix lower_bidiagonal(const std::vector<FieldElem>& diag);
/// Upper bidiagonal matrix with the given diagonal and superdiagonal.
Matrix upper_bidiagonal(const std::vector<FieldElem>& diag,
                        const std::vector<FieldElem>& super);

} // namespace leonard
