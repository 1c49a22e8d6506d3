#pragma once

#include <optional>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// Outcome of analysing the three-term structure of a scalar sequence.
/// For sequences of length <= 3 (d <= 2) the ratio condition is vacuous and
/// beta is unconstrained; that state is explicit, never a sentinel value.
struct RecurrenceClass {
    bool unconstrained = false;
    std::optional<FieldElem> beta;
    std::optional<FieldElem> gamma;
    std::optional<FieldElem> varrho;
};

enum class RecurrenceLevel { Beta, BetaGamma, BetaGammaRho };

/// Closed-form shape of a beta-recurrent sequence.
enum class ClosedFormCase { Generic, Beta2, BetaMinus2, Beta0Char2 };

struct ClosedFormFit {
    ClosedFormCase kind;
    /// theta_i = alpha[0] + alpha[1]*g1(i) + alpha[2]*g2(i) where the basis
    /// functions depend on the case (q^i and q^-i, i and i(i-1)/2, ...).
    std::vector<FieldElem> alpha;
    std::optional<FieldElem> q;
    /// Field the fit lives in; an extension of the input field when q does.
    FieldCtxPtr ext_ctx;
};

/// beta from the common ratio (theta_{i-2}-theta_{i+1})/(theta_{i-1}-theta_i),
/// which equals beta+1 on 2 <= i <= d-1.  Unconstrained for d <= 2.
RecurrenceClass detect_beta(const std::vector<FieldElem>& seq);

/// Evaluates the defining condition of the requested level exactly over its
/// stated index range.  False is an answer, not an error.
bool classify_recurrence(const std::vector<FieldElem>& seq, RecurrenceLevel level,
                         const FieldElem& beta, const FieldElem* gamma = nullptr,
                         const FieldElem* varrho = nullptr);

/// gamma := theta_0 - beta*theta_1 + theta_2 and varrho from the quadratic
/// condition at i = 1, both verified over the full index range.
std::pair<FieldElem, FieldElem> fit_gamma_rho(const std::vector<FieldElem>& seq,
                                              const FieldElem& beta);

/// Fits theta_i = alpha1 + alpha2 q^i + alpha3 q^{-i} (or the degenerate
/// shapes at beta = 2, -2, or characteristic 2).  The generic case needs a q
/// with q + 1/q = beta, possibly living in an extension field.
/// In characteristic 2 the quadratic term i(i-1)/2 is read modulo 4: it is 0
/// for i = 0,1 and 1 for i = 2,3 (mod 4).  This convention is applied in
/// every closed form of this module.
ClosedFormFit closed_form_fit(const std::vector<FieldElem>& seq, const FieldElem& beta,
                              const std::optional<FieldElem>& q = std::nullopt);

/// Partial sums sum_{h<i} (theta_h - theta_{d-h}) / (theta_0 - theta_d) for
/// 0 <= i <= d+1.  Boundary values 0,1,...,1,0 and the palindrome property
/// are asserted.
std::vector<FieldElem> vartheta_sums(const std::vector<FieldElem>& theta);

/// True iff the direct sums match the case closed form at every index
/// 0 <= i <= d+1.  Requires d >= 3; the generic case needs q.
bool vartheta_closed_check(const std::vector<FieldElem>& theta, const FieldElem& beta,
                           const std::optional<FieldElem>& q = std::nullopt);

/// Products psi_i = prod_{h=0}^{i-2}(theta_i - theta_{h+1})/(theta_{i+1} - theta_h)
/// for 1 <= i <= d-1 (entry [i-1] of the result); psi_1 = 1 is asserted.
std::vector<FieldElem> psi_products(const std::vector<FieldElem>& theta);

/// True iff the direct psi products match the case closed form for every
/// 1 <= i <= d-1.  Requires d >= 3; the generic case needs q.
bool psi_closed_check(const std::vector<FieldElem>& theta, const FieldElem& beta,
                      const std::optional<FieldElem>& q = std::nullopt);

/// P(x,y) = x^2 - beta*x*y + y^2 - gamma*(x+y) - varrho.
FieldElem p_eval(const FieldElem& beta, const FieldElem& gamma, const FieldElem& varrho,
                 const FieldElem& x, const FieldElem& y);

} // namespace leonard
