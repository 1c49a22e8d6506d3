#pragma once

#include "leonard/system.hpp"

namespace leonard {

/// Tridiagonal data of A on the standard basis (and of A* on the dual
/// standard basis): b over 0..d-1, c over 1..d, a over 0..d, with the
/// convention c_0 = b_d = 0 baked into the row sums.
struct IntersectionData {
    std::vector<FieldElem> a;      // a[i] = a_i
    std::vector<FieldElem> b;      // b[i] = b_i, 0 <= i <= d-1
    std::vector<FieldElem> c;      // c[i-1] = c_i, 1 <= i <= d
    std::vector<FieldElem> a_star;
    std::vector<FieldElem> b_star;
    std::vector<FieldElem> c_star;

    bool operator==(const IntersectionData& o) const = default;
};

enum class IntersectionMethod { bbcc, cibiform, bici, bcform };

/// Representations of A and A* on the standard basis {E*_i xi}, xi in E_0 V:
/// A irreducible tridiagonal, A* diagonal (both asserted).
std::pair<Matrix, Matrix> standard_basis_rep(const Realization& real);

/// Reads the intersection numbers off the tridiagonal representation and the
/// dual ones off the swapped system; all structural identities asserted.
IntersectionData brute_intersection(const Realization& real);

/// Closed-form intersection numbers from the parameter array alone.  The
/// dual half always comes from applying the same route to the swapped array.
/// bici and bcform require d >= 2.  The a-sequences are always completed
/// through the row sums, so disagreements localize to b and c.
IntersectionData closed_forms(const ParameterArray& pa, IntersectionMethod method);

/// Three-term recurrences tying the intersection numbers to the eigenvalue
/// data: row sums, the rank-one recurrence, the four basis-transfer
/// families, and the solved b/c forms.
VerificationReport recurrence_identity_suite(const Realization& real,
                                             const IntersectionData& data);

/// Duality identities: partial-sum fractions, boundary closed forms,
/// eigenvalue recovery from (a,b) and (a,c), ratio duality, the b/c duality
/// products, partial-sum duality, corner cases, and the varphi_2 closed
/// forms.
VerificationReport duality_identity_suite(const ParameterArray& pa, const IntersectionData& data);

} // namespace leonard
