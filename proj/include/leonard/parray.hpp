#pragma once

#include <string>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// The complete isomorphism invariant of a Leonard system:
/// eigenvalues, dual eigenvalues, first and second split sequence.
struct ParameterArray {
    FieldCtxPtr ctx;
    int d = 0;
    std::vector<FieldElem> theta;      // d+1 entries
    std::vector<FieldElem> theta_star; // d+1 entries
    std::vector<FieldElem> varphi;     // d entries, varphi[i-1] = varphi_i
    std::vector<FieldElem> phi;        // d entries

    bool operator==(const ParameterArray& o) const;
};

struct Violation {
    std::string condition; // "PA1".."PA5" or "structure"
    int index;             // witness index, -1 when global
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
    std::string summary() const;
};

/// Checks the five classification conditions.  An empty report means the
/// array is the parameter array of a (unique) Leonard system.  d = 0 arrays
/// are vacuously valid.
ValidationReport validate(const ParameterArray& pa);

/// Throws InvalidParameterArray when validate() reports anything.
void require_valid(const ParameterArray& pa);

/// One of the three symmetry generators: reverse the eigenvalue ordering
/// (Down), reverse the dual ordering (down), or swap the pair (star).
enum class D4Generator { down, Down, star };

/// A free word over the generators, reduced on the fly using the involution
/// relations gg = id.
struct D4Element {
    std::vector<D4Generator> word;
    static D4Element parse(const std::string& text); // "down.star.Down"
    void append(D4Generator g);
    std::string str() const;
};

/// Applies the generators left to right and revalidates the result.
ParameterArray transform_d4(const ParameterArray& pa, const D4Element& g);

/// Rebuilds the full array from varphi_1 and the eigenvalue data; the split
/// sequences are pinned uniquely.  Nonzero-ness of the rebuilt sequences is
/// a genuine admissibility condition (PA2Failure).
ParameterArray complete_from_phi1(const FieldElem& varphi1, const std::vector<FieldElem>& theta,
                                  const std::vector<FieldElem>& theta_star);

/// vartheta_i = varphi_i - (theta*_i - theta*_0)(theta_{i-1} - theta_d) for
/// 1 <= i <= d, padded with vartheta_0 = vartheta_{d+1} = 0.
std::vector<FieldElem> vartheta_of(const ParameterArray& pa);

} // namespace leonard
