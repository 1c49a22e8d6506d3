#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "leonard/intersection.hpp"
#include "leonard/parray.hpp"

namespace leonard {

enum class Family {
    QRacah,
    QHahn,
    DualQHahn,
    QuantumQKrawtchouk,
    QKrawtchouk,
    AffineQKrawtchouk,
    DualQKrawtchouk,
    Racah,
    Hahn,
    DualHahn,
    Krawtchouk,
    BannaiIto,
    Orphan,
};

Family family_from_name(const std::string& name); // "q-racah", "krawtchouk", ...
std::string family_name(Family f);
const std::vector<Family>& all_families();

/// Names of the scalars the family consumes, in a canonical order.
const std::vector<std::string>& family_param_names(Family f);

/// Per-family generator data: the named scalars plus the diameter and field.
struct FamilySpec {
    Family family;
    int d = 0;
    FieldCtxPtr ctx;
    std::map<std::string, FieldElem> params;

    const FieldElem& param(const std::string& name) const;
};

/// Instantiates the family's eigenvalue and split-sequence formulas and
/// validates the result; an array failing validation is a legitimate
/// rejection of the parameter choice (Inadmissible).
ParameterArray generate_parray(const FamilySpec& spec);

/// The family's displayed intersection numbers, duals included (via the
/// family's own exchange rule or its displayed dual formulas); a-sequences
/// completed through the row sums.
IntersectionData closed_intersection(const FamilySpec& spec);

/// Deterministic seeded search over small parameter pools; keeps the specs
/// whose generated array validates and whose closed forms evaluate.  Returns
/// up to count specs and throws ExhaustedSearch when none can be found.
std::vector<FamilySpec> sample_admissible(Family family, int d, const FieldCtxPtr& ctx,
                                          uint64_t seed, int count);

} // namespace leonard
