#pragma once

#include <random>
#include <string>
#include <vector>

#include "cwr/cohen.hpp"
#include "cwr/lang.hpp"
#include "cwr/morphism.hpp"
#include "cwr/valued.hpp"

namespace cwr {

// Seeded generators for test and audit inputs. Members are produced through
// the digit parametrization, so they really lie in the Cohen ring; valued
// samples come back in normal form with a nonzero residue unit.
using Rng = std::mt19937_64;

Fq sample_fq(Rng& g, const FieldPtr& k);
FieldElem sample_field_elem(Rng& g, const FieldPtr& k, u32 deg_cap = 2);
FieldElem sample_nonzero_field_elem(Rng& g, const FieldPtr& k, u32 deg_cap = 2);
WittVector sample_witt(Rng& g, const FieldPtr& k, u32 m, u32 deg_cap = 2);
WittVector sample_member(Rng& g, const CohenRingModel& model, u32 deg_cap = 2);
ValuedElement sample_valued(Rng& g, const FieldPtr& k, u32 precision,
                            long long val_lo = -2, long long val_hi = 2,
                            u32 deg_cap = 1);

// r of the field's variables in a random order, each multiplied by a random
// nonzero p-th power; r must not exceed the variable count.
std::vector<FieldElem> sample_p_independent(Rng& g, const FieldPtr& k, u32 r);

// Ring tuple over a p-independent residue tuple plus a field element that is
// in the span of the tuple for about half the draws and arbitrary otherwise.
EnrichmentSample sample_enrichment(Rng& g, const CohenRingModel& model, u32 r);

Assignment sample_assignment(Rng& g, const CohenRingModel& model,
                             const std::vector<std::string>& ring_vars,
                             const std::vector<std::string>& field_vars,
                             u32 deg_cap = 2);

}  // namespace cwr
