#pragma once

#include "ordsum/tnorm.hpp"

namespace ordsum {

/// Brute-force axiom check over all pairs and triples, written independently
/// of check_tnorm. Flags must agree with check_tnorm; witnesses are the first
/// found in row-major carrier order. Throws ClosureError on an entry outside
/// the carrier.
AxiomReport oracle_check(const OpTable& op);

/// Flag-level agreement of two reports.
bool same_flags(const AxiomReport& a, const AxiomReport& b);

}  // namespace ordsum
