#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaprec/recurrence.hpp"
#include "gaprec/semigroup.hpp"

namespace gaprec {

/// A pair (order M, finite target set I) asking for an order-M recurrence
/// with a non-trivial solution vanishing on all of I.
struct PairQuery {
  std::int64_t order = 0;
  std::vector<std::int64_t> target_set;  // sorted, deduplicated, all >= 1
};

/// Validates and canonicalizes a query; throws InvalidQuery.
PairQuery make_query(std::int64_t order, std::vector<std::int64_t> target_set);

/// Constructive evidence that a vanishing recurrence of the requested order
/// exists: a semigroup whose gap set contains the target set, weights, the
/// recurrence they induce, and its independently re-checked zero set.
struct WitnessCertificate {
  PairQuery query;
  std::vector<std::int64_t> generators;   // final list, including the pad element
  std::optional<std::int64_t> pad_beta;   // set when the order was reached by padding
  WeightVector weights;
  RecurrenceSpec recurrence;
  std::vector<std::int64_t> verified_zero_set;
  std::int64_t dimension_lower_bound = 0;  // generator count before padding
  std::int64_t frobenius_threshold = 0;    // every order above this admits a witness
};

/// Search result. An absent certificate means this search strategy failed;
/// it is never a proof that no witness exists.
struct WitnessSearchResult {
  std::optional<WitnessCertificate> certificate;
  std::string failure_reason;

  bool found() const { return certificate.has_value(); }
};

/// Greedy search: scan n = 1..M, keeping n when it is not already reachable
/// from the chosen generators and adding it keeps every target point outside
/// the generated semigroup. The scan lands on the inclusion-maximal
/// semigroup inside [1, M] avoiding the target set; the order is then raised
/// to exactly M by padding when needed.
WitnessSearchResult find_witness(const PairQuery& query);

struct CertifyResult {
  bool ok = false;
  std::vector<std::string> failures;
};

/// Re-derives everything in the certificate from scratch (sieve, recurrence,
/// vanishing check) and compares with the stored fields.
CertifyResult certify(const WitnessCertificate& cert);

}  // namespace gaprec
