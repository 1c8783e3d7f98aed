#include "gaprec/witness.hpp"

#include <algorithm>
#include <numeric>

namespace gaprec {
namespace {

// Membership table for 0..bound of the monoid generated by an arbitrary
// positive integer list; no gcd requirement, so this also serves the greedy
// scan's intermediate candidate sets whose gap sets may still be infinite.
std::vector<char> members_up_to(const std::vector<std::int64_t>& gens, std::int64_t bound) {
  std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
  member[0] = 1;
  for (std::int64_t k = 1; k <= bound; ++k) {
    for (std::int64_t g : gens) {
      if (g > k) continue;
      if (member[static_cast<std::size_t>(k - g)]) {
        member[static_cast<std::size_t>(k)] = 1;
        break;
      }
    }
  }
  return member;
}

bool reaches_target(const std::vector<char>& member, const std::vector<std::int64_t>& targets) {
  return std::any_of(targets.begin(), targets.end(),
                     [&](std::int64_t x) { return member[static_cast<std::size_t>(x)] != 0; });
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

PairQuery make_query(std::int64_t order, std::vector<std::int64_t> target_set) {
  if (order < 1) throw InvalidQuery("order must be a positive integer");
  if (target_set.empty()) throw InvalidQuery("target set must be nonempty");
  for (std::int64_t x : target_set) {
    if (x < 1) throw InvalidQuery("target point " + std::to_string(x) + " is not positive");
  }
  std::sort(target_set.begin(), target_set.end());
  target_set.erase(std::unique(target_set.begin(), target_set.end()), target_set.end());
  return PairQuery{order, std::move(target_set)};
}

WitnessSearchResult find_witness(const PairQuery& query) {
  const PairQuery q = make_query(query.order, query.target_set);
  const std::int64_t order = q.order;
  const std::int64_t bound = std::max(order, q.target_set.back());

  std::vector<std::int64_t> chosen;
  std::vector<char> span = members_up_to(chosen, bound);  // just {0}
  for (std::int64_t n = 1; n <= order; ++n) {
    if (span[static_cast<std::size_t>(n)]) continue;  // redundant, adds nothing
    std::vector<std::int64_t> candidate = chosen;
    candidate.push_back(n);
    std::vector<char> candidate_span = members_up_to(candidate, bound);
    if (reaches_target(candidate_span, q.target_set)) continue;
    chosen = std::move(candidate);
    span = std::move(candidate_span);
  }

  WitnessSearchResult result;
  if (chosen.empty()) {
    result.failure_reason =
        "search failure: every candidate generator up to " + std::to_string(order) +
        " reaches the target set";
    return result;
  }
  std::int64_t g = 0;
  for (std::int64_t v : chosen) g = std::gcd(g, v);
  if (g != 1) {
    result.failure_reason = "search failure: best candidate generators {" + join(chosen) +
                            "} have gcd " + std::to_string(g);
    return result;
  }
  if (!span[static_cast<std::size_t>(order)]) {
    result.failure_reason = "search failure: order " + std::to_string(order) +
                            " is not reachable inside the candidate semigroup <" + join(chosen) +
                            ">";
    return result;
  }

  NumericalSemigroup s = new_semigroup(chosen);
  const std::int64_t pre_pad_count = static_cast<std::int64_t>(chosen.size());
  WeightVector weights = WeightVector::ones(chosen.size());
  std::optional<std::int64_t> pad_beta;
  if (s.generators().largest() < order) {
    auto padded = pad_order(s, weights, order, Rational(1));
    s = std::move(padded.first);
    weights = std::move(padded.second);
    pad_beta = order;
  }

  WitnessCertificate cert{q,
                          s.generators().elements(),
                          pad_beta,
                          weights,
                          build_recurrence(s, weights),
                          {},
                          pre_pad_count,
                          0};
  VanishingReport report = verify_vanishing(s, weights, default_truncation(s));
  cert.verified_zero_set = report.zeros;
  cert.frobenius_threshold = *s.frobenius();  // target set nonempty, so gaps exist
  result.certificate = std::move(cert);
  return result;
}

CertifyResult certify(const WitnessCertificate& cert) {
  CertifyResult result;
  auto fail = [&result](std::string why) { result.failures.push_back(std::move(why)); };

  try {
    make_query(cert.query.order, cert.query.target_set);
  } catch (const Error& e) {
    fail(e.what());
    return result;
  }

  std::optional<NumericalSemigroup> s;
  try {
    s.emplace(new_semigroup(cert.generators));
  } catch (const Error& e) {
    fail(std::string("generators invalid: ") + e.what());
    return result;
  }

  if (cert.recurrence.order != cert.query.order) {
    fail("recurrence order " + std::to_string(cert.recurrence.order) +
         " does not match the queried order " + std::to_string(cert.query.order));
  }
  if (cert.recurrence.alphas.empty() ||
      static_cast<std::int64_t>(cert.recurrence.alphas.size()) != cert.recurrence.order) {
    fail("alpha vector length does not match the recurrence order");
  } else if (cert.recurrence.alphas.back() == 0) {
    fail("leading alpha is zero, so the order is not exact");
  }

  if (cert.weights.size() != s->generators().count()) {
    fail("weights are not aligned with the generators");
    return result;
  }

  RecurrenceSpec rebuilt = build_recurrence(*s, cert.weights);
  if (rebuilt.order != cert.recurrence.order || rebuilt.alphas != cert.recurrence.alphas) {
    fail("stored recurrence differs from the one induced by the generators and weights");
  }

  VanishingReport report = verify_vanishing(*s, cert.weights, default_truncation(*s));
  if (!report.matches) {
    fail("recurrence zero set does not equal the gap set");
  }
  if (report.zeros != cert.verified_zero_set) {
    fail("stored zero set differs from the recomputed one");
  }
  for (std::int64_t x : cert.query.target_set) {
    if (!std::binary_search(report.zeros.begin(), report.zeros.end(), x)) {
      fail("target point " + std::to_string(x) + " is not a zero of the solution");
    }
  }

  const std::int64_t expected_dim =
      static_cast<std::int64_t>(s->generators().count()) - (cert.pad_beta ? 1 : 0);
  if (cert.dimension_lower_bound != expected_dim || cert.dimension_lower_bound < 1) {
    fail("dimension lower bound " + std::to_string(cert.dimension_lower_bound) +
         " does not equal the pre-padding generator count " + std::to_string(expected_dim));
  }
  if (cert.pad_beta && (*cert.pad_beta != cert.query.order ||
                        *cert.pad_beta != s->generators().largest())) {
    fail("pad element is not the queried order");
  }

  auto fr = s->frobenius();
  if (!fr) {
    fail("witness semigroup has no gaps, so it cannot cover a nonempty target set");
  } else if (cert.frobenius_threshold != *fr) {
    fail("stored threshold " + std::to_string(cert.frobenius_threshold) +
         " is not the Frobenius number " + std::to_string(*fr));
  }

  result.ok = result.failures.empty();
  return result;
}

}  // namespace gaprec
