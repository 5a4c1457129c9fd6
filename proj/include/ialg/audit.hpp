#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ialg/structure.hpp"

namespace ialg {

/// Named integer parameters of one claim instance, in the claim's order.
using Params = std::vector<std::pair<std::string, std::int64_t>>;

nlohmann::json to_json(const Params& p);

/// Inclusive bounds per key, e.g. "n=5..30,m=2..4".
struct RangeSpec {
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> bounds;

  /// Throws ParseError on malformed text.
  static RangeSpec parse(const std::string& text);
  /// Keys from `overrides` replace ours.
  RangeSpec merged(const RangeSpec& overrides) const;
  std::pair<std::int64_t, std::int64_t> at(const std::string& key) const;
  std::string render() const;
};

struct TheoremClaim {
  std::string id;
  std::string statement;
  std::string domain;
  /// "asserted" or "asserted, refuted-in-print".
  std::string status = "asserted";
  RangeSpec defaults;
  /// Widest bounds accepted per key; wider requests raise RangeTooLarge.
  RangeSpec limits;
  std::vector<std::string> errata_refs;
  std::function<std::vector<Params>(const RangeSpec&)> instances;
  /// nullopt when the instance confirms the claim, else a counterexample.
  std::function<std::optional<nlohmann::json>(const Params&)> check;
};

const std::vector<TheoremClaim>& registry();
/// Throws UnknownClaim.
const TheoremClaim& lookup_claim(const std::string& id);

struct Refutation {
  Params params;
  nlohmann::json counterexample;
};

struct AuditReport {
  std::string claim;
  std::string range;
  std::uint64_t checked = 0;
  std::uint64_t confirmed = 0;
  std::vector<Refutation> refuted;
  std::vector<std::string> errata_refs;
  double runtime_ms = 0.0;
};

/// Sweeps the claim over `range` merged onto its defaults. Instances run in
/// parallel; the report lists them in parameter order.
AuditReport audit(const std::string& claim_id, const RangeSpec& range = {});

/// Re-runs one instance; used to replay refutations.
std::optional<nlohmann::json> replay(const std::string& claim_id, const Params& params);

nlohmann::json to_json(const AuditReport& r);

/// A printed value that disagrees with the library, with a check that the
/// disagreement is real.
struct Erratum {
  std::string id;
  std::string claim;  // related claim id, or empty
  std::string description;
  std::string printed;
  std::string computed;
  /// True iff the library still computes `computed` and it differs from `printed`.
  std::function<bool()> certify;
};

const std::vector<Erratum>& errata();
const Erratum& lookup_erratum(const std::string& id);

/// F_n = prod (p_i - 3) p_i^(a_i - 1) over n = prod p_i^a_i.
std::uint64_t fn_formula(std::int64_t n);

struct StrictCount {
  std::uint64_t brute = 0;
  std::uint64_t formula = 0;
  std::vector<std::int64_t> multipliers;  // the strictly non-commutative m
};

/// Number of valid m whose L_n(m) has no commuting pair of distinct
/// non-identity elements. Throws BadN unless n is odd and > 3.
StrictCount strict_noncommutative_count(std::int64_t n);

struct HomomorphismCounterexample {
  std::size_t component = 0;
  Index a = 0;
  Index b = 0;
};

struct HomomorphismResult {
  bool ok = true;
  std::optional<HomomorphismCounterexample> counterexample;
};

/// assignment[i] is the destination component of source component i (the
/// same destination may repeat); maps[i][x] is the image of element x.
/// Throws ArityMismatch for an unmapped component or a partial map.
HomomorphismResult check_homomorphism(const Structure& src, const Structure& dst,
                                      const std::vector<std::optional<std::size_t>>& assignment,
                                      const std::vector<std::vector<Index>>& maps);

}  // namespace ialg
