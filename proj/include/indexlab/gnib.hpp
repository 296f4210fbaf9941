#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indexlab/orbits.hpp"

namespace indexlab {

enum class VerdictStatus { equal_certified, unequal_certified, inconclusive };

std::string status_name(VerdictStatus s);

// Per-orbit verdict on ind(g_{e,0}, g_{e,1}) against the symmetric rank.
// The rank is an a-priori lower bound, so an upper bound meeting it is an
// exact equality certificate; "unequal" additionally needs the exact index.
struct OrbitVerdict {
  std::string orbit_id;
  std::size_t rank_target = 0;
  std::size_t index_upper = 0;
  bool exact = false;
  VerdictStatus status = VerdictStatus::inconclusive;
  RankCertificate certificate;
  std::size_t dim_ge0 = 0, dim_ge1 = 0;
  // dim (g_{e,1})_alpha at the adapted witness covector, for the families
  // whose proofs construct one explicitly
  std::optional<std::size_t> witness_fixed_dim;
  double ms = 0;
};

struct PairReport {
  PairFamily family = PairFamily::gl_so;
  std::size_t p = 0, q = 0;
  std::string label;
  std::size_t rank = 0;
  std::vector<OrbitVerdict> orbits;  // sorted by orbit id
  enum class Overall { gnib, no_gnib, inconclusive } overall = Overall::inconclusive;
  // isotropy representations are observable, so GNIB settles GIB as well
  bool gib_corollary = false;
  double ms = 0;
};

std::string overall_name(PairReport::Overall o);

OrbitVerdict gnib_at(const OrbitRep& rep, const RunConfig& cfg);
PairReport gnib_check(PairFamily family, std::size_t p, std::size_t q,
                      const RunConfig& cfg);

struct DeltaCertificate {
  DeltaReport report;
  bool no_gnib = false;  // positive excess certifies failure for the glued pair
};

DeltaCertificate delta_certificate(ClassicalType type, const Partition& partition,
                                   const RunConfig& cfg);

struct CharbonnelReport {
  Partition partition;
  std::string algebra;
  std::size_t ind_centralizer = 0;
  std::size_t rank_g = 0;
  bool equal = false;
};

CharbonnelReport charbonnel_check(ClassicalType type, const Partition& partition,
                                  const RunConfig& cfg);

// report renderers
nlohmann::json to_json(const OrbitVerdict& v);
nlohmann::json to_json(const PairReport& r);
nlohmann::json to_json(const DeltaCertificate& c);
nlohmann::json to_json(const CharbonnelReport& c);
std::string to_markdown(const PairReport& r);
std::string to_csv(const PairReport& r);

// named reproductions of the bundled examples; expected outcomes are loaded
// from the versioned data file
struct ReproduceResult {
  std::string id;
  bool pass = false;
  nlohmann::json details;
};

std::vector<std::string> reproduce_ids();
ReproduceResult reproduce(const std::string& id, const RunConfig& cfg,
                          std::size_t table_max = 6);
// aggregated run over all ids in canonical order; deterministic given the seed
nlohmann::json reproduce_all(const RunConfig& cfg, std::size_t table_max = 6);

// location of data/expected.json; overridable for relocated installs
void set_data_dir(const std::string& dir);
const std::string& data_dir();

} // namespace indexlab
