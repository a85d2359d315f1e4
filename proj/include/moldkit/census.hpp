#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moldkit/mold.hpp"

namespace moldkit {

struct CensusKey {
  std::uint32_t q = 2;
  std::uint32_t m = 1;
  Mode mode = Mode::Monoid;

  std::string to_string() const;
  friend bool operator==(const CensusKey&, const CensusKey&) = default;
};

struct CensusOptions {
  std::uint64_t budget = 10'000'000;  // maximum number of tuples enumerated
  unsigned threads = 0;               // 0: hardware concurrency
};

struct StratumCounts {
  std::map<Mold, std::uint64_t> points;
  std::map<Mold, std::uint64_t> orbits;  // empty unless orbits were computed
  std::uint64_t total = 0;
  bool has_orbits = false;
  std::uint64_t nonfree_air_orbits = 0;  // air orbits whose stabilizer in PGL2 is nontrivial

  friend bool operator==(const StratumCounts&, const StratumCounts&) = default;
};

/// All 2x2 matrices over F_q in lexicographic entry order, PGL2(F_q), and
/// the conjugation action on matrix indices.
class FiniteGeometry {
 public:
  explicit FiniteGeometry(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }
  std::uint32_t matrix_count() const { return static_cast<std::uint32_t>(mats_.size()); }
  const Mat2<Fp>& matrix(std::uint32_t idx) const { return mats_[idx]; }
  std::uint32_t index_of(const Mat2<Fp>& a) const;

  /// Invertible matrices with first nonzero entry 1, one per class mod scalars.
  const std::vector<Mat2<Fp>>& pgl() const { return pgl_; }
  const std::vector<std::uint32_t>& invertible() const { return invertible_; }

  /// Index of g^{-1} A g for g = pgl()[g_idx].
  std::uint32_t conj(std::size_t g_idx, std::uint32_t a_idx) const;

 private:
  std::uint32_t q_;
  FieldSpec spec_;
  std::vector<Mat2<Fp>> mats_;
  std::vector<Mat2<Fp>> pgl_;
  std::vector<Mat2<Fp>> pgl_inv_;
  std::vector<std::uint32_t> invertible_;
  std::vector<std::uint32_t> conj_table_;  // empty when too large; then computed on demand
};

/// Classifies every tuple of Rep_2(free monoid/group of rank m)(F_q).
StratumCounts stratum_census(const CensusKey& key, const CensusOptions& opts = {});

/// Point counts plus PGL2-orbit counts per stratum, via lexicographically
/// least orbit representatives.
StratumCounts orbit_census(const CensusKey& key, const CensusOptions& opts = {});

enum class CheckStatus { Pass, Fail, Skipped, Flagged };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status;
  std::string detail;
  std::string source;  // the structural claim the check tests

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  CensusKey key;
  StratumCounts counts;
  std::vector<Check> checks;

  bool passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

Report consistency_report(const CensusKey& key, const CensusOptions& opts = {});

/// Number of tuples enumerated for a key: q^{4m} or |GL2(F_q)|^m.
std::uint64_t tuple_count(const CensusKey& key);
std::uint64_t gl2_order(std::uint32_t q);
std::uint64_t pgl2_order(std::uint32_t q);

/// Detailed orbit data used by the report and by the acceptance suite.
struct OrbitDetail {
  StratumCounts counts;
  /// (invariant vector values, canonical orbit key) for every semi-simple tuple.
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> semisimple;
};

OrbitDetail orbit_detail(const CensusKey& key, const CensusOptions& opts = {});

/// On-disk cache: one self-describing text record per key. Records from a
/// different code version or with a bad checksum are ignored.
class CensusCache {
 public:
  explicit CensusCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(const CensusKey& key) const;
  std::optional<Report> load(const CensusKey& key) const;
  void store(const Report& r) const;

  static std::string serialize(const Report& r);
  static std::optional<Report> deserialize(const std::string& text);

 private:
  std::filesystem::path dir_;
};

inline constexpr const char* kCensusVersion = "moldkit-census/1";

}  // namespace moldkit
