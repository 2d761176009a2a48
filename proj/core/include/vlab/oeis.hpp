#pragma once

// OEIS b-file client: network fetch with a local cache and bundled
// snapshots, plus prefix comparison against computed counts.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vlab/bigint.hpp"

namespace vlab {

enum class SequenceSource { network, cache, bundled };

const char* source_name(SequenceSource s);

struct SequenceRecord {
  std::string id;
  std::size_t offset = 0;  // index of terms[0]
  std::vector<BigInt> terms;
  SequenceSource source = SequenceSource::bundled;
};

/// A letter followed by six digits, e.g. "A113227".
bool valid_sequence_id(std::string_view id);

/// Parses "index value" lines; blank lines and '#' comments are skipped.
/// Indices must be consecutive.
SequenceRecord parse_bfile(std::string_view id, std::string_view text, SequenceSource source);
std::string to_bfile(const SequenceRecord& r);

struct FetchOptions {
  std::filesystem::path cache_dir;
  bool offline = false;
  long timeout_seconds = 10;
  int retries = 1;

  /// VLAB_CACHE_DIR (else $XDG_CACHE_HOME/vlab, else ~/.cache/vlab) and
  /// VLAB_OFFLINE=1.
  static FetchOptions from_env();
};

/// Network, then cache, then bundled snapshot. Successful downloads are
/// written to <cache_dir>/<id>.bfile. Throws DomainError for a malformed id
/// and "sequence unavailable offline: <id>" when every source fails.
SequenceRecord fetch(std::string_view id, const FetchOptions& options = FetchOptions::from_env());

/// Snapshot shipped with the library, if any.
std::optional<SequenceRecord> bundled_sequence(std::string_view id);

struct CompareReport {
  std::size_t compared = 0;  // overlapping terms examined
  std::optional<std::size_t> first_mismatch;  // sequence index
  BigInt expected;  // reference term at the mismatch
  BigInt actual;    // computed term at the mismatch

  bool agree() const { return !first_mismatch && compared > 0; }
};

/// computed[k] is compared with the reference term of index offset + k.
CompareReport compare(const SequenceRecord& reference, const std::vector<BigInt>& computed, std::size_t offset);
CompareReport compare(std::string_view id, const std::vector<BigInt>& computed, std::size_t offset,
                      const FetchOptions& options = FetchOptions::from_env());

}  // namespace vlab
