#include <map>

#include "vlab/oeis.hpp"

namespace vlab {

namespace {

// Generated locally by exhaustive enumeration of pattern avoiders, n = 0..10.
const std::map<std::string, std::vector<const char*>, std::less<>>& snapshots() {
  static const std::map<std::string, std::vector<const char*>, std::less<>> data{
      // (1-23-4)-avoiding permutations
      {"A113227", {"1", "1", "2", "6", "23", "105", "549", "3207", "20577", "143239", "1071704"}},
      // (12-34)-avoiding permutations
      {"A113226", {"1", "1", "2", "6", "23", "107", "585", "3669", "25932", "203768", "1761109"}},
  };
  return data;
}

}  // namespace

std::optional<SequenceRecord> bundled_sequence(std::string_view id) {
  const auto& data = snapshots();
  auto it = data.find(id);
  if (it == data.end()) return std::nullopt;
  SequenceRecord r{std::string(id), 0, {}, SequenceSource::bundled};
  for (const char* t : it->second) r.terms.emplace_back(t);
  return r;
}

}  // namespace vlab
