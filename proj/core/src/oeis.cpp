#include "vlab/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vlab/error.hpp"

#ifdef VLAB_HAVE_CURL
#include <curl/curl.h>
#endif

namespace vlab {

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  auto temp = path;
  temp += ".tmp" + std::to_string(std::hash<std::string>{}(text) & 0xffff);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << text;
    if (!out) return;
  }
  std::filesystem::rename(temp, path, ec);
  if (ec) std::filesystem::remove(temp, ec);
}

#ifdef VLAB_HAVE_CURL
std::size_t append_body(char* data, std::size_t size, std::size_t count, void* sink) {
  static_cast<std::string*>(sink)->append(data, size * count);
  return size * count;
}

std::optional<std::string> http_get(const std::string& url, long timeout_seconds) {
  CURL* curl = curl_easy_init();
  if (!curl) return std::nullopt;
  std::string body;
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, append_body);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  curl_easy_setopt(curl, CURLOPT_TIMEOUT, timeout_seconds);
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_USERAGENT, "vlab-oeis/0.1");
  const CURLcode rc = curl_easy_perform(curl);
  long status = 0;
  curl_easy_getinfo(curl, CURLINFO_RESPONSE_CODE, &status);
  curl_easy_cleanup(curl);
  if (rc != CURLE_OK || status != 200) return std::nullopt;
  return body;
}
#else
std::optional<std::string> http_get(const std::string&, long) { return std::nullopt; }
#endif

std::optional<SequenceRecord> try_parse(std::string_view id, const std::string& text, SequenceSource source) {
  try {
    return parse_bfile(id, text, source);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

const char* source_name(SequenceSource s) {
  switch (s) {
    case SequenceSource::network:
      return "network";
    case SequenceSource::cache:
      return "cache";
    case SequenceSource::bundled:
      return "bundled";
  }
  return "?";
}

bool valid_sequence_id(std::string_view id) {
  if (id.size() != 7 || !std::isalpha(static_cast<unsigned char>(id[0]))) return false;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

SequenceRecord parse_bfile(std::string_view id, std::string_view text, SequenceSource source) {
  SequenceRecord r{std::string(id), 0, {}, source};
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> next;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string index_text, value_text;
    if (!(fields >> index_text)) continue;
    if (!(fields >> value_text)) throw DomainError("b-file line without a value: '" + line + "'");
    std::size_t index = 0;
    try {
      index = std::stoul(index_text);
      if (!next) r.offset = index;
      if (next && index != *next) throw DomainError("b-file indices are not consecutive at " + index_text);
      r.terms.emplace_back(value_text);
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw DomainError("malformed b-file line: '" + line + "'");
    }
    next = index + 1;
  }
  if (r.terms.empty()) throw DomainError("b-file has no terms");
  return r;
}

std::string to_bfile(const SequenceRecord& r) {
  std::string out = "# " + r.id + "\n";
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    out += std::to_string(r.offset + k) + ' ' + r.terms[k].str() + '\n';
  }
  return out;
}

FetchOptions FetchOptions::from_env() {
  FetchOptions o;
  if (const char* dir = std::getenv("VLAB_CACHE_DIR"); dir && *dir) {
    o.cache_dir = dir;
  } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    o.cache_dir = std::filesystem::path(xdg) / "vlab";
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    o.cache_dir = std::filesystem::path(home) / ".cache" / "vlab";
  } else {
    o.cache_dir = std::filesystem::temp_directory_path() / "vlab";
  }
  if (const char* off = std::getenv("VLAB_OFFLINE"); off && std::string_view(off) == "1") o.offline = true;
  return o;
}

SequenceRecord fetch(std::string_view id, const FetchOptions& options) {
  if (!valid_sequence_id(id)) throw DomainError("malformed sequence id '" + std::string(id) + "'");
  const auto cache_file = options.cache_dir / (std::string(id) + ".bfile");
  if (!options.offline) {
    const std::string url = "https://oeis.org/" + std::string(id) + "/b" + std::string(id.substr(1)) + ".txt";
    for (int attempt = 0; attempt <= options.retries; ++attempt) {
      auto body = http_get(url, options.timeout_seconds);
      if (!body) continue;
      if (auto r = try_parse(id, *body, SequenceSource::network)) {
        write_atomically(cache_file, *body);
        return *r;
      }
    }
  }
  if (auto text = read_file(cache_file)) {
    if (auto r = try_parse(id, *text, SequenceSource::cache)) return *r;
  }
  if (auto r = bundled_sequence(id)) return *r;
  throw DomainError("sequence unavailable offline: " + std::string(id));
}

CompareReport compare(const SequenceRecord& reference, const std::vector<BigInt>& computed, std::size_t offset) {
  CompareReport report;
  for (std::size_t k = 0; k < computed.size(); ++k) {
    const std::size_t index = offset + k;
    if (index < reference.offset) continue;
    const std::size_t slot = index - reference.offset;
    if (slot >= reference.terms.size()) break;
    ++report.compared;
    if (reference.terms[slot] != computed[k]) {
      report.first_mismatch = index;
      report.expected = reference.terms[slot];
      report.actual = computed[k];
      break;
    }
  }
  return report;
}

CompareReport compare(std::string_view id, const std::vector<BigInt>& computed, std::size_t offset,
                      const FetchOptions& options) {
  return compare(fetch(id, options), computed, offset);
}

}  // namespace vlab
