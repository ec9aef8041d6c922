#include "wf/datafile.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wf/intmath.hpp"

#ifndef WF_DEFAULT_DATA_DIR
#define WF_DEFAULT_DATA_DIR "data"
#endif

namespace wf {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string seal(const std::string& body) { return body + "checksum " + fnv1a_hex(body) + "\n"; }

std::string unseal(const std::string& text, const std::string& what) {
  auto k = text.rfind("checksum ");
  if (k == std::string::npos) throw InputError(what + ": no checksum line");
  std::string body = text.substr(0, k);
  std::string sum = text.substr(k + 9);
  while (!sum.empty() && std::isspace(static_cast<unsigned char>(sum.back()))) sum.pop_back();
  if (fnv1a_hex(body) != sum) throw InputError(what + ": checksum mismatch");
  return body;
}

std::string data_dir() {
  const char* e = std::getenv("WF_DATA_DIR");
  return e && *e ? std::string(e) : std::string(WF_DEFAULT_DATA_DIR);
}

std::string read_data_file(const std::string& relative) {
  std::string path = data_dir() + "/" + relative;
  std::ifstream in(path);
  if (!in) throw InputError("missing data file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wf
