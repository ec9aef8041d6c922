#pragma once
// Golden expectations: a line-oriented file of checks, each with an anchor,
// a tag for filtering, a check kind, parameters and the expected value.

#include <map>
#include <string>
#include <vector>

#include "wf/wavefront.hpp"

namespace wf {

struct GoldenEntry {
  std::string anchor, tag, check;
  std::map<std::string, std::string> params;
  std::string expected;
  int line = 0;
};

// "anchor | tag | check | k=v k=v | expected"; '#' starts a comment line.
std::vector<GoldenEntry> parse_golden(const std::string& text);
// data_dir()/golden/expected.golden
std::vector<GoldenEntry> load_golden();

enum class Outcome { pass, fail, skipped, error };
std::string to_string(Outcome o);

struct VerifyResult {
  std::string anchor, tag, check;
  Outcome outcome = Outcome::error;
  std::string computed, expected, note;
  double seconds = 0;
};

// Cover from parameters: preset, r, n, optional q (form scale) and kp=p,q.
Cover cover_from_params(const std::map<std::string, std::string>& params);

VerifyResult run_entry(const GoldenEntry& e, const ReportOptions& opt = {});
// Entries whose tag equals `filter` (all when empty), run on `threads`
// workers; results sorted by anchor.
std::vector<VerifyResult> run_golden(const std::vector<GoldenEntry>& entries, const std::string& filter = "",
                                     int threads = 0, const ReportOptions& opt = {});

}  // namespace wf
